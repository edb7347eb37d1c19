#pragma once

#include <optional>
#include <utility>

namespace xy {

struct CriticalResult {
    std::optional<double> value;        // temperature in the units of J
    std::pair<double, double> bracket;  // temperature interval examined
    bool converged;                     // false: bracket cap hit or multiple sign changes
};

// field ratio of the zero-temperature level crossing, sqrt(1 - gamma^2)
double eta_critical(double gamma);

// temperature above which the thermal concurrence is identically zero
CriticalResult t1_critical(double gamma, double eta, double J);

// temperature above which the resource stops beating the classical fidelity
CriticalResult t2_critical(double gamma, double eta, double J);

// large-field limit of t2_critical: eta*J / ln(2*eta/gamma)
double t2_asymptote(double gamma, double eta, double J);

}  // namespace xy
