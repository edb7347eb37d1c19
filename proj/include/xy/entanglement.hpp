#pragma once

#include <array>

#include "xy/smallmat.hpp"
#include "xy/spinmodel.hpp"

namespace xy {

// Bell basis: (|00>+|11>)/s2, (|01>+|10>)/s2, (|01>-|10>)/s2, (|00>-|11>)/s2
const Vec4& bell_state(int i);

// <Psi_i|rho|Psi_i> for the four Bell states, clamped to [0,1]
std::array<double, 4> bell_overlaps(const DensityMatrix& rho);

// fully entangled fraction: the largest of the four Bell overlaps
double fef(const DensityMatrix& rho);

// Wootters concurrence of an arbitrary two-qubit state
double concurrence(const DensityMatrix& rho);

// Closed thermal-state forms. All stay finite and keep correct signs for
// beta*|J| far beyond the bare exp range (internally rescaled by the largest
// Boltzmann weight).
std::array<double, 4> thermal_lambdas(const ModelParams& p);  // descending
std::array<double, 4> thermal_bell_overlaps(const ModelParams& p);
double thermal_concurrence_closed(const ModelParams& p);
double fef_closed(const ModelParams& p);

namespace detail {
// positive exactly where the thermal concurrence is positive
double wootters_margin(double gamma, double eta, double J, double beta);
// positive exactly where the largest thermal Bell overlap exceeds 1/2
double usefulness_margin(double gamma, double eta, double J, double beta);
}  // namespace detail

}  // namespace xy
