#pragma once

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "xy/spinmodel.hpp"

namespace xy {

enum class SweepVariable { Eta, Gamma, Temperature, Xi };

enum class Quantity {
    Concurrence,
    Fef,
    MaxFidelity,
    EntFidelity,
    T1,
    T2,
    PartialFidelity,
};

const char* quantity_name(Quantity q);
std::optional<Quantity> quantity_from_name(std::string_view name);
std::optional<SweepVariable> variable_from_name(std::string_view name);

struct SweepSpec {
    SweepVariable variable = SweepVariable::Eta;
    double start = 0.0;
    double stop = 1.0;
    int steps = 200;
    ModelParams fixed;  // parameters not being swept
    double xi = 0.0;    // input angle used when it is not the swept variable
    std::vector<Quantity> quantities;

    void validate() const;  // throws std::invalid_argument
};

// One output row. T is NaN for the temperature-independent critical rows,
// xi is set only when the partially known input is involved, and stderr_
// only for Monte Carlo estimates.
struct SweepRecord {
    double gamma = 0.0;
    double eta = 0.0;
    double J = 1.0;
    double T = 0.0;
    std::optional<double> xi;
    Quantity quantity = Quantity::Concurrence;
    std::optional<double> value;
    std::optional<double> stderr_;
    bool converged = true;
};

// Evaluates all requested quantities on the inclusive grid; points run in
// parallel but records are stored by index, so output order and content are
// independent of the thread count.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_json(std::ostream& out, const std::vector<SweepRecord>& records);

}  // namespace xy
