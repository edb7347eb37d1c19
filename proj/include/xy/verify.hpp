#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xy {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // largest observed deviation, in the check's units
    double tol = 0.0;    // pass means worst < tol
    std::string note;
};

// Cross-checks every closed form in the library against an independent
// brute-force evaluation: matrix exponential vs spectral thermal state,
// Wootters procedure vs the closed concurrence, quadrature and Monte Carlo
// vs the closed fidelities, and the two-qubit channel vs the closed output
// fidelity. grid_points controls the random-grid checks; seed fixes them.
std::vector<CheckResult> run_verification(int grid_points, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace xy
