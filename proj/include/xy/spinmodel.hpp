// Two-qubit anisotropic XY exchange with a uniform transverse field:
// Hamiltonian, exact spectrum, and thermal / ground states.
#pragma once

#include "xy/smallmat.hpp"

#include <array>

namespace xy {

struct ModelParams {
    double J = 1.0;      // exchange coupling; sets the energy scale
    double gamma = 0.0;  // anisotropy between the two in-plane couplings
    double eta = 0.0;    // field strength in units of J
    double T = 1.0;      // temperature with k_B = 1

    double b_field() const { return eta * J; }
    // Level splitting sqrt(b_field^2 + gamma^2 J^2); always >= 0.
    double b_eff() const;
    double beta() const;  // 1/T; requires T > 0
    // 2 cosh(beta b_eff) + 2 cosh(beta J); overflows for very large beta,
    // the closed-form entanglement routines use scaled internals instead.
    double partition_function() const;
    void validate() const;  // J nonzero, T >= 0, everything finite
};

struct Spectrum {
    std::array<double, 4> energies;  // (b_eff, J, -J, -b_eff)
    std::array<Vec4, 4> states;      // matching orthonormal eigenvectors
};

struct DensityMatrix {
    CMat mat;
    // Accepts 2x2 or 4x4; checks Hermiticity, unit trace, and positivity
    // to 1e-12 and throws std::invalid_argument otherwise.
    explicit DensityMatrix(const CMat& m);
};

CMat hamiltonian(const ModelParams& p);
Spectrum analytic_spectrum(const ModelParams& p);

// Gibbs state at p.T > 0, assembled from the analytic spectrum with
// overflow-safe weights.
DensityMatrix thermal_state(const ModelParams& p);

// Zero-temperature limit: projector onto the lowest level, or the equal
// mixture over levels that tie within 1e-12 of the minimum. Ignores p.T.
DensityMatrix ground_state(const ModelParams& p);

}  // namespace xy
