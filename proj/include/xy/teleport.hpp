#pragma once

#include <array>
#include <cstdint>

#include "xy/smallmat.hpp"
#include "xy/spinmodel.hpp"

namespace xy {

// single-qubit pure state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
struct BlochPureState {
    double theta = 0.0;
    double phi = 0.0;
};

// two-qubit pure state built from two Bloch frames mixed by (mu, nu)
struct TwoQubitPureParams {
    double mu = 0.0;
    double nu = 0.0;
    double theta1 = 0.0;
    double phi1 = 0.0;
    double theta2 = 0.0;
    double phi2 = 0.0;
};

// Pauli channel defined by the resource's Bell overlaps, correction index m
DensityMatrix channel_1q(const DensityMatrix& resource, int m, const BlochPureState& psi);

// Bloch-sphere average of the channel fidelity, tensor Gauss-Legendre 32x64
double avg_fidelity_quadrature(const DensityMatrix& resource, int m);

// (2*fef + 1)/3, the best average fidelity over the four corrections
double max_fidelity_closed(const ModelParams& p);

// true when the thermal resource beats the classical fidelity ceiling
bool useful_for_teleportation(const ModelParams& p);

// pure two-qubit input state from its Pauli expansion
DensityMatrix input_state_2q(const TwoQubitPureParams& q);

// cos(xi)|00> + sin(xi)|11>
DensityMatrix partial_input_state(double xi);

// two independent Pauli channels with corrections (m, n)
DensityMatrix channel_2q(const DensityMatrix& resource1, const DensityMatrix& resource2, int m,
                         int n, const DensityMatrix& rho_in);

struct McEstimate {
    double value;
    double stderr_;
};

// Monte Carlo average of tr[rho_in rho_out] over random pure inputs; the
// sample stream is keyed by (seed, sample index), so the estimate is
// bit-identical for any thread count
McEstimate ent_fidelity_mc(const ModelParams& p, int m, int n, std::int64_t samples,
                           std::uint64_t seed);

// (1/5)(1 + 4 fef^2), the two-chain protocol's best average
double max_ent_fidelity_closed(const ModelParams& p);

// closed output fidelity for the partially known input, branch by
// sqrt(eta^2 + gamma^2) vs 1 with the matching correction pair
double partial_output_fidelity_closed(const ModelParams& p, double xi);

namespace detail {
// t[a][b] = tr[rho_in (sigma_a x sigma_b)] for the frame-built pure state
std::array<std::array<double, 4>, 4> pauli_coefficients(const TwoQubitPureParams& q);
}  // namespace detail

}  // namespace xy
