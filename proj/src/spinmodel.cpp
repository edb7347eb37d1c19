#include "xy/spinmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xy {

double ModelParams::b_eff() const { return std::abs(J) * std::hypot(eta, gamma); }

double ModelParams::beta() const {
    if (!(T > 0.0)) throw std::invalid_argument("beta: temperature must be positive");
    return 1.0 / T;
}

double ModelParams::partition_function() const {
    const double b = beta();
    return 2.0 * std::cosh(b * b_eff()) + 2.0 * std::cosh(b * J);
}

void ModelParams::validate() const {
    if (!std::isfinite(J) || !std::isfinite(gamma) || !std::isfinite(eta) || !std::isfinite(T))
        throw std::invalid_argument("ModelParams: parameters must be finite");
    if (J == 0.0) throw std::invalid_argument("ModelParams: J must be nonzero");
    if (T < 0.0) throw std::invalid_argument("ModelParams: T must be >= 0");
}

CMat hamiltonian(const ModelParams& p) {
    p.validate();
    CMat h = 0.5 * (1.0 + p.gamma) * p.J * kron(pauli(1), pauli(1));
    h += 0.5 * (1.0 - p.gamma) * p.J * kron(pauli(2), pauli(2));
    h += 0.5 * p.b_field() * (kron(pauli(3), pauli(0)) + kron(pauli(0), pauli(3)));
    return h;
}

Spectrum analytic_spectrum(const ModelParams& p) {
    p.validate();
    const double bm = p.b_field();
    const double gj = p.gamma * p.J;
    const double b = p.b_eff();

    Spectrum s;
    s.energies = {b, p.J, -p.J, -b};

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    s.states[1] = {0.0, inv_sqrt2, inv_sqrt2, 0.0};
    s.states[2] = {0.0, inv_sqrt2, -inv_sqrt2, 0.0};

    if (b < 1e-12 * std::abs(p.J)) {
        // both couplings between |00> and |11> vanish
        s.states[0] = {1.0, 0.0, 0.0, 0.0};
        s.states[3] = {0.0, 0.0, 0.0, 1.0};
        return s;
    }

    // b + bm and b - bm, the small one computed from gj^2/(b +- bm) so the
    // component stays accurate when |gj| << |bm|
    double bp, bq;
    if (bm >= 0.0) {
        bp = b + bm;
        bq = gj * gj / bp;
    } else {
        bq = b - bm;
        bp = gj * gj / bq;
    }

    const double n0 = std::hypot(bp, gj);
    if (n0 == 0.0) {
        // gj = 0 with bm < 0: the upper level is |11>
        s.states[0] = {0.0, 0.0, 0.0, 1.0};
    } else {
        s.states[0] = {bp / n0, 0.0, 0.0, gj / n0};
    }

    const double n3 = std::hypot(bq, gj);
    if (n3 == 0.0) {
        // gj = 0 with bm > 0: the lower level is |11>
        s.states[3] = {0.0, 0.0, 0.0, 1.0};
    } else {
        s.states[3] = {bq / n3, 0.0, 0.0, -gj / n3};
    }
    return s;
}

DensityMatrix::DensityMatrix(const CMat& m) : mat(m) {
    if (!is_hermitian(m, 1e-12))
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    const cplx tr = trace(m);
    if (std::abs(tr - 1.0) > 1e-12)
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    const auto d = eig_hermitian(m);
    if (d.values.back() < -1e-12)
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
}

DensityMatrix thermal_state(const ModelParams& p) {
    const double beta = p.beta();
    const Spectrum s = analytic_spectrum(p);
    const double emin = *std::min_element(s.energies.begin(), s.energies.end());
    std::array<double, 4> w;
    double z = 0.0;
    for (int i = 0; i < 4; ++i) {
        w[i] = std::exp(-beta * (s.energies[i] - emin));
        z += w[i];
    }
    CMat chi(4);
    for (int i = 0; i < 4; ++i) chi += (w[i] / z) * outer(s.states[i], s.states[i]);
    return DensityMatrix(chi);
}

DensityMatrix ground_state(const ModelParams& p) {
    const Spectrum s = analytic_spectrum(p);
    const double emin = *std::min_element(s.energies.begin(), s.energies.end());
    const double tol = 1e-12 * std::max({1.0, std::abs(p.J), p.b_eff()});
    CMat rho(4);
    int hits = 0;
    for (int i = 0; i < 4; ++i)
        if (s.energies[i] - emin <= tol) ++hits;
    for (int i = 0; i < 4; ++i)
        if (s.energies[i] - emin <= tol)
            rho += (1.0 / hits) * outer(s.states[i], s.states[i]);
    return DensityMatrix(rho);
}

}  // namespace xy
