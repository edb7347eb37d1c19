#include "xy/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xy {

namespace {

// Thermal building blocks with every exponential rescaled by e^{-M},
// M = beta*max(|J|, b_eff). The common factor cancels in all ratios, so
// beta*|J| up to ~700 and beyond never overflows; past the underflow edge the
// dominant weight is still exactly 1 and signs stay correct.
struct ScaledThermal {
    double expM;       // e^{-M}
    double eJ, emJ;    // e^{+-beta*J - M}
    double eB, emB;    // e^{+-beta*b_eff - M}
    double coshJ;      // scaled cosh(beta*J)
    double coshB;      // scaled cosh(beta*b_eff)
    double sinhAbsJ;   // scaled sinh(beta*|J|)
    double a;          // scaled (gamma*J/b_eff)*sinh(beta*b_eff)
    double p0n, p3n;   // scaled numerators of the Psi0 and Psi3 overlaps
    double z;          // scaled partition function
};

ScaledThermal scaled_thermal(double gamma, double eta, double J, double beta) {
    const double bm = eta * J;
    const double gj = gamma * J;
    const double b = std::hypot(bm, gj);
    const double M = beta * std::max(std::abs(J), b);

    ScaledThermal st;
    st.expM = std::exp(-M);
    st.eJ = std::exp(beta * J - M);
    st.emJ = std::exp(-beta * J - M);
    st.eB = std::exp(beta * b - M);
    st.emB = std::exp(-beta * b - M);
    st.coshJ = 0.5 * (st.eJ + st.emJ);
    st.coshB = 0.5 * (st.eB + st.emB);
    st.sinhAbsJ = 0.5 * std::abs(st.eJ - st.emJ);

    const double x = beta * b;
    if (x < 0.01) {
        // sinh(x)/x by series; also covers b_eff = 0 where gj/b is 0/0
        const double x2 = x * x;
        const double sinhc = 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
        st.a = gj * beta * sinhc * st.expM;
        st.p0n = st.coshB - st.a;
        st.p3n = st.coshB + st.a;
    } else {
        // regrouped so both numerators are sums of non-negative terms
        const double u = gj / b;
        st.a = u * 0.5 * (st.eB - st.emB);
        st.p0n = 0.5 * ((1.0 - u) * st.eB + (1.0 + u) * st.emB);
        st.p3n = 0.5 * ((1.0 + u) * st.eB + (1.0 - u) * st.emB);
    }
    st.z = 2.0 * (st.coshB + st.coshJ);
    return st;
}

std::array<double, 4> lambdas_from(const ScaledThermal& st) {
    // inner pair e^{+-beta|J|}/Z; outer pair (sqrt(1+a^2) +- |a|)/Z, the small
    // root via the conjugate identity to keep its relative accuracy
    const double h = std::hypot(st.expM, st.a);
    const double nbig = h + std::abs(st.a);
    const double nsmall = nbig > 0.0 ? st.expM * st.expM / nbig : 0.0;
    std::array<double, 4> l = {std::max(st.eJ, st.emJ) / st.z, std::min(st.eJ, st.emJ) / st.z,
                               nbig / st.z, nsmall / st.z};
    std::sort(l.begin(), l.end(), std::greater<>());
    return l;
}

const CMat& spin_flip_matrix() {
    static const CMat y = kron(pauli(2), pauli(2));
    return y;
}

}  // namespace

const Vec4& bell_state(int i) {
    static const double s2 = 1.0 / std::sqrt(2.0);
    static const std::array<Vec4, 4> basis = {Vec4{s2, 0.0, 0.0, s2}, Vec4{0.0, s2, s2, 0.0},
                                              Vec4{0.0, s2, -s2, 0.0}, Vec4{s2, 0.0, 0.0, -s2}};
    if (i < 0 || i > 3) throw std::invalid_argument("bell_state: index out of range");
    return basis[static_cast<size_t>(i)];
}

std::array<double, 4> bell_overlaps(const DensityMatrix& rho) {
    if (rho.mat.dim() != 4) throw std::invalid_argument("bell_overlaps: need a two-qubit state");
    std::array<double, 4> p;
    for (int i = 0; i < 4; ++i) {
        const double v = qform(bell_state(i), rho.mat, bell_state(i)).real();
        p[i] = std::clamp(v, 0.0, 1.0);
    }
    return p;
}

double fef(const DensityMatrix& rho) {
    const auto p = bell_overlaps(rho);
    return *std::max_element(p.begin(), p.end());
}

double concurrence(const DensityMatrix& rho) {
    if (rho.mat.dim() != 4) throw std::invalid_argument("concurrence: need a two-qubit state");
    // Wootters lambdas as singular values of B = D^{1/2} (V^T Y V) D^{1/2}
    // with rho = V D V^dag and Y the spin flip; equals the spectrum of the
    // symmetrized sqrt(rho)*Y*conj(rho)*Y*sqrt(rho) but keeps relative
    // accuracy for strongly graded spectra.
    const auto d = eig_hermitian(rho.mat);
    std::array<double, 4> sq;
    for (int i = 0; i < 4; ++i) sq[i] = std::sqrt(std::max(0.0, d.values[i]));
    const CMat m = transpose(d.vectors) * spin_flip_matrix() * d.vectors;
    CMat b(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b(i, j) = sq[i] * m(i, j) * sq[j];
    const auto s = singular_values(b);
    return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

std::array<double, 4> thermal_lambdas(const ModelParams& p) {
    p.validate();
    return lambdas_from(scaled_thermal(p.gamma, p.eta, p.J, p.beta()));
}

std::array<double, 4> thermal_bell_overlaps(const ModelParams& p) {
    p.validate();
    const ScaledThermal st = scaled_thermal(p.gamma, p.eta, p.J, p.beta());
    return {st.p0n / st.z, st.emJ / st.z, st.eJ / st.z, st.p3n / st.z};
}

double thermal_concurrence_closed(const ModelParams& p) {
    const auto l = thermal_lambdas(p);
    return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double fef_closed(const ModelParams& p) {
    const auto q = thermal_bell_overlaps(p);
    return *std::max_element(q.begin(), q.end());
}

namespace detail {

double wootters_margin(double gamma, double eta, double J, double beta) {
    const ScaledThermal st = scaled_thermal(gamma, eta, J, beta);
    return std::max(st.sinhAbsJ - std::hypot(st.expM, st.a), std::abs(st.a) - st.coshJ);
}

double usefulness_margin(double gamma, double eta, double J, double beta) {
    const ScaledThermal st = scaled_thermal(gamma, eta, J, beta);
    return std::max(st.sinhAbsJ - st.coshB, std::abs(st.a) - st.coshJ);
}

}  // namespace detail

}  // namespace xy
