#include "xy/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "xy/entanglement.hpp"
#include "xy/parallel.hpp"
#include "xy/quadrature.hpp"
#include "xy/rng.hpp"

namespace xy {

namespace {

void check_correction(int m) {
    if (m < 0 || m > 3) throw std::invalid_argument("correction index must be in 0..3");
}

const CMat& pauli_pair(int a, int b) {
    static const std::array<CMat, 16> table = [] {
        std::array<CMat, 16> t;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) t[static_cast<size_t>(4 * a + b)] = kron(pauli(a), pauli(b));
        return t;
    }();
    return table[static_cast<size_t>(4 * a + b)];
}

struct Frame {
    std::array<double, 3> r, k, l;
};

// orthonormal triad attached to the Bloch direction (theta, phi)
Frame frame_from(double costh, double sinth, double phi) {
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    Frame f;
    f.r = {sinth * cp, sinth * sp, costh};
    f.k = {sp, -cp, 0.0};
    f.l = {costh * cp, costh * sp, -sinth};
    return f;
}

using TMat = std::array<std::array<double, 4>, 4>;

TMat fill_coefficients(double cosmu, double sinmu, double cosnu, double sinnu, const Frame& f1,
                       const Frame& f2) {
    TMat t{};
    t[0][0] = 1.0;
    for (int a = 0; a < 3; ++a) {
        t[static_cast<size_t>(a + 1)][0] = cosmu * f1.r[static_cast<size_t>(a)];
        t[0][static_cast<size_t>(a + 1)] = cosmu * f2.r[static_cast<size_t>(a)];
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto ia = static_cast<size_t>(a);
            const auto ib = static_cast<size_t>(b);
            t[ia + 1][ib + 1] = f1.r[ia] * f2.r[ib] +
                                sinmu * cosnu * (f1.k[ia] * f2.k[ib] - f1.l[ia] * f2.l[ib]) -
                                sinmu * sinnu * (f1.k[ia] * f2.l[ib] + f1.l[ia] * f2.k[ib]);
        }
    return t;
}

// per-sample output fidelity: sum_ij p_i q_j t[(i+m)%4][(j+n)%4]^2
double sample_fidelity(const std::array<double, 4>& p, const std::array<double, 4>& q, int m,
                       int n, const TMat& t) {
    double f = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double tc = t[static_cast<size_t>((i + m) & 3)][static_cast<size_t>((j + n) & 3)];
            f += p[static_cast<size_t>(i)] * q[static_cast<size_t>(j)] * tc * tc;
        }
    return f;
}

}  // namespace

DensityMatrix channel_1q(const DensityMatrix& resource, int m, const BlochPureState& psi) {
    check_correction(m);
    const auto p = bell_overlaps(resource);
    const cplx a0 = std::cos(0.5 * psi.theta);
    const cplx a1 = std::polar(std::sin(0.5 * psi.theta), psi.phi);
    CMat rho(2);
    rho(0, 0) = a0 * std::conj(a0);
    rho(0, 1) = a0 * std::conj(a1);
    rho(1, 0) = a1 * std::conj(a0);
    rho(1, 1) = a1 * std::conj(a1);
    CMat out(2);
    for (int i = 0; i < 4; ++i) {
        const CMat& s = pauli((i + m) & 3);
        out += p[static_cast<size_t>(i)] * (s * rho * s);
    }
    return DensityMatrix(out);
}

double avg_fidelity_quadrature(const DensityMatrix& resource, int m) {
    check_correction(m);
    static const Quadrature qx = gauss_legendre(32);                     // cos(theta)
    static const Quadrature qp = mapped(gauss_legendre(64), 0.0, 2.0 * std::numbers::pi);  // phi
    double acc = 0.0;
    for (size_t i = 0; i < qx.nodes.size(); ++i) {
        const double theta = std::acos(qx.nodes[i]);
        double row = 0.0;
        for (size_t j = 0; j < qp.nodes.size(); ++j) {
            const BlochPureState psi{theta, qp.nodes[j]};
            const DensityMatrix out = channel_1q(resource, m, psi);
            const cplx a0 = std::cos(0.5 * psi.theta);
            const cplx a1 = std::polar(std::sin(0.5 * psi.theta), psi.phi);
            const cplx fid = std::conj(a0) * (out.mat(0, 0) * a0 + out.mat(0, 1) * a1) +
                             std::conj(a1) * (out.mat(1, 0) * a0 + out.mat(1, 1) * a1);
            row += qp.weights[j] * fid.real();
        }
        acc += qx.weights[i] * row;
    }
    return acc / (4.0 * std::numbers::pi);
}

double max_fidelity_closed(const ModelParams& p) { return (2.0 * fef_closed(p) + 1.0) / 3.0; }

bool useful_for_teleportation(const ModelParams& p) { return fef_closed(p) > 0.5 + 1e-12; }

namespace detail {

std::array<std::array<double, 4>, 4> pauli_coefficients(const TwoQubitPureParams& q) {
    const Frame f1 = frame_from(std::cos(q.theta1), std::sin(q.theta1), q.phi1);
    const Frame f2 = frame_from(std::cos(q.theta2), std::sin(q.theta2), q.phi2);
    return fill_coefficients(std::cos(q.mu), std::sin(q.mu), std::cos(q.nu), std::sin(q.nu), f1,
                             f2);
}

}  // namespace detail

DensityMatrix input_state_2q(const TwoQubitPureParams& q) {
    const TMat t = detail::pauli_coefficients(q);
    CMat rho(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            rho += (0.25 * t[static_cast<size_t>(a)][static_cast<size_t>(b)]) * pauli_pair(a, b);
    return DensityMatrix(rho);
}

DensityMatrix partial_input_state(double xi) {
    const Vec4 v{std::cos(xi), 0.0, 0.0, std::sin(xi)};
    return DensityMatrix(outer(v, v));
}

DensityMatrix channel_2q(const DensityMatrix& resource1, const DensityMatrix& resource2, int m,
                         int n, const DensityMatrix& rho_in) {
    check_correction(m);
    check_correction(n);
    if (rho_in.mat.dim() != 4) throw std::invalid_argument("channel_2q: need a two-qubit input");
    const auto p = bell_overlaps(resource1);
    const auto q = bell_overlaps(resource2);
    CMat out(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const CMat& u = pauli_pair((i + m) & 3, (j + n) & 3);
            out += (p[static_cast<size_t>(i)] * q[static_cast<size_t>(j)]) * (u * rho_in.mat * u);
        }
    return DensityMatrix(out);
}

McEstimate ent_fidelity_mc(const ModelParams& p, int m, int n, std::int64_t samples,
                           std::uint64_t seed) {
    check_correction(m);
    check_correction(n);
    if (samples < 10000) throw std::invalid_argument("ent_fidelity_mc: need at least 1e4 samples");
    const auto pr = bell_overlaps(thermal_state(p));

    // fixed-size chunks summed in chunk order make the reduction independent
    // of how chunks are distributed over threads
    constexpr std::int64_t chunk = std::int64_t{1} << 14;
    const std::int64_t nchunks = (samples + chunk - 1) / chunk;
    std::vector<double> sum1(static_cast<size_t>(nchunks)), sum2(static_cast<size_t>(nchunks));

    parallel_for(static_cast<std::int64_t>(nchunks), [&](std::int64_t c) {
        const std::int64_t lo = c * chunk;
        const std::int64_t hi = std::min(samples, lo + chunk);
        double s1 = 0.0, s2 = 0.0;
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(idx));
            const double cosmu = std::cbrt(2.0 * rng.uniform() - 1.0);
            const double sinmu = std::sqrt(std::max(0.0, 1.0 - cosmu * cosmu));
            const double nu = 2.0 * std::numbers::pi * rng.uniform();
            const double c1 = 1.0 - 2.0 * rng.uniform();
            const double phi1 = 2.0 * std::numbers::pi * rng.uniform();
            const double c2 = 1.0 - 2.0 * rng.uniform();
            const double phi2 = 2.0 * std::numbers::pi * rng.uniform();
            const Frame f1 = frame_from(c1, std::sqrt(std::max(0.0, 1.0 - c1 * c1)), phi1);
            const Frame f2 = frame_from(c2, std::sqrt(std::max(0.0, 1.0 - c2 * c2)), phi2);
            const TMat t = fill_coefficients(cosmu, sinmu, std::cos(nu), std::sin(nu), f1, f2);
            const double f = sample_fidelity(pr, pr, m, n, t);
            s1 += f;
            s2 += f * f;
        }
        sum1[static_cast<size_t>(c)] = s1;
        sum2[static_cast<size_t>(c)] = s2;
    });

    double s1 = 0.0, s2 = 0.0;
    for (std::int64_t c = 0; c < nchunks; ++c) {
        s1 += sum1[static_cast<size_t>(c)];
        s2 += sum2[static_cast<size_t>(c)];
    }
    const double nd = static_cast<double>(samples);
    const double mean = s1 / nd;
    const double var = std::max(0.0, (s2 - nd * mean * mean) / (nd - 1.0));
    return {mean, std::sqrt(var / nd)};
}

double max_ent_fidelity_closed(const ModelParams& p) {
    const double f = fef_closed(p);
    return 0.2 * (1.0 + 4.0 * f * f);
}

double partial_output_fidelity_closed(const ModelParams& p, double xi) {
    const auto q = thermal_bell_overlaps(p);
    const double s = std::sin(2.0 * xi);
    const double s2 = s * s;
    if (std::hypot(p.eta, p.gamma) <= 1.0)
        return (q[1] + q[2]) * (q[1] + q[2]) + (q[0] * q[0] + q[3] * q[3] - 2.0 * q[1] * q[2]) * s2;
    return (q[2] + q[3]) * (q[2] + q[3]) + (q[0] * q[0] + q[1] * q[1] - 2.0 * q[2] * q[3]) * s2;
}

}  // namespace xy
