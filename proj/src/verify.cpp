#include "xy/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xy/entanglement.hpp"
#include "xy/quadrature.hpp"
#include "xy/rng.hpp"
#include "xy/smallmat.hpp"
#include "xy/spinmodel.hpp"
#include "xy/teleport.hpp"

namespace xy {

namespace {

// random parameter draw covering both coupling signs and strong fields
ModelParams random_params(SplitMix64& rng, int k) {
    static const double js[4] = {1.0, -1.0, 2.0, -2.0};
    ModelParams p;
    p.gamma = -1.0 + 2.0 * rng.uniform();
    p.eta = -3.0 + 6.0 * rng.uniform();
    p.J = js[k % 4];
    const double b = 50.0 * (1.0 - rng.uniform());  // beta*|J| in (0, 50]
    p.T = std::abs(p.J) / b;
    return p;
}

Vec4 matvec(const CMat& a, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += a(i, j) * v[j];
    return r;
}

DensityMatrix oracle_state(const ModelParams& p) {
    const CMat w = expm(-p.beta() * hamiltonian(p));
    return DensityMatrix((1.0 / trace(w).real()) * w);
}

double fidelity_to(const DensityMatrix& pure_in, const DensityMatrix& out) {
    return trace(pure_in.mat * out.mat).real();
}

CheckResult check_thermal_vs_expm(int n, std::uint64_t seed) {
    CheckResult c{"thermal-state-vs-expm", false, 0.0, 1e-10,
                  "trace distance, spectral assembly vs expm(-beta H)/Z"};
    SplitMix64 rng(sample_stream(seed, 101).next());
    for (int k = 0; k < n; ++k) {
        const ModelParams p = random_params(rng, k);
        c.worst = std::max(c.worst, trace_distance(thermal_state(p).mat, oracle_state(p).mat));
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_partition_function(int n, std::uint64_t seed) {
    CheckResult c{"partition-function", false, 0.0, 1e-11,
                  "relative gap to tr expm(-beta H); skips beta*scale > 30"};
    SplitMix64 rng(sample_stream(seed, 102).next());
    for (int k = 0; k < n; ++k) {
        const ModelParams p = random_params(rng, k);
        // the matrix exponential loses relative accuracy once the level
        // spread pushes its entries past ~e^30
        if (p.beta() * std::max(std::abs(p.J), p.b_eff()) > 30.0) continue;
        const double z_ref = trace(expm(-p.beta() * hamiltonian(p))).real();
        c.worst = std::max(c.worst, std::abs(p.partition_function() - z_ref) / z_ref);
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_spectrum(int n, std::uint64_t seed) {
    CheckResult c{"spectrum-vs-eig", false, 0.0, 1e-12,
                  "energy multiset gap and eigenvector residual, scaled"};
    SplitMix64 rng(sample_stream(seed, 103).next());
    for (int k = 0; k < n; ++k) {
        const ModelParams p = random_params(rng, k);
        const CMat h = hamiltonian(p);
        const double scale = std::max({1.0, std::abs(p.J), p.b_eff()});
        const Spectrum s = analytic_spectrum(p);
        std::array<double, 4> got = s.energies;
        std::sort(got.begin(), got.end(), std::greater<>());
        const EigenDecomposition e = eig_hermitian(h);
        for (int i = 0; i < 4; ++i)
            c.worst = std::max(c.worst, std::abs(got[i] - e.values[i]) / scale);
        for (int i = 0; i < 4; ++i) {
            const Vec4 hv = matvec(h, s.states[i]);
            for (int r = 0; r < 4; ++r)
                c.worst =
                    std::max(c.worst, std::abs(hv[r] - s.energies[i] * s.states[i][r]) / scale);
        }
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_concurrence(int n, std::uint64_t seed) {
    CheckResult c{"concurrence-closed-vs-wootters", false, 0.0, 1e-9,
                  "closed thermal form vs spin-flip eigenvalues of the oracle state"};
    SplitMix64 rng(sample_stream(seed, 104).next());
    for (int k = 0; k < n; ++k) {
        const ModelParams p = random_params(rng, k);
        c.worst = std::max(
            c.worst, std::abs(thermal_concurrence_closed(p) - concurrence(oracle_state(p))));
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_fef(int n, std::uint64_t seed) {
    CheckResult c{"fef-closed-vs-overlap-max", false, 0.0, 1e-11,
                  "closed fully entangled fraction vs Bell overlaps of the oracle state"};
    SplitMix64 rng(sample_stream(seed, 105).next());
    for (int k = 0; k < n; ++k) {
        const ModelParams p = random_params(rng, k);
        c.worst = std::max(c.worst, std::abs(fef_closed(p) - fef(oracle_state(p))));
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_sign_invariance(int n, std::uint64_t seed) {
    CheckResult c{"sign-invariance", false, 0.0, 1e-12,
                  "concurrence and fef under (eta,gamma,J) -> (-eta,-gamma,-J)"};
    SplitMix64 rng(sample_stream(seed, 106).next());
    for (int k = 0; k < n; ++k) {
        const ModelParams p = random_params(rng, k);
        const ModelParams q{-p.J, -p.gamma, -p.eta, p.T};
        c.worst = std::max(
            c.worst, std::abs(thermal_concurrence_closed(p) - thermal_concurrence_closed(q)));
        c.worst = std::max(c.worst, std::abs(fef_closed(p) - fef_closed(q)));
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_quadrature(std::uint64_t seed) {
    CheckResult c{"avg-fidelity-quadrature-vs-closed", false, 0.0, 1e-10,
                  "Bloch-average quadrature vs (2 overlap + 1)/3, 100 points"};
    SplitMix64 rng(sample_stream(seed, 107).next());
    for (int k = 0; k < 100; ++k) {
        const ModelParams p = random_params(rng, k);
        const DensityMatrix rho = thermal_state(p);
        const std::array<double, 4> ov = bell_overlaps(rho);
        double best = 0.0;
        for (int m = 0; m < 4; ++m) {
            const double quad = avg_fidelity_quadrature(rho, m);
            best = std::max(best, quad);
            c.worst = std::max(c.worst, std::abs(quad - (2.0 * ov[(4 - m) % 4] + 1.0) / 3.0));
        }
        c.worst = std::max(c.worst, std::abs(best - max_fidelity_closed(p)));
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_mc(std::uint64_t seed) {
    CheckResult c{"mc-vs-closed", false, 0.0, 1.0,
                  "normalized: max(|gap|/(3 stderr), stderr/2e-3) at 10 points, 1e6 samples"};
    // five weak-field and five strong-field points with the matching
    // dominant correction pair
    struct Point {
        double gamma, eta, T;
        int m, n;
    };
    static const Point pts[10] = {
        {0.5, 0.3, 0.8, 2, 2},  {0.8, 0.2, 1.2, 2, 2}, {0.3, 0.6, 0.6, 2, 2},
        {0.9, 0.0, 1.0, 2, 2},  {0.6, 0.5, 1.5, 2, 2}, {0.5, 1.5, 0.8, 1, 1},
        {1.0, 2.0, 1.0, 1, 1},  {0.3, 2.5, 0.5, 1, 1}, {0.8, 1.2, 0.7, 1, 1},
        {0.2, 2.0, 0.4, 1, 1},
    };
    for (int i = 0; i < 10; ++i) {
        const ModelParams p{1.0, pts[i].gamma, pts[i].eta, pts[i].T};
        const std::array<double, 4> ov = thermal_bell_overlaps(p);
        const double closed =
            0.2 * (1.0 + 4.0 * ov[(4 - pts[i].m) % 4] * ov[(4 - pts[i].n) % 4]);
        const McEstimate est =
            ent_fidelity_mc(p, pts[i].m, pts[i].n, 1000000, seed + static_cast<unsigned>(i));
        c.worst = std::max(c.worst, std::abs(est.value - closed) / (3.0 * est.stderr_));
        c.worst = std::max(c.worst, est.stderr_ / 2e-3);
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_channel_vs_partial() {
    CheckResult c{"channel-vs-partial-closed", false, 0.0, 1e-10,
                  "two-copy channel on cos(xi)|00>+sin(xi)|11> vs closed branch forms"};
    struct Branch {
        ModelParams p;
        int m, n;
    };
    static const Branch branches[2] = {
        {{1.0, 0.5, 0.3, 0.8}, 2, 2},  // hypot(eta, gamma) < 1
        {{1.0, 0.5, 1.5, 0.8}, 1, 1},  // hypot(eta, gamma) > 1
    };
    const double pi = std::numbers::pi;
    for (const Branch& b : branches) {
        const DensityMatrix res = thermal_state(b.p);
        for (double xi : {0.0, pi / 8.0, pi / 4.0, 3.0 * pi / 8.0, pi / 2.0}) {
            const DensityMatrix in = partial_input_state(xi);
            const DensityMatrix out = channel_2q(res, res, b.m, b.n, in);
            const double direct = fidelity_to(in, out);
            c.worst =
                std::max(c.worst, std::abs(direct - partial_output_fidelity_closed(b.p, xi)));
        }
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_input_purity(int n, std::uint64_t seed) {
    CheckResult c{"input-state-purity", false, 0.0, 1e-12,
                  "max |rho^2 - rho| entry over random frame-built pure states"};
    SplitMix64 rng(sample_stream(seed, 108).next());
    const double pi = std::numbers::pi;
    for (int k = 0; k < n; ++k) {
        TwoQubitPureParams q;
        q.mu = pi * rng.uniform();
        q.nu = 2.0 * pi * rng.uniform();
        q.theta1 = pi * rng.uniform();
        q.phi1 = 2.0 * pi * rng.uniform();
        q.theta2 = pi * rng.uniform();
        q.phi2 = 2.0 * pi * rng.uniform();
        const DensityMatrix rho = input_state_2q(q);
        c.worst = std::max(c.worst, max_abs(rho.mat * rho.mat - rho.mat));
    }
    c.pass = c.worst < c.tol;
    return c;
}

CheckResult check_weight_normalization() {
    CheckResult c{"weight-normalization", false, 0.0, 1e-6,
                  "six-fold Gauss-Legendre integral of the input-state measure"};
    const double pi = std::numbers::pi;
    const Quadrature mu = mapped(gauss_legendre(16), 0.0, pi);
    const Quadrature th = mapped(gauss_legendre(16), 0.0, pi);
    const Quadrature ph = mapped(gauss_legendre(4), 0.0, 2.0 * pi);
    double integral = 0.0;
    for (std::size_t a = 0; a < mu.nodes.size(); ++a)
        for (std::size_t b = 0; b < th.nodes.size(); ++b)
            for (std::size_t d = 0; d < th.nodes.size(); ++d) {
                const double f = std::pow(std::cos(mu.nodes[a]), 2) * std::sin(mu.nodes[a]) *
                                 std::sin(th.nodes[b]) * std::sin(th.nodes[d]);
                integral += mu.weights[a] * th.weights[b] * th.weights[d] * f;
            }
    // the three angle factors are flat; their quadratures contribute 2*pi each
    double flat = 0.0;
    for (double w : ph.weights) flat += w;
    integral *= flat * flat * flat;
    integral *= 3.0 / (64.0 * pi * pi * pi);
    c.worst = std::abs(integral - 1.0);
    c.pass = c.worst < c.tol;
    return c;
}

}  // namespace

std::vector<CheckResult> run_verification(int grid_points, std::uint64_t seed) {
    if (grid_points < 1) throw std::invalid_argument("run_verification: grid_points must be >= 1");
    std::vector<CheckResult> results;
    results.push_back(check_thermal_vs_expm(grid_points, seed));
    results.push_back(check_partition_function(grid_points, seed));
    results.push_back(check_spectrum(grid_points, seed));
    results.push_back(check_concurrence(grid_points, seed));
    results.push_back(check_fef(grid_points, seed));
    results.push_back(check_sign_invariance(grid_points, seed));
    results.push_back(check_quadrature(seed));
    results.push_back(check_mc(seed));
    results.push_back(check_channel_vs_partial());
    results.push_back(check_input_purity(grid_points, seed));
    results.push_back(check_weight_normalization());
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace xy
