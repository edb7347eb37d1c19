// Acceptance gate: thirteen end-to-end checks, one line each, exit code is
// the number of failures. Deterministic, seed 42.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "xy/criticality.hpp"
#include "xy/entanglement.hpp"
#include "xy/quadrature.hpp"
#include "xy/rng.hpp"
#include "xy/smallmat.hpp"
#include "xy/spinmodel.hpp"
#include "xy/teleport.hpp"

using namespace xy;

namespace {

constexpr std::uint64_t kSeed = 42;
int failures = 0;

void report(int index, bool pass, const std::string& what, double worst, double tol) {
    if (!pass) ++failures;
    std::printf("%s  %2d  %s (worst %.3e, tol %.1e)\n", pass ? "PASS" : "FAIL", index,
                what.c_str(), worst, tol);
}

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

DensityMatrix oracle_state(const ModelParams& p) {
    const CMat w = expm(-p.beta() * hamiltonian(p));
    return DensityMatrix((1.0 / trace(w).real()) * w);
}

// criterion 1: spectral thermal state vs brute-force matrix exponential
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(sample_stream(kSeed, 1).next());
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const ModelParams p = random_params(rng, k);
        worst = std::max(worst, trace_distance(thermal_state(p).mat, oracle_state(p).mat));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, worst < 1e-10 && secs < 5.0,
           "thermal state vs matrix exponential, 1000 points in " + std::to_string(secs) + " s",
           worst, 1e-10);
}

// criterion 2: closed concurrence vs Wootters procedure on the oracle state
void criterion_2() {
    SplitMix64 rng(sample_stream(kSeed, 2).next());
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const ModelParams p = random_params(rng, k);
        worst = std::max(worst,
                         std::abs(thermal_concurrence_closed(p) - concurrence(oracle_state(p))));
    }
    report(2, worst < 1e-9, "closed concurrence vs spin-flip eigenvalues, 1000 points", worst,
           1e-9);
}

// criterion 3: cold isotropic limits across the field crossing
void criterion_3() {
    const double c1 = thermal_concurrence_closed({1.0, 0.0, 0.5, 1.0 / 60.0});
    const double c2 = thermal_concurrence_closed({1.0, 0.0, 1.0, 1.0 / 60.0});
    const double c3 = thermal_concurrence_closed({1.0, 0.0, 1.5, 1.0 / 60.0});
    const double worst =
        std::max({std::abs(c1 - 1.0) / 1e-6, std::abs(c2 - 0.5) / 1e-6, c3 / 1e-9});
    report(3, worst < 1.0, "cold concurrence 1, 1/2, 0 across the crossing (normalized)", worst,
           1.0);
}

// criterion 4: disentanglement temperature at gamma=0, field independent
void criterion_4() {
    const CriticalResult ref = t1_critical(0.0, 0.0, 1.0);
    double worst = ref.value ? std::abs(*ref.value - 1.13459) / 1e-4 : 1e30;
    for (double eta : {0.5, 0.9}) {
        const CriticalResult r = t1_critical(0.0, eta, 1.0);
        worst = std::max(worst, r.value && ref.value ? std::abs(*r.value - *ref.value) / 1e-8
                                                     : 1e30);
    }
    report(4, worst < 1.0, "t1(gamma=0) = 1.13459 J, identical for eta 0, 0.5, 0.9 (normalized)",
           worst, 1.0);
}

// criterion 5: usefulness temperature at gamma=0 collapses with the field
void criterion_5() {
    const CriticalResult t1 = t1_critical(0.0, 0.0, 1.0);
    const CriticalResult a = t2_critical(0.0, 0.0, 1.0);
    const CriticalResult b = t2_critical(0.0, 1.0, 1.0);
    const CriticalResult c = t2_critical(0.0, 2.0, 1.0);
    const bool pass = t1.value && a.value && std::abs(*a.value - *t1.value) < 1e-9 && b.value &&
                      *b.value == 0.0 && !c.value.has_value() && c.converged;
    const double worst = t1.value && a.value ? std::abs(*a.value - *t1.value) : 1e30;
    report(5, pass, "t2(gamma=0): equals t1 at eta=0, zero at eta=1, absent at eta=2", worst,
           1e-9);
}

// criterion 6: strong-field asymptote of the usefulness temperature
void criterion_6() {
    double worst = 0.0;
    for (double gamma : {0.2, 1.0}) {
        const CriticalResult r = t2_critical(gamma, 100.0, 1.0);
        const double asym = t2_asymptote(gamma, 100.0, 1.0);
        worst = std::max(worst, r.value ? std::abs(*r.value / asym - 1.0) : 1e30);
    }
    report(6, worst < 0.02, "t2 within 2% of eta J / ln(2 eta / gamma) at eta=100", worst, 0.02);
}

// criterion 7: Bloch-average quadrature vs closed single-qubit fidelity
void criterion_7() {
    SplitMix64 rng(sample_stream(kSeed, 7).next());
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ModelParams p = random_params(rng, k);
        const DensityMatrix rho = thermal_state(p);
        double best = 0.0;
        for (int m = 0; m < 4; ++m) best = std::max(best, avg_fidelity_quadrature(rho, m));
        worst = std::max(worst, std::abs(best - max_fidelity_closed(p)));
    }
    report(7, worst < 1e-10, "best quadrature fidelity vs (2 fef + 1)/3, 100 points", worst,
           1e-10);
}

// criterion 8: Monte Carlo two-copy fidelity vs the closed form
void criterion_8() {
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
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const ModelParams p{1.0, pts[i].gamma, pts[i].eta, pts[i].T};
        const std::array<double, 4> ov = thermal_bell_overlaps(p);
        const double closed = 0.2 * (1.0 + 4.0 * ov[(4 - pts[i].m) % 4] * ov[(4 - pts[i].n) % 4]);
        const McEstimate est = ent_fidelity_mc(p, pts[i].m, pts[i].n, 1000000,
                                               kSeed + static_cast<std::uint64_t>(i));
        worst = std::max(worst, std::abs(est.value - closed) / (3.0 * est.stderr_));
        worst = std::max(worst, est.stderr_ / 2e-3);
    }
    report(8, worst < 1.0, "MC fidelity within 3 sigma of closed form, stderr < 2e-3 (normalized)",
           worst, 1.0);
}

// criterion 9: two-copy channel on the partially known input vs closed form
void criterion_9() {
    const double pi = std::numbers::pi;
    double worst = 0.0;
    const ModelParams branch[2] = {{1.0, 0.5, 0.3, 0.8}, {1.0, 0.5, 1.5, 0.8}};
    const int corr[2] = {2, 1};
    for (int b = 0; b < 2; ++b) {
        const DensityMatrix res = thermal_state(branch[b]);
        for (double xi : {0.0, pi / 8.0, pi / 4.0, 3.0 * pi / 8.0, pi / 2.0}) {
            const DensityMatrix in = partial_input_state(xi);
            const DensityMatrix out = channel_2q(res, res, corr[b], corr[b], in);
            const double direct = trace(in.mat * out.mat).real();
            worst = std::max(worst,
                             std::abs(direct - partial_output_fidelity_closed(branch[b], xi)));
        }
    }
    report(9, worst < 1e-10, "two-copy channel vs closed partial-input fidelity, both branches",
           worst, 1e-10);
}

// criterion 10: random frame-built inputs are pure; the measure normalizes
void criterion_10() {
    SplitMix64 rng(sample_stream(kSeed, 10).next());
    const double pi = std::numbers::pi;
    double purity = 0.0;
    for (int k = 0; k < 1000; ++k) {
        TwoQubitPureParams q;
        q.mu = pi * rng.uniform();
        q.nu = 2.0 * pi * rng.uniform();
        q.theta1 = pi * rng.uniform();
        q.phi1 = 2.0 * pi * rng.uniform();
        q.theta2 = pi * rng.uniform();
        q.phi2 = 2.0 * pi * rng.uniform();
        const DensityMatrix rho = input_state_2q(q);
        purity = std::max(purity, max_abs(rho.mat * rho.mat - rho.mat));
    }
    const Quadrature mu = mapped(gauss_legendre(16), 0.0, pi);
    const Quadrature th = mapped(gauss_legendre(16), 0.0, pi);
    double integral = 0.0;
    for (std::size_t a = 0; a < mu.nodes.size(); ++a)
        for (std::size_t b = 0; b < th.nodes.size(); ++b)
            for (std::size_t d = 0; d < th.nodes.size(); ++d)
                integral += mu.weights[a] * th.weights[b] * th.weights[d] *
                            std::pow(std::cos(mu.nodes[a]), 2) * std::sin(mu.nodes[a]) *
                            std::sin(th.nodes[b]) * std::sin(th.nodes[d]);
    integral *= 8.0 * pi * pi * pi * 3.0 / (64.0 * pi * pi * pi);
    const double worst = std::max(purity / 1e-12, std::abs(integral - 1.0) / 1e-6);
    report(10, worst < 1.0, "input purity below 1e-12 and measure normalization (normalized)",
           worst, 1.0);
}

// criterion 11: overall sign flip leaves concurrence and fef unchanged
void criterion_11() {
    SplitMix64 rng(sample_stream(kSeed, 11).next());
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const ModelParams p = random_params(rng, k);
        const ModelParams q{-p.J, -p.gamma, -p.eta, p.T};
        worst = std::max(worst, std::abs(thermal_concurrence_closed(p) -
                                         thermal_concurrence_closed(q)));
        worst = std::max(worst, std::abs(fef_closed(p) - fef_closed(q)));
    }
    report(11, worst < 1e-12, "concurrence and fef invariant under the overall sign flip", worst,
           1e-12);
}

// criterion 12: dependence of the partial-input fidelity on the entanglement
// of the input, split by the field regions
void criterion_12() {
    const double pi = std::numbers::pi;
    // weak field: non-decreasing in sin^2(2 xi) everywhere on the scan
    double min_slope = 1e30;
    for (double gamma : {0.0, 0.3, 0.6, 0.9}) {
        const double etac = eta_critical(gamma);
        for (double frac : {0.0, 0.5, 0.9}) {
            for (double T : {0.3, 1.0, 3.0}) {
                const ModelParams p{1.0, gamma, frac * etac, T};
                min_slope = std::min(min_slope, partial_output_fidelity_closed(p, pi / 4.0) -
                                                    partial_output_fidelity_closed(p, 0.0));
            }
        }
    }
    // strong field: the scan must find both signs
    struct Pt {
        double gamma, eta, T;
    };
    static const Pt strong[6] = {{0.3, 3.0, 1.0}, {1.0, 2.0, 0.5}, {0.5, 2.0, 0.5},
                                 {0.2, 1.5, 0.3}, {0.8, 1.5, 1.0}, {0.1, 1.2, 0.2}};
    bool has_up = false;
    bool has_down = false;
    for (const Pt& s : strong) {
        const ModelParams p{1.0, s.gamma, s.eta, s.T};
        const double slope =
            partial_output_fidelity_closed(p, pi / 4.0) - partial_output_fidelity_closed(p, 0.0);
        has_up = has_up || slope > 1e-6;
        has_down = has_down || slope < -1e-6;
    }
    report(12, min_slope >= -1e-12 && has_up && has_down,
           "fidelity monotone in input entanglement below the crossing, mixed above", min_slope,
           0.0);
}

// criterion 13: zero-temperature limits on the crossing line
void criterion_13() {
    double worst = 0.0;
    for (double gamma : {0.2, 0.5, 0.8}) {
        const double etac = std::sqrt((1.0 - gamma) * (1.0 + gamma));
        const ModelParams p{1.0, gamma, etac, 1.0 / 60.0};
        worst = std::max(worst,
                         std::abs(thermal_concurrence_closed(p) - 0.5 * (1.0 - gamma)) / 1e-3);
        worst = std::max(worst, std::abs(fef_closed(p) - 0.5) / 1e-4);
    }
    report(13, worst < 1.0, "cold crossing-line concurrence (1-gamma)/2 and fef 1/2 (normalized)",
           worst, 1.0);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (failures == 0)
        std::printf("all 13 acceptance checks passed\n");
    else
        std::printf("%d acceptance check(s) FAILED\n", failures);
    return failures;
}
