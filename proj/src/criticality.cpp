#include "xy/criticality.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace xy {

namespace {

struct Reduced {
    double gamma;
    double eta;
    double J;
};

// Flipping the signs of (gamma, eta, J) together leaves the thermal state's
// spectrum and correlations unchanged, so solvers only handle J > 0.
Reduced reduce_sign(double gamma, double eta, double J) {
    if (!(std::isfinite(gamma) && std::isfinite(eta) && std::isfinite(J)) || J == 0.0)
        throw std::invalid_argument("critical solver needs finite parameters and J != 0");
    if (J < 0.0) return {-gamma, -eta, -J};
    return {gamma, eta, J};
}

// The transition predicates are evaluated in log space so that their signs
// stay exact arbitrarily deep into the cold phase, where the rescaled
// Boltzmann weights themselves underflow to zero.
double log_sinh(double x) {
    return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

double log_cosh(double x) {
    if (x == 0.0) return 0.0;
    return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

struct LogTerms {
    double ls;   // log sinh(beta*|J|)
    double lc;   // log cosh(beta*|J|)
    double lcb;  // log cosh(beta*B)
    double la;   // log |a|, a = (gamma*J/B) sinh(beta*B)
};

LogTerms log_terms(const Reduced& r, double beta) {
    const double bm = r.eta * r.J;
    const double gj = r.gamma * r.J;
    const double b = std::hypot(bm, gj);
    LogTerms t;
    t.ls = log_sinh(beta * r.J);
    t.lc = log_cosh(beta * r.J);
    t.lcb = log_cosh(beta * b);
    t.la = gj == 0.0 ? -std::numeric_limits<double>::infinity()
                     : std::log(std::abs(gj) / b) + log_sinh(beta * b);
    return t;
}

// concurrence positive: sinh(beta*J) > sqrt(1 + a^2) or |a| > cosh(beta*J)
bool entangled_at(const Reduced& r, double beta) {
    const LogTerms t = log_terms(r, beta);
    const double lh = t.la > 350.0 ? t.la + 0.5 * std::log1p(std::exp(-2.0 * t.la))
                                   : 0.5 * std::log1p(std::exp(2.0 * t.la));
    return t.ls > lh || t.la > t.lc;
}

// largest Bell overlap above 1/2: sinh(beta*J) > cosh(beta*B) or |a| > cosh(beta*J)
bool useful_at(const Reduced& r, double beta) {
    const LogTerms t = log_terms(r, beta);
    return t.ls > t.lcb || t.la > t.lc;
}

// Finds the temperature where the predicate switches from true (cold phase)
// to false.  The initial bracket (1e-3*J, 10*J) is widened by doubling the
// hot end; a uniform 1024-point scan then certifies that the switch is
// unique before bisecting in beta to a relative width of 1e-10.
CriticalResult solve_crossing(const std::function<bool(double)>& positive, double J) {
    const double t_lo = 1e-3 * J;
    double t_hi = 10.0 * J;
    while (positive(1.0 / t_hi)) {
        t_hi *= 2.0;
        if (t_hi > 1e6 * J) return {std::nullopt, {t_lo, t_hi}, false};
    }

    constexpr int kScan = 1024;
    int transitions = 0;
    double t_cold = t_lo;  // cell edges straddling the switch
    double t_hot = t_hi;
    bool prev = positive(1.0 / t_lo);
    double t_prev = t_lo;
    for (int i = 1; i < kScan; ++i) {
        const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) / (kScan - 1.0);
        const bool pos = positive(1.0 / t);
        if (pos != prev) {
            ++transitions;
            t_cold = t_prev;
            t_hot = t;
        }
        prev = pos;
        t_prev = t;
    }
    if (transitions == 0) return {std::nullopt, {t_lo, t_hi}, true};
    if (transitions > 1) return {std::nullopt, {t_lo, t_hi}, false};

    double beta_pos = 1.0 / t_cold;  // predicate true on the cold side
    double beta_neg = 1.0 / t_hot;
    for (int it = 0; it < 200 && (beta_pos - beta_neg) > 1e-10 * beta_pos; ++it) {
        const double mid = 0.5 * (beta_pos + beta_neg);
        if (positive(mid))
            beta_pos = mid;
        else
            beta_neg = mid;
    }
    const double beta_star = 0.5 * (beta_pos + beta_neg);
    return {1.0 / beta_star, {t_cold, t_hot}, true};
}

}  // namespace

double eta_critical(double gamma) {
    if (!(std::abs(gamma) <= 1.0))
        throw std::invalid_argument("eta_critical needs |gamma| <= 1");
    return std::sqrt((1.0 - gamma) * (1.0 + gamma));
}

CriticalResult t1_critical(double gamma, double eta, double J) {
    const Reduced r = reduce_sign(gamma, eta, J);
    return solve_crossing([&](double beta) { return entangled_at(r, beta); }, r.J);
}

CriticalResult t2_critical(double gamma, double eta, double J) {
    const Reduced r = reduce_sign(gamma, eta, J);
    // On the crossing line hypot(eta, gamma) = 1 the fidelity reaches 1/2
    // only in the zero-temperature limit.
    if (std::abs(std::hypot(r.eta, r.gamma) - 1.0) <= 1e-12)
        return {0.0, {0.0, 0.0}, true};
    return solve_crossing([&](double beta) { return useful_at(r, beta); }, r.J);
}

double t2_asymptote(double gamma, double eta, double J) {
    const Reduced r = reduce_sign(gamma, eta, J);
    if (!(r.gamma > 0.0))
        throw std::invalid_argument("t2_asymptote needs gamma > 0");
    if (!(r.eta > std::max(1.0, r.gamma)))
        throw std::invalid_argument("t2_asymptote needs eta > max(1, gamma)");
    return r.eta * r.J / std::log(2.0 * r.eta / r.gamma);
}

}  // namespace xy
