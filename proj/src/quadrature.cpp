#include "xy/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xy {

namespace {

// Legendre P_n and its derivative at x via the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

Quadrature gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    if (n == 1) {
        q.nodes[0] = 0.0;
        q.weights[0] = 2.0;
        return q;
    }
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            legendre(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        q.nodes[i] = -x;  // guesses start near +1; store ascending
        q.weights[i] = w;
        q.nodes[n - 1 - i] = x;
        q.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) q.nodes[n / 2] = 0.0;
    return q;
}

Quadrature mapped(const Quadrature& q, double a, double b) {
    Quadrature out;
    const std::size_t n = q.nodes.size();
    out.nodes.resize(n);
    out.weights.resize(n);
    const double mid = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < n; ++i) {
        out.nodes[i] = mid + h * q.nodes[i];
        out.weights[i] = h * q.weights[i];
    }
    return out;
}

}  // namespace xy
