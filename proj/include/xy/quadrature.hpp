// Gauss-Legendre quadrature nodes and weights.
#pragma once

#include <vector>

namespace xy {

struct Quadrature {
    std::vector<double> nodes;    // ascending in (-1, 1)
    std::vector<double> weights;  // positive, sum to 2
};

Quadrature gauss_legendre(int n);

// Affine image of a [-1, 1] rule on [a, b].
Quadrature mapped(const Quadrature& q, double a, double b);

}  // namespace xy
