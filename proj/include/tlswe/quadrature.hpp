#pragma once

#include <cassert>
#include <cmath>
#include <vector>

#include "tlswe/legendre.hpp"

namespace tlswe {

/// Gauss-Legendre rule on [-1,1]; exact for polynomials of degree 2n-1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// n-point Gauss-Legendre rule. Nodes are the roots of P_n, found by Newton
/// iteration from the Chebyshev estimates; weights w_i = 2/((1-x_i^2) P_n'(x_i)^2).
inline QuadratureRule gauss_rule(int n)
{
    assert(n >= 1);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        LegendreValue p{};
        for (int it = 0; it < 100; ++it) {
            p = legendre_eval(n, x);
            const double dx = p.value / p.deriv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        p = legendre_eval(n, x);
        const double w = 2.0 / ((1.0 - x * x) * p.deriv * p.deriv);
        rule.nodes[i] = -x;           // ascending order
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
        const LegendreValue p = legendre_eval(n, 0.0);
        rule.weights[n / 2] = 2.0 / (p.deriv * p.deriv);
    }
    return rule;
}

}  // namespace tlswe
