#pragma once

#include <cassert>

namespace tlswe {

// Highest polynomial degree the modal machinery is sized for. The schemes
// are exercised with k = 1, 2; quadrature-heavy helpers go a bit higher.
inline constexpr int kMaxDegree = 6;

struct LegendreValue {
    double value;
    double deriv;
};

/// P_k and P_k' at xi in [-1,1] by the three-term recurrence.
inline LegendreValue legendre_eval(int k, double xi)
{
    assert(k >= 0);
    double p0 = 1.0, d0 = 0.0;   // P_0
    if (k == 0) return {p0, d0};
    double p1 = xi, d1 = 1.0;    // P_1
    for (int n = 1; n < k; ++n) {
        const double p2 = ((2 * n + 1) * xi * p1 - n * p0) / (n + 1);
        const double d2 = d0 + (2 * n + 1) * p1;
        p0 = p1; d0 = d1;
        p1 = p2; d1 = d2;
    }
    return {p1, d1};
}

/// All of P_0..P_k (values, optionally derivatives) at xi.
inline void legendre_basis(int k, double xi, double* val, double* der = nullptr)
{
    assert(k >= 0 && k <= kMaxDegree);
    val[0] = 1.0;
    if (der) der[0] = 0.0;
    if (k == 0) return;
    val[1] = xi;
    if (der) der[1] = 1.0;
    for (int n = 1; n < k; ++n) {
        val[n + 1] = ((2 * n + 1) * xi * val[n] - n * val[n - 1]) / (n + 1);
        if (der) der[n + 1] = der[n - 1] + (2 * n + 1) * val[n];
    }
}

}  // namespace tlswe
