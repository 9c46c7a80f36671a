#pragma once

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace tlswe {

/// Physical constants of the two-layer model. r = rho_1/rho_2 is the ratio
/// of the upper to the lower layer density.
struct PhysParams {
    double g = 9.81;
    double r = 0.98;
};

namespace detail {
inline void require_positive(double value, const char* what)
{
    if (!(value > 0.0)) throw std::domain_error(std::string("nonpositive ") + what);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Still-water formulation. State v = (h1, m1, w, m2) with w = h2 + b; the
// bottom enters as a coefficient, not as an unknown.
// ---------------------------------------------------------------------------

inline void flux_still_1d(const double v[4], double b, const PhysParams& p, double f[4])
{
    const double h1 = v[0], m1 = v[1], w = v[2], m2 = v[3];
    const double h2 = w - b;
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "w - b");
    f[0] = m1;
    f[1] = m1 * m1 / h1 + 0.5 * p.g * h1 * h1;
    f[2] = m2;
    f[3] = m2 * m2 / h2 + 0.5 * p.g * w * w;
}

/// Coupling matrix G(v) of the quasilinear still-water form, rows/cols in
/// (h1, m1, w, m2) order. Nonzeros: G[1][2] = g h1, G[3][0] = g r (w-b),
/// G[3][2] = -g b.
inline void coupling_still_1d(const double v[4], double b, const PhysParams& p, double G[4][4])
{
    const double h1 = v[0], w = v[2];
    detail::require_positive(h1, "h1");
    detail::require_positive(w - b, "w - b");
    std::memset(G, 0, 16 * sizeof(double));
    G[1][2] = p.g * h1;
    G[3][0] = p.g * p.r * (w - b);
    G[3][2] = -p.g * b;
}

/// G(v) * grad for the 1D still scheme volume term.
inline void coupling_apply_still_1d(const double v[4], double b, const PhysParams& p,
                                    const double grad[4], double out[4])
{
    const double h1 = v[0], w = v[2];
    out[0] = 0.0;
    out[1] = p.g * h1 * grad[2];
    out[2] = 0.0;
    out[3] = p.g * p.r * (w - b) * grad[0] - p.g * b * grad[2];
}

// 2D state v = (h1, m1, n1, w, m2, n2); direction 0 = x, 1 = y.
inline void flux_still_2d(const double v[6], double b, const PhysParams& p, int direction,
                          double f[6])
{
    const double h1 = v[0], m1 = v[1], n1 = v[2], w = v[3], m2 = v[4], n2 = v[5];
    const double h2 = w - b;
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "w - b");
    if (direction == 0) {
        f[0] = m1;
        f[1] = m1 * m1 / h1 + 0.5 * p.g * h1 * h1;
        f[2] = m1 * n1 / h1;
        f[3] = m2;
        f[4] = m2 * m2 / h2 + 0.5 * p.g * w * w;
        f[5] = m2 * n2 / h2;
    } else {
        f[0] = n1;
        f[1] = m1 * n1 / h1;
        f[2] = n1 * n1 / h1 + 0.5 * p.g * h1 * h1;
        f[3] = n2;
        f[4] = m2 * n2 / h2;
        f[5] = n2 * n2 / h2 + 0.5 * p.g * w * w;
    }
}

/// 2D coupling matrices, signs matching the 1D convention (source terms of
/// the primitive system moved to the left-hand side).
inline void coupling_still_2d(const double v[6], double b, const PhysParams& p, int direction,
                              double G[6][6])
{
    const double h1 = v[0], w = v[3];
    detail::require_positive(h1, "h1");
    detail::require_positive(w - b, "w - b");
    std::memset(G, 0, 36 * sizeof(double));
    const int mom1 = (direction == 0) ? 1 : 2;  // m1 row in x, n1 row in y
    const int mom2 = (direction == 0) ? 4 : 5;
    G[mom1][3] = p.g * h1;
    G[mom2][0] = p.g * p.r * (w - b);
    G[mom2][3] = -p.g * b;
}

inline void coupling_apply_still_2d(const double v[6], double b, const PhysParams& p,
                                    int direction, const double grad[6], double out[6])
{
    const double h1 = v[0], w = v[3];
    for (int c = 0; c < 6; ++c) out[c] = 0.0;
    const int mom1 = (direction == 0) ? 1 : 2;
    const int mom2 = (direction == 0) ? 4 : 5;
    out[mom1] = p.g * h1 * grad[3];
    out[mom2] = p.g * p.r * (w - b) * grad[0] - p.g * b * grad[3];
}

// ---------------------------------------------------------------------------
// Augmented conservative formulation for the moving-equilibrium scheme.
// u = (h1, m1, h2, m2, b); the trivial equation b_t = 0 is appended.
// ---------------------------------------------------------------------------

inline void flux_conservative(const double u[5], const PhysParams& p, double f[5])
{
    const double h1 = u[0], m1 = u[1], h2 = u[2], m2 = u[3];
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "h2");
    f[0] = m1;
    f[1] = m1 * m1 / h1 + 0.5 * p.g * h1 * h1;
    f[2] = m2;
    f[3] = m2 * m2 / h2 + 0.5 * p.g * h2 * h2;
    f[4] = 0.0;
}

inline void coupling_conservative(const double u[5], const PhysParams& p, double G[5][5])
{
    const double h1 = u[0], h2 = u[2];
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "h2");
    std::memset(G, 0, 25 * sizeof(double));
    G[1][2] = p.g * h1;
    G[1][4] = p.g * h1;
    G[3][0] = p.g * p.r * h2;
    G[3][4] = p.g * h2;
}

inline void coupling_apply_conservative(const double u[5], const PhysParams& p,
                                        const double grad[5], double out[5])
{
    const double h1 = u[0], h2 = u[2];
    out[0] = 0.0;
    out[1] = p.g * h1 * (grad[2] + grad[4]);
    out[2] = 0.0;
    out[3] = p.g * p.r * h2 * grad[0] + p.g * h2 * grad[4];
    out[4] = 0.0;
}

/// Equilibrium variables v = (E1, m1, E2, m2, b) from the augmented state.
/// E_i are the layer energies; constant in space at a moving equilibrium.
inline void cons_to_equil_moving(const double u[5], const PhysParams& p, double v[5])
{
    const double h1 = u[0], m1 = u[1], h2 = u[2], m2 = u[3], b = u[4];
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "h2");
    v[0] = 0.5 * m1 * m1 / (h1 * h1) + p.g * (h1 + h2 + b);
    v[1] = m1;
    v[2] = 0.5 * m2 * m2 / (h2 * h2) + p.g * (p.r * h1 + h2 + b);
    v[3] = m2;
    v[4] = b;
}

/// The matrix of f(u)_x + G(u) u_x = L(u) vtilde(u)_x, with
/// vtilde = (E1, m1, E2, m2, 0).
inline void matrix_L(const double u[5], double L[5][5])
{
    const double h1 = u[0], h2 = u[2];
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "h2");
    const double u1 = u[1] / h1, u2 = u[3] / h2;
    std::memset(L, 0, 25 * sizeof(double));
    L[0][1] = 1.0;
    L[1][0] = h1;
    L[1][1] = u1;
    L[2][3] = 1.0;
    L[3][2] = h2;
    L[3][3] = u2;
    L[4][4] = 1.0;
}

}  // namespace tlswe
