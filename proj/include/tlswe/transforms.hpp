#pragma once

#include <cmath>
#include <string>

#include "tlswe/errors.hpp"
#include "tlswe/linalg.hpp"
#include "tlswe/physics.hpp"

namespace tlswe {

struct NewtonSettings {
    double tol = 1e-13;     // max-norm residual target
    int max_iter = 100;
    int max_halvings = 40;  // step damping to keep depths positive
};

struct DepthPair {
    double h1 = 0.0;
    double h2 = 0.0;
};

namespace detail {

// Residuals of the coupled cubic system defining (h1, h2) from
// v = (E1, m1, E2, m2, b):
//   Q1 = g h1^3 + (g (h2 + b) - E1) h1^2 + m1^2/2
//   Q2 = g h2^3 + (g (r h1 + b) - E2) h2^2 + m2^2/2
inline void cubic_residuals(const double v[5], const PhysParams& p, double h1, double h2,
                            double& Q1, double& Q2)
{
    const double E1 = v[0], m1 = v[1], E2 = v[2], m2 = v[3], b = v[4];
    Q1 = p.g * h1 * h1 * h1 + (p.g * (h2 + b) - E1) * h1 * h1 + 0.5 * m1 * m1;
    Q2 = p.g * h2 * h2 * h2 + (p.g * (p.r * h1 + b) - E2) * h2 * h2 + 0.5 * m2 * m2;
}

inline void cubic_jacobian(const double v[5], const PhysParams& p, double h1, double h2,
                           double J[2][2])
{
    const double E1 = v[0], E2 = v[2], b = v[4];
    J[0][0] = 3.0 * p.g * h1 * h1 + 2.0 * (p.g * (h2 + b) - E1) * h1;
    J[0][1] = p.g * h1 * h1;
    J[1][0] = p.g * p.r * h2 * h2;
    J[1][1] = 3.0 * p.g * h2 * h2 + 2.0 * (p.g * (p.r * h1 + b) - E2) * h2;
}

}  // namespace detail

/// Inverse transform: recover the layer depths from equilibrium variables.
/// Zero-discharge factors are solved in closed form (the cubic degenerates);
/// otherwise a damped Newton iteration on (Q1, Q2) runs to max|Q_i| <= tol.
inline DepthPair equil_to_cons_moving(const double v[5], const PhysParams& p, DepthPair guess,
                                      const NewtonSettings& ns = {})
{
    const double E1 = v[0], m1 = v[1], E2 = v[2], m2 = v[3], b = v[4];

    if (m1 == 0.0 && m2 == 0.0) {
        // both cubics reduce to linear relations in the depths
        const double h1 = (E1 - E2) / (p.g * (1.0 - p.r));
        const double h2 = E1 / p.g - b - h1;
        if (!(h1 > 0.0) || !(h2 > 0.0))
            throw SolverError("equil_to_cons_moving: still-water branch has no positive depths");
        return {h1, h2};
    }

    if (m1 == 0.0 || m2 == 0.0) {
        // one depth is an affine function of the other; Newton on the
        // remaining cubic alone
        const bool first_zero = (m1 == 0.0);
        double h = first_zero ? guess.h2 : guess.h1;
        if (!(h > 0.0)) h = 1.0;
        for (int it = 0; it < ns.max_iter; ++it) {
            double Q, dQ;
            if (first_zero) {
                const double h1 = E1 / p.g - h - b;  // from Q1 = 0
                if (!(h1 > 0.0))
                    throw SolverError("equil_to_cons_moving: degenerate branch left h1 <= 0");
                Q = p.g * h * h * h + (p.g * (p.r * h1 + b) - E2) * h * h + 0.5 * m2 * m2;
                dQ = 3.0 * p.g * h * h + 2.0 * (p.g * (p.r * h1 + b) - E2) * h
                     - p.g * p.r * h * h;  // dh1/dh2 = -1
            } else {
                const double h2 = E2 / p.g - p.r * h - b;  // from Q2 = 0
                if (!(h2 > 0.0))
                    throw SolverError("equil_to_cons_moving: degenerate branch left h2 <= 0");
                Q = p.g * h * h * h + (p.g * (h2 + b) - E1) * h * h + 0.5 * m1 * m1;
                dQ = 3.0 * p.g * h * h + 2.0 * (p.g * (h2 + b) - E1) * h
                     - p.g * p.r * h * h;  // dh2/dh1 = -r
            }
            if (std::abs(Q) <= ns.tol) break;
            if (dQ == 0.0) throw SolverError("equil_to_cons_moving: stationary cubic iterate");
            double step = -Q / dQ;
            int halvings = 0;
            while (h + step <= 0.0 && halvings < ns.max_halvings) {
                step *= 0.5;
                ++halvings;
            }
            if (h + step <= 0.0)
                throw SolverError("equil_to_cons_moving: iterate pinned at zero depth");
            h += step;
            if (it + 1 == ns.max_iter)
                throw SolverError("equil_to_cons_moving: no convergence (degenerate branch)");
        }
        DepthPair out;
        if (first_zero) {
            out.h2 = h;
            out.h1 = E1 / p.g - h - b;
        } else {
            out.h1 = h;
            out.h2 = E2 / p.g - p.r * h - b;
        }
        return out;
    }

    double h1 = guess.h1 > 0.0 ? guess.h1 : 1.0;
    double h2 = guess.h2 > 0.0 ? guess.h2 : 1.0;
    for (int it = 0; it < ns.max_iter; ++it) {
        double Q1, Q2;
        detail::cubic_residuals(v, p, h1, h2, Q1, Q2);
        if (std::max(std::abs(Q1), std::abs(Q2)) <= ns.tol) return {h1, h2};

        double J[2][2];
        detail::cubic_jacobian(v, p, h1, h2, J);
        const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        if (det == 0.0) throw SolverError("equil_to_cons_moving: singular Jacobian");
        double d1 = -(J[1][1] * Q1 - J[0][1] * Q2) / det;
        double d2 = -(-J[1][0] * Q1 + J[0][0] * Q2) / det;

        int halvings = 0;
        while ((h1 + d1 <= 0.0 || h2 + d2 <= 0.0) && halvings < ns.max_halvings) {
            d1 *= 0.5;
            d2 *= 0.5;
            ++halvings;
        }
        if (h1 + d1 <= 0.0 || h2 + d2 <= 0.0)
            throw SolverError("equil_to_cons_moving: iterate pinned at zero depth");
        h1 += d1;
        h2 += d2;
    }
    throw SolverError("equil_to_cons_moving: no convergence after iteration cap");
}

/// Sensitivities d(h1,h2)/d(E1,m1,E2,m2,b) at a solved depth pair, via the
/// implicit function theorem on (Q1, Q2).
inline void dh_dv(double h1, double h2, const double v[5], const PhysParams& p, double out[2][5])
{
    double J[2][2];
    detail::cubic_jacobian(v, p, h1, h2, J);
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0) throw SolverError("dh_dv: singular transform Jacobian (critical state)");

    // columns of dQ/dv
    const double m1 = v[1], m2 = v[3];
    const double dQdv[5][2] = {
        {-h1 * h1, 0.0},            // E1
        {m1, 0.0},                  // m1
        {0.0, -h2 * h2},            // E2
        {0.0, m2},                  // m2
        {p.g * h1 * h1, p.g * h2 * h2},  // b
    };
    for (int c = 0; c < 5; ++c) {
        const double r1 = dQdv[c][0], r2 = dQdv[c][1];
        out[0][c] = -(J[1][1] * r1 - J[0][1] * r2) / det;
        out[1][c] = -(-J[1][0] * r1 + J[0][0] * r2) / det;
    }
}

}  // namespace tlswe
