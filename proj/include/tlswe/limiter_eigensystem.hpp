#pragma once

#include <array>
#include <cmath>

#include "tlswe/eigenvalues.hpp"
#include "tlswe/linalg.hpp"

namespace tlswe {

/// Local characteristic decomposition used by the moving-scheme limiter:
/// wave speeds and eigenvectors of the similarity-transformed Jacobian
/// acting on (E1, m1, E2, m2). ok = false means the decomposition is not
/// usable (complex or clustered speeds) and the caller should limit
/// componentwise instead.
struct EigenSystem {
    std::array<double, 4> lambda{};
    double R[4][4]{};
    double L[4][4]{};  // numerical inverse of R
    bool ok = false;
};

/// u = (h1, m1, h2, m2). Right eigenvectors in closed form; the left matrix
/// is computed as R^{-1}.
inline EigenSystem limiter_eigensystem(const double u[4], const PhysParams& p)
{
    EigenSystem sys;
    const double h1 = u[0], h2 = u[2];
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "h2");
    const double u1 = u[1] / h1, u2 = u[3] / h2;
    const double c1s = p.g * h1, c2s = p.g * h2;

    const WaveSpeeds ws = eigenvalues_exact(h1, u1, h2, u2, p);
    sys.lambda = ws.lambda;
    if (!ws.all_real) return sys;

    // reject (near-)repeated speeds; the eigenvector formula degenerates
    double span = std::max(1.0, std::abs(ws.lambda[3] - ws.lambda[0]));
    for (int k = 0; k + 1 < 4; ++k)
        if (std::abs(ws.lambda[k + 1] - ws.lambda[k]) < 1e-10 * span) return sys;

    for (int k = 0; k < 4; ++k) {
        const double lam = ws.lambda[k];
        const double d1 = u1 - lam;
        const double s = c1s - d1 * d1;
        sys.R[0][k] = d1;
        sys.R[1][k] = -c1s / p.g;
        sys.R[2][k] = (lam - u2) * s / c2s;
        sys.R[3][k] = s / p.g;
    }
    try {
        detail::invert_dense(4, &sys.R[0][0], &sys.L[0][0]);
    } catch (const SolverError&) {
        return sys;
    }
    sys.ok = true;
    return sys;
}

}  // namespace tlswe
