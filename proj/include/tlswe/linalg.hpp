#pragma once

#include <cassert>
#include <cmath>

#include "tlswe/errors.hpp"

namespace tlswe::detail {

inline constexpr int kMaxDense = 8;

/// Solve A x = b in place (row-major n x n, n <= kMaxDense) by Gaussian
/// elimination with partial pivoting. A and b are destroyed; x lands in b.
inline void solve_dense(int n, double* A, double* b)
{
    assert(n >= 1 && n <= kMaxDense);
    int perm[kMaxDense];
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(A[perm[col] * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(A[perm[r] * n + col]);
            if (v > best) { best = v; piv = r; }
        }
        if (!(best > 0.0)) throw SolverError("solve_dense: singular matrix");
        std::swap(perm[col], perm[piv]);
        const int pr = perm[col];
        const double diag = A[pr * n + col];
        for (int r = col + 1; r < n; ++r) {
            const int rr = perm[r];
            const double f = A[rr * n + col] / diag;
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) A[rr * n + c] -= f * A[pr * n + c];
            b[rr] -= f * b[pr];
        }
    }
    double x[kMaxDense];
    for (int row = n - 1; row >= 0; --row) {
        const int pr = perm[row];
        double s = b[pr];
        for (int c = row + 1; c < n; ++c) s -= A[pr * n + c] * x[c];
        x[row] = s / A[pr * n + row];
    }
    for (int i = 0; i < n; ++i) b[i] = x[i];
}

/// Dense inverse (n <= kMaxDense) by Gauss-Jordan with partial pivoting.
inline void invert_dense(int n, const double* A, double* inv)
{
    assert(n >= 1 && n <= kMaxDense);
    double work[kMaxDense * 2 * kMaxDense];
    const int w = 2 * n;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) work[r * w + c] = A[r * n + c];
        for (int c = 0; c < n; ++c) work[r * w + n + c] = (r == c) ? 1.0 : 0.0;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(work[col * w + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(work[r * w + col]);
            if (v > best) { best = v; piv = r; }
        }
        if (!(best > 0.0)) throw SolverError("invert_dense: singular matrix");
        if (piv != col)
            for (int c = 0; c < w; ++c) std::swap(work[col * w + c], work[piv * w + c]);
        const double d = work[col * w + col];
        for (int c = 0; c < w; ++c) work[col * w + c] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = work[r * w + col];
            if (f == 0.0) continue;
            for (int c = 0; c < w; ++c) work[r * w + c] -= f * work[col * w + c];
        }
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[r * n + c] = work[r * w + n + c];
}

}  // namespace tlswe::detail
