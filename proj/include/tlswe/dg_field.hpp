#pragma once

#include <cassert>
#include <cstring>
#include <functional>
#include <vector>

#include "tlswe/legendre.hpp"
#include "tlswe/mesh.hpp"
#include "tlswe/quadrature.hpp"

namespace tlswe {

inline constexpr int kMaxModes1D = kMaxDegree + 1;
inline constexpr int kMaxComp = 6;

/// Piecewise polynomial of degree k with ncomp components, stored as modal
/// Legendre coefficients per cell. Mode m carries the basis function
/// P_m(xi(x)); mode 0 is the cell average.
struct DGField1D {
    Mesh1D mesh;
    int ncomp = 1;
    int degree = 1;
    std::vector<double> coef;  // [cell][comp][mode]

    DGField1D() = default;
    DGField1D(const Mesh1D& m, int l, int k) : mesh(m), ncomp(l), degree(k)
    {
        assert(l >= 1 && l <= kMaxComp && k >= 0 && k <= kMaxDegree);
        coef.assign(static_cast<size_t>(m.nx) * l * (k + 1), 0.0);
    }

    int modes() const { return degree + 1; }
    double& at(int cell, int comp, int mode)
    {
        return coef[(static_cast<size_t>(cell) * ncomp + comp) * modes() + mode];
    }
    double at(int cell, int comp, int mode) const
    {
        return coef[(static_cast<size_t>(cell) * ncomp + comp) * modes() + mode];
    }
    const double* cell_data(int cell, int comp) const
    {
        return &coef[(static_cast<size_t>(cell) * ncomp + comp) * modes()];
    }
    double* cell_data(int cell, int comp)
    {
        return &coef[(static_cast<size_t>(cell) * ncomp + comp) * modes()];
    }

    double average(int cell, int comp) const { return at(cell, comp, 0); }

    /// All components at reference point xi of a cell.
    void eval(int cell, double xi, double* out) const
    {
        double P[kMaxModes1D];
        legendre_basis(degree, xi, P);
        for (int c = 0; c < ncomp; ++c) {
            const double* a = cell_data(cell, c);
            double s = 0.0;
            for (int m = 0; m <= degree; ++m) s += a[m] * P[m];
            out[c] = s;
        }
    }
    double eval(int cell, int comp, double xi) const
    {
        double P[kMaxModes1D];
        legendre_basis(degree, xi, P);
        const double* a = cell_data(cell, comp);
        double s = 0.0;
        for (int m = 0; m <= degree; ++m) s += a[m] * P[m];
        return s;
    }
    /// d/dxi of all components (multiply by 2/dx for d/dx).
    void eval_deriv(int cell, double xi, double* out) const
    {
        double P[kMaxModes1D], D[kMaxModes1D];
        legendre_basis(degree, xi, P, D);
        for (int c = 0; c < ncomp; ++c) {
            const double* a = cell_data(cell, c);
            double s = 0.0;
            for (int m = 1; m <= degree; ++m) s += a[m] * D[m];
            out[c] = s;
        }
    }
    /// One-sided limits of the cell polynomial: left = value at xi=-1
    /// (interface x_{j-1/2}^+), right = value at xi=+1 (x_{j+1/2}^-).
    void traces(int cell, double* left, double* right) const
    {
        for (int c = 0; c < ncomp; ++c) {
            const double* a = cell_data(cell, c);
            double sl = 0.0, sr = 0.0, sign = 1.0;
            for (int m = 0; m <= degree; ++m) {
                sr += a[m];           // P_m(+1) = 1
                sl += sign * a[m];    // P_m(-1) = (-1)^m
                sign = -sign;
            }
            left[c] = sl;
            right[c] = sr;
        }
    }
};

/// Per-cell L2 projection of a pointwise function onto the modal space,
/// using a rule exact for the requested degree (2k+3 by default).
inline DGField1D project(const std::function<void(double, double*)>& f, const Mesh1D& mesh,
                         int degree, int ncomp, const QuadratureRule& rule)
{
    DGField1D field(mesh, ncomp, degree);
    const int nq = rule.size();
    std::vector<double> P(static_cast<size_t>(nq) * (degree + 1));
    for (int q = 0; q < nq; ++q) legendre_basis(degree, rule.nodes[q], &P[q * (degree + 1)]);

    double fx[kMaxComp];
    for (int j = 0; j < mesh.nx; ++j) {
        for (int q = 0; q < nq; ++q) {
            f(mesh.physical(j, rule.nodes[q]), fx);
            for (int c = 0; c < ncomp; ++c) {
                const double wf = rule.weights[q] * fx[c];
                double* a = field.cell_data(j, c);
                for (int m = 0; m <= degree; ++m) a[m] += wf * P[q * (degree + 1) + m];
            }
        }
        // int P_m^2 dxi = 2/(2m+1)
        for (int c = 0; c < ncomp; ++c) {
            double* a = field.cell_data(j, c);
            for (int m = 0; m <= degree; ++m) a[m] *= 0.5 * (2 * m + 1);
        }
    }
    return field;
}

inline DGField1D project(const std::function<void(double, double*)>& f, const Mesh1D& mesh,
                         int degree, int ncomp)
{
    return project(f, mesh, degree, ncomp, gauss_rule(degree + 2));
}

inline DGField1D project_scalar(const std::function<double(double)>& f, const Mesh1D& mesh,
                                int degree)
{
    return project([&](double x, double* out) { out[0] = f(x); }, mesh, degree, 1);
}

/// 2D tensor-product modal field: mode (mx,my) carries P_mx(xi) P_my(eta),
/// flattened as m = my*(k+1) + mx.
struct DGField2D {
    Mesh2D mesh;
    int ncomp = 1;
    int degree = 1;
    std::vector<double> coef;  // [cell][comp][my][mx]

    DGField2D() = default;
    DGField2D(const Mesh2D& m, int l, int k) : mesh(m), ncomp(l), degree(k)
    {
        assert(l >= 1 && l <= kMaxComp && k >= 0 && k <= kMaxDegree);
        coef.assign(static_cast<size_t>(m.nx) * m.ny * l * (k + 1) * (k + 1), 0.0);
    }

    int modes1d() const { return degree + 1; }
    int modes() const { return (degree + 1) * (degree + 1); }
    double& at(int cell, int comp, int my, int mx)
    {
        return coef[((static_cast<size_t>(cell) * ncomp + comp) * modes1d() + my) * modes1d() + mx];
    }
    double at(int cell, int comp, int my, int mx) const
    {
        return coef[((static_cast<size_t>(cell) * ncomp + comp) * modes1d() + my) * modes1d() + mx];
    }
    const double* cell_data(int cell, int comp) const
    {
        return &coef[(static_cast<size_t>(cell) * ncomp + comp) * modes()];
    }
    double* cell_data(int cell, int comp)
    {
        return &coef[(static_cast<size_t>(cell) * ncomp + comp) * modes()];
    }
    double average(int cell, int comp) const { return cell_data(cell, comp)[0]; }

    void eval(int cell, double xi, double eta, double* out) const
    {
        double Px[kMaxModes1D], Py[kMaxModes1D];
        legendre_basis(degree, xi, Px);
        legendre_basis(degree, eta, Py);
        for (int c = 0; c < ncomp; ++c) {
            const double* a = cell_data(cell, c);
            double s = 0.0;
            for (int my = 0; my <= degree; ++my) {
                double sx = 0.0;
                for (int mx = 0; mx <= degree; ++mx) sx += a[my * modes1d() + mx] * Px[mx];
                s += sx * Py[my];
            }
            out[c] = s;
        }
    }
    /// (d/dxi, d/deta) of all components.
    void eval_deriv(int cell, double xi, double eta, double* dxi, double* deta) const
    {
        double Px[kMaxModes1D], Dx[kMaxModes1D], Py[kMaxModes1D], Dy[kMaxModes1D];
        legendre_basis(degree, xi, Px, Dx);
        legendre_basis(degree, eta, Py, Dy);
        for (int c = 0; c < ncomp; ++c) {
            const double* a = cell_data(cell, c);
            double sx = 0.0, sy = 0.0;
            for (int my = 0; my <= degree; ++my)
                for (int mx = 0; mx <= degree; ++mx) {
                    const double amm = a[my * modes1d() + mx];
                    sx += amm * Dx[mx] * Py[my];
                    sy += amm * Px[mx] * Dy[my];
                }
            dxi[c] = sx;
            deta[c] = sy;
        }
    }
};

inline DGField2D project2d(const std::function<void(double, double, double*)>& f,
                           const Mesh2D& mesh, int degree, int ncomp, const QuadratureRule& rule)
{
    DGField2D field(mesh, ncomp, degree);
    const int nq = rule.size();
    const int k1 = degree + 1;
    std::vector<double> P(static_cast<size_t>(nq) * k1);
    for (int q = 0; q < nq; ++q) legendre_basis(degree, rule.nodes[q], &P[q * k1]);

    double fx[kMaxComp];
    for (int j = 0; j < mesh.ny; ++j)
        for (int i = 0; i < mesh.nx; ++i) {
            const int cell = mesh.cell(i, j);
            for (int qy = 0; qy < nq; ++qy)
                for (int qx = 0; qx < nq; ++qx) {
                    f(mesh.xphysical(i, rule.nodes[qx]), mesh.yphysical(j, rule.nodes[qy]), fx);
                    const double w = rule.weights[qx] * rule.weights[qy];
                    for (int c = 0; c < ncomp; ++c) {
                        double* a = field.cell_data(cell, c);
                        for (int my = 0; my <= degree; ++my)
                            for (int mx = 0; mx <= degree; ++mx)
                                a[my * k1 + mx] += w * fx[c] * P[qx * k1 + mx] * P[qy * k1 + my];
                    }
                }
            for (int c = 0; c < ncomp; ++c) {
                double* a = field.cell_data(cell, c);
                for (int my = 0; my <= degree; ++my)
                    for (int mx = 0; mx <= degree; ++mx)
                        a[my * k1 + mx] *= 0.25 * (2 * mx + 1) * (2 * my + 1);
            }
        }
    return field;
}

inline DGField2D project2d(const std::function<void(double, double, double*)>& f,
                           const Mesh2D& mesh, int degree, int ncomp)
{
    return project2d(f, mesh, degree, ncomp, gauss_rule(degree + 2));
}

}  // namespace tlswe
