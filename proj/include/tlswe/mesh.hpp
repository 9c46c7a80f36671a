#pragma once

#include <cassert>

#include "tlswe/errors.hpp"

namespace tlswe {

/// Uniform partition of [x_lo, x_hi] into nx cells; cell j spans
/// [x_lo + j*dx, x_lo + (j+1)*dx].
struct Mesh1D {
    double x_lo = 0.0;
    double x_hi = 1.0;
    int nx = 1;
    double dx = 1.0;

    Mesh1D() = default;
    Mesh1D(double lo, double hi, int n) : x_lo(lo), x_hi(hi), nx(n)
    {
        if (n < 1 || !(hi > lo)) throw ConfigError("Mesh1D: need x_hi > x_lo and nx >= 1");
        dx = (hi - lo) / n;
    }

    double left(int j) const { return x_lo + j * dx; }
    double center(int j) const { return x_lo + (j + 0.5) * dx; }
    /// Physical coordinate of reference point xi in cell j.
    double physical(int j, double xi) const { return center(j) + 0.5 * dx * xi; }
    /// Cell containing x (clamped at the ends).
    int locate(double x) const
    {
        int j = static_cast<int>((x - x_lo) / dx);
        if (j < 0) j = 0;
        if (j >= nx) j = nx - 1;
        return j;
    }
};

/// Tensor-product Cartesian mesh of nx*ny rectangles.
struct Mesh2D {
    double x_lo = 0.0, x_hi = 1.0;
    double y_lo = 0.0, y_hi = 1.0;
    int nx = 1, ny = 1;
    double dx = 1.0, dy = 1.0;

    Mesh2D() = default;
    Mesh2D(double xlo, double xhi, double ylo, double yhi, int nx_, int ny_)
        : x_lo(xlo), x_hi(xhi), y_lo(ylo), y_hi(yhi), nx(nx_), ny(ny_)
    {
        if (nx < 1 || ny < 1 || !(xhi > xlo) || !(yhi > ylo))
            throw ConfigError("Mesh2D: degenerate extents");
        dx = (xhi - xlo) / nx;
        dy = (yhi - ylo) / ny;
    }

    int cell(int i, int j) const { return j * nx + i; }
    double xcenter(int i) const { return x_lo + (i + 0.5) * dx; }
    double ycenter(int j) const { return y_lo + (j + 0.5) * dy; }
    double xphysical(int i, double xi) const { return xcenter(i) + 0.5 * dx * xi; }
    double yphysical(int j, double eta) const { return ycenter(j) + 0.5 * dy * eta; }
};

}  // namespace tlswe
