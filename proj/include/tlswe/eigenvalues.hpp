#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "tlswe/physics.hpp"

namespace tlswe {

/// Wave speeds of the coupled two-layer system, i.e. the four roots of
///   ((lambda-u1)^2 - g h1)((lambda-u2)^2 - g h2) - r g^2 h1 h2 = 0.
/// When hyperbolicity is lost the quartic has a conjugate pair; the entries
/// then hold root moduli (usable as speed bounds) and all_real is false.
struct WaveSpeeds {
    std::array<double, 4> lambda{};  // ascending
    bool all_real = true;

    double max_abs() const
    {
        double m = 0.0;
        for (double l : lambda) m = std::max(m, std::abs(l));
        return m;
    }
};

namespace detail {

/// Largest real root of t^3 + a t^2 + b t + c (Cardano / trigonometric form),
/// polished by Newton.
inline double largest_real_cubic_root(double a, double b, double c)
{
    const double ps = b - a * a / 3.0;
    const double qs = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double disc = 0.25 * qs * qs + ps * ps * ps / 27.0;
    double t;
    if (disc >= 0.0) {
        const double sd = std::sqrt(disc);
        t = std::cbrt(-0.5 * qs + sd) + std::cbrt(-0.5 * qs - sd) - a / 3.0;
    } else {
        // three real roots; k = 0 branch of the cosine form is the largest
        const double rho = std::sqrt(-ps * ps * ps / 27.0);
        const double theta = std::acos(std::clamp(-0.5 * qs / rho, -1.0, 1.0));
        t = 2.0 * std::sqrt(-ps / 3.0) * std::cos(theta / 3.0) - a / 3.0;
    }
    for (int it = 0; it < 3; ++it) {
        const double f = ((t + a) * t + b) * t + c;
        const double df = (3.0 * t + 2.0 * a) * t + b;
        if (df == 0.0) break;
        t -= f / df;
    }
    return t;
}

inline double quartic_value(double x, double a3, double a2, double a1, double a0)
{
    return (((x + a3) * x + a2) * x + a1) * x + a0;
}

inline double quartic_deriv(double x, double a3, double a2, double a1)
{
    return ((4.0 * x + 3.0 * a3) * x + 2.0 * a2) * x + a1;
}

}  // namespace detail

/// Closed-form quartic solve (resolvent cubic + quadratic factorization),
/// with one Newton polish per real root to undo cancellation.
inline WaveSpeeds eigenvalues_exact(double h1, double u1, double h2, double u2,
                                    const PhysParams& p)
{
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "h2");
    const double c1s = p.g * h1, c2s = p.g * h2;
    const double A = u1 * u1 - c1s, B = u2 * u2 - c2s;

    // monic coefficients of the characteristic quartic
    const double a3 = -2.0 * (u1 + u2);
    const double a2 = A + B + 4.0 * u1 * u2;
    const double a1 = -2.0 * u1 * B - 2.0 * u2 * A;
    const double a0 = A * B - p.r * c1s * c2s;

    // depressed form y^4 + P y^2 + Q y + R, lambda = y - a3/4
    const double shift = -a3 / 4.0;
    const double P = a2 - 3.0 * a3 * a3 / 8.0;
    const double Q = a1 - 0.5 * a3 * a2 + a3 * a3 * a3 / 8.0;
    const double R = a0 - 0.25 * a3 * a1 + a3 * a3 * a2 / 16.0 - 3.0 * std::pow(a3, 4) / 256.0;

    const double scale = std::max({1.0, std::abs(P), std::sqrt(std::abs(R))});

    WaveSpeeds out;
    int nroot = 0;
    auto push_real = [&](double y) {
        double x = y + shift;
        // one polished Newton step on the original quartic
        for (int it = 0; it < 2; ++it) {
            const double d = detail::quartic_deriv(x, a3, a2, a1);
            if (std::abs(d) < 1e-300) break;
            x -= detail::quartic_value(x, a3, a2, a1, a0) / d;
        }
        out.lambda[nroot++] = x;
    };
    auto push_complex_pair = [&](double re, double im) {
        const double mod = std::hypot(re + shift, im);
        out.lambda[nroot++] = mod;
        out.lambda[nroot++] = mod;
        out.all_real = false;
    };
    auto solve_depressed_quadratic = [&](double lin, double cst) {
        // y^2 + lin*y + cst = 0
        const double disc = lin * lin - 4.0 * cst;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            // stable split of the two roots
            const double y1 = (lin >= 0.0) ? (-lin - sq) / 2.0 : (-lin + sq) / 2.0;
            const double y2 = (y1 != 0.0) ? cst / y1 : (-lin - y1);
            push_real(y1);
            push_real(y2);
        } else {
            push_complex_pair(-0.5 * lin, 0.5 * std::sqrt(-disc));
        }
    };

    if (std::abs(Q) <= 1e-14 * scale * std::sqrt(scale)) {
        // biquadratic: z^2 + P z + R = 0 with z = y^2
        const double disc = P * P - 4.0 * R;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            for (double z : {0.5 * (-P + sq), 0.5 * (-P - sq)}) {
                if (z >= 0.0) {
                    push_real(std::sqrt(z));
                    push_real(-std::sqrt(z));
                } else {
                    push_complex_pair(0.0, std::sqrt(-z));
                }
            }
        } else {
            // two conjugate pairs with |y| = |z|^(1/2)
            const double mod = std::pow(R, 0.25);
            push_complex_pair(0.0, mod);  // modulus via hypot(shift, mod) is
            push_complex_pair(0.0, mod);  // a crude but safe bound here
        }
    } else {
        // resolvent cubic m^3 + P m^2 + (P^2/4 - R) m - Q^2/8 = 0; its largest
        // root is positive because the constant term is negative
        const double m = detail::largest_real_cubic_root(P, 0.25 * P * P - R, -Q * Q / 8.0);
        const double s = std::sqrt(std::max(2.0 * m, 0.0));
        if (s == 0.0) {
            // should not happen with |Q| > 0; fall back to the biquadratic bound
            push_complex_pair(0.0, std::sqrt(std::abs(R)));
            push_complex_pair(0.0, std::sqrt(std::abs(R)));
        } else {
            const double c1q = 0.5 * P + m - 0.5 * Q / s;
            const double c2q = 0.5 * P + m + 0.5 * Q / s;
            solve_depressed_quadratic(s, c1q);    // y^2 + s y + c1q
            solve_depressed_quadratic(-s, c2q);   // y^2 - s y + c2q
        }
    }
    std::sort(out.lambda.begin(), out.lambda.end());
    return out;
}

inline WaveSpeeds eigenvalues_exact(const double u[4], const PhysParams& p)
{
    return eigenvalues_exact(u[0], u[1] / u[0], u[2], u[3] / u[2], p);
}

/// First-order external/internal speed estimates and the hyperbolicity
/// condition (u1-u2)^2 < (1-r) g (h1+h2).
struct ApproxSpeeds {
    double ext_minus = 0, ext_plus = 0;
    double int_minus = 0, int_plus = 0;
    bool hyperbolic = true;
};

inline ApproxSpeeds eigenvalues_approx(double h1, double u1, double h2, double u2,
                                       const PhysParams& p)
{
    detail::require_positive(h1, "h1");
    detail::require_positive(h2, "h2");
    const double H = h1 + h2;
    const double Um = (h1 * u1 + h2 * u2) / H;
    const double Uc = (h1 * u2 + h2 * u1) / H;
    const double gr = (1.0 - p.r) * p.g;
    const double du = u1 - u2;

    ApproxSpeeds out;
    const double cext = std::sqrt(p.g * H);
    out.ext_minus = Um - cext;
    out.ext_plus = Um + cext;
    out.hyperbolic = du * du < gr * H;
    const double rad = gr * (h1 * h2 / H) * (1.0 - du * du / (gr * H));
    const double cint = rad > 0.0 ? std::sqrt(rad) : 0.0;
    out.int_minus = Uc - cint;
    out.int_plus = Uc + cint;
    return out;
}

}  // namespace tlswe
