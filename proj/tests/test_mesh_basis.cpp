#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "tlswe/dg_field.hpp"
#include "tlswe/legendre.hpp"
#include "tlswe/mesh.hpp"
#include "tlswe/quadrature.hpp"

using namespace tlswe;

TEST_CASE("legendre_eval matches closed forms", "[mesh]")
{
    CHECK(legendre_eval(0, 0.3).value == 1.0);
    CHECK(legendre_eval(0, 0.3).deriv == 0.0);
    CHECK(legendre_eval(1, -1.0).value == -1.0);
    CHECK(legendre_eval(1, -1.0).deriv == 1.0);
    // P2 = (3x^2 - 1)/2, P2' = 3x
    const auto p2 = legendre_eval(2, 0.5);
    CHECK(p2.value == Catch::Approx(-0.125).margin(1e-15));
    CHECK(p2.deriv == Catch::Approx(1.5).margin(1e-15));
}

TEST_CASE("gauss rules", "[mesh]")
{
    SECTION("one point is the midpoint rule")
    {
        const auto r = gauss_rule(1);
        REQUIRE(r.size() == 1);
        CHECK(r.nodes[0] == Catch::Approx(0.0).margin(1e-15));
        CHECK(r.weights[0] == Catch::Approx(2.0).margin(1e-15));
    }
    SECTION("two points at +-1/sqrt(3)")
    {
        const auto r = gauss_rule(2);
        CHECK(r.nodes[0] == Catch::Approx(-1.0 / std::sqrt(3.0)).margin(1e-14));
        CHECK(r.nodes[1] == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-14));
        CHECK(r.weights[0] == Catch::Approx(1.0).margin(1e-14));
        CHECK(r.weights[1] == Catch::Approx(1.0).margin(1e-14));
    }
    SECTION("three points integrate x^4 to 2/5")
    {
        const auto r = gauss_rule(3);
        double s = 0.0;
        for (int q = 0; q < 3; ++q) s += r.weights[q] * std::pow(r.nodes[q], 4);
        CHECK(s == Catch::Approx(0.4).margin(1e-14));
    }
    SECTION("weights sum to 2 and monomial exactness up to 2n-1")
    {
        for (int n = 1; n <= 8; ++n) {
            const auto r = gauss_rule(n);
            double wsum = 0.0;
            for (double w : r.weights) wsum += w;
            CHECK(wsum == Catch::Approx(2.0).margin(1e-14));
            for (int d = 0; d <= 2 * n - 1; ++d) {
                double s = 0.0;
                for (int q = 0; q < n; ++q) s += r.weights[q] * std::pow(r.nodes[q], d);
                const double exact = (d % 2 == 0) ? 2.0 / (d + 1) : 0.0;
                CHECK(s == Catch::Approx(exact).margin(1e-13));
            }
        }
    }
}

TEST_CASE("basis orthogonality under quadrature", "[mesh]")
{
    const auto r = gauss_rule(6);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            double s = 0.0;
            for (int q = 0; q < r.size(); ++q) {
                double P[kMaxModes1D];
                legendre_basis(4, r.nodes[q], P);
                s += r.weights[q] * P[i] * P[j];
            }
            const double exact = (i == j) ? 2.0 / (2 * i + 1) : 0.0;
            CHECK(s == Catch::Approx(exact).margin(1e-13));
        }
}

TEST_CASE("projection basics", "[mesh]")
{
    const Mesh1D mesh(-0.5, 1.5, 7);

    SECTION("constants project to mode zero")
    {
        const auto f = project([](double, double* o) { o[0] = 3.25; }, mesh, 2, 1);
        for (int j = 0; j < mesh.nx; ++j) {
            CHECK(f.at(j, 0, 0) == Catch::Approx(3.25).margin(1e-14));
            CHECK(std::abs(f.at(j, 0, 1)) < 1e-14);
            CHECK(std::abs(f.at(j, 0, 2)) < 1e-14);
        }
    }
    SECTION("polynomial reproduction at quadrature points")
    {
        const auto f = project([](double x, double* o) { o[0] = x; }, mesh, 1, 1);
        const auto r = gauss_rule(3);
        for (int j = 0; j < mesh.nx; ++j)
            for (int q = 0; q < r.size(); ++q) {
                const double x = mesh.physical(j, r.nodes[q]);
                CHECK(f.eval(j, 0, r.nodes[q]) == Catch::Approx(x).margin(1e-13));
            }
    }
    SECTION("idempotence")
    {
        auto fn = [](double x, double* o) { o[0] = std::sin(2.0 * x) + 0.3 * x * x; };
        const auto f1 = project(fn, mesh, 2, 1);
        const auto f2 = project([&](double x, double* o) { o[0] = f1.eval(f1.mesh.locate(x), 0,
                                    (x - f1.mesh.center(f1.mesh.locate(x))) / (0.5 * f1.mesh.dx)); },
                                mesh, 2, 1);
        for (size_t i = 0; i < f1.coef.size(); ++i)
            CHECK(f2.coef[i] == Catch::Approx(f1.coef[i]).margin(1e-13));
    }
    SECTION("L2 error halves cubically for k=2 under mesh doubling")
    {
        auto fn = [](double x, double* o) { o[0] = std::sin(M_PI * x) * std::sin(M_PI * x); };
        auto l2err = [&](int nx) {
            const Mesh1D m(0.0, 1.0, nx);
            const auto f = project(fn, m, 2, 1);
            const auto r = gauss_rule(6);
            double acc = 0.0;
            for (int j = 0; j < m.nx; ++j)
                for (int q = 0; q < r.size(); ++q) {
                    double o;
                    fn(m.physical(j, r.nodes[q]), &o);
                    const double d = f.eval(j, 0, r.nodes[q]) - o;
                    acc += 0.5 * m.dx * r.weights[q] * d * d;
                }
            return std::sqrt(acc);
        };
        const double e100 = l2err(100), e200 = l2err(200);
        const double factor = e100 / e200;
        CHECK(factor > 6.0);  // ~2^3
        CHECK(factor < 10.0);
    }
}

TEST_CASE("traces", "[mesh]")
{
    const Mesh1D mesh(0.0, 1.0, 4);

    SECTION("constant field")
    {
        const auto f = project([](double, double* o) { o[0] = 2.5; }, mesh, 2, 1);
        double l, r;
        f.traces(1, &l, &r);
        CHECK(l == Catch::Approx(2.5).margin(1e-14));
        CHECK(r == Catch::Approx(2.5).margin(1e-14));
    }
    SECTION("pure P1 mode gives (-a, +a)")
    {
        DGField1D f(mesh, 1, 2);
        f.at(2, 0, 1) = 0.7;
        double l, r;
        f.traces(2, &l, &r);
        CHECK(l == Catch::Approx(-0.7).margin(1e-15));
        CHECK(r == Catch::Approx(0.7).margin(1e-15));
    }
    SECTION("projected identity function hits the cell endpoints")
    {
        const auto f = project([](double x, double* o) { o[0] = x; }, mesh, 1, 1);
        for (int j = 0; j < mesh.nx; ++j) {
            double l, r;
            f.traces(j, &l, &r);
            CHECK(l == Catch::Approx(mesh.left(j)).margin(1e-13));
            CHECK(r == Catch::Approx(mesh.left(j) + mesh.dx).margin(1e-13));
        }
    }
}

TEST_CASE("2D projection has tensor structure", "[mesh]")
{
    const Mesh2D mesh(0.0, 1.0, -1.0, 1.0, 5, 4);
    auto fx = [](double x) { return std::exp(-x); };
    auto gy = [](double y) { return std::cos(2.0 * y); };
    const auto f2 = project2d([&](double x, double y, double* o) { o[0] = fx(x) * gy(y); },
                              mesh, 2, 1);
    const auto px = project([&](double x, double* o) { o[0] = fx(x); }, Mesh1D(0.0, 1.0, 5), 2, 1);
    const auto py = project([&](double y, double* o) { o[0] = gy(y); }, Mesh1D(-1.0, 1.0, 4), 2, 1);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 5; ++i)
            for (int my = 0; my <= 2; ++my)
                for (int mx = 0; mx <= 2; ++mx)
                    CHECK(f2.at(mesh.cell(i, j), 0, my, mx) ==
                          Catch::Approx(px.at(i, 0, mx) * py.at(j, 0, my)).margin(1e-12));
}
