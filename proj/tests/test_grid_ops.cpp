#include <doctest.h>

#include <cmath>

#include "arks/grid_ops.hpp"
#include "arks/init.hpp"

using namespace arks;

namespace {

ScalarField random_field(const Grid& g, std::uint64_t seed, double lo = -1.0,
                         double hi = 1.0) {
    SplitMix64 rng(seed);
    ScalarField f(g);
    for (double& v : f.values) v = lo + (hi - lo) * rng.next_double();
    return f;
}

}  // namespace

TEST_CASE("laplacian of a constant vanishes") {
    Grid g(8, 8, 1.0, 1.0);
    ScalarField f(g, 7.0);
    ScalarField lap = laplacian(f);
    for (double v : lap.values) CHECK(v == 0.0);
}

TEST_CASE("laplacian reproduces the discrete cosine eigenvalue") {
    Grid g(32, 4, 2.0, 1.0);
    ScalarField f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            f(i, j) = std::cos(M_PI * g.x(i) / g.Lx);
    const double q = 2.0 / (g.hx * g.hx) * (1.0 - std::cos(M_PI * g.hx / g.Lx));
    ScalarField lap = laplacian(f);
    for (int k = 0; k < g.cells(); ++k)
        CHECK(lap.values[k] == doctest::Approx(-q * f.values[k]).epsilon(1e-10));
}

TEST_CASE("laplacian cell sum telescopes to zero") {
    Grid g(17, 13, 1.4, 0.8);
    ScalarField f = random_field(g, 11);
    ScalarField lap = laplacian(f);
    double sum = 0.0, abs_sum = 0.0;
    for (double v : lap.values) { sum += v; abs_sum += std::abs(v); }
    CHECK(std::abs(sum) <= 1e-12 * abs_sum);
}

TEST_CASE("laplacian and gradient are linear") {
    Grid g(12, 9, 1.0, 2.0);
    ScalarField f = random_field(g, 3), h = random_field(g, 4);
    const double a = 1.7, b = -0.3;
    ScalarField combo(g);
    for (int k = 0; k < g.cells(); ++k)
        combo.values[k] = a * f.values[k] + b * h.values[k];

    ScalarField lc = laplacian(combo), lf = laplacian(f), lh = laplacian(h);
    for (int k = 0; k < g.cells(); ++k)
        CHECK(lc.values[k] ==
              doctest::Approx(a * lf.values[k] + b * lh.values[k])
                  .epsilon(1e-12));

    VectorField gc = gradient(combo), gf = gradient(f), gh = gradient(h);
    for (size_t k = 0; k < gc.xcomp.size(); ++k)
        CHECK(gc.xcomp[k] ==
              doctest::Approx(a * gf.xcomp[k] + b * gh.xcomp[k]).epsilon(1e-12));
    for (size_t k = 0; k < gc.ycomp.size(); ++k)
        CHECK(gc.ycomp[k] ==
              doctest::Approx(a * gf.ycomp[k] + b * gh.ycomp[k]).epsilon(1e-12));
}

TEST_CASE("laplacian is second-order accurate on Neumann-compatible fields") {
    auto max_error = [](int n) {
        Grid g(n, n, 1.0, 1.0);
        ScalarField f(g);
        const double ax = 2.0 * M_PI / g.Lx, ay = M_PI / g.Ly;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                f(i, j) = std::cos(ax * g.x(i)) * std::cos(ay * g.y(j));
        ScalarField lap = laplacian(f);
        double err = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                err = std::max(err, std::abs(lap(i, j) +
                                             (ax * ax + ay * ay) * f(i, j)));
        return err;
    };
    const double e16 = max_error(16), e32 = max_error(32), e64 = max_error(64);
    CHECK(e16 / e32 >= 3.5);
    CHECK(e32 / e64 >= 3.5);
}

TEST_CASE("gradient of a constant is zero with exact boundary faces") {
    Grid g(9, 7, 1.0, 1.0);
    ScalarField f(g, 4.2);
    VectorField grad = gradient(f);
    for (double v : grad.xcomp) CHECK(v == 0.0);
    for (double v : grad.ycomp) CHECK(v == 0.0);

    ScalarField r = random_field(g, 21);
    VectorField gr = gradient(r);
    for (int j = 0; j < g.ny; ++j) {
        CHECK(gr.xf(0, j) == 0.0);
        CHECK(gr.xf(g.nx, j) == 0.0);
    }
    for (int i = 0; i < g.nx; ++i) {
        CHECK(gr.yf(i, 0) == 0.0);
        CHECK(gr.yf(i, g.ny) == 0.0);
    }
}

TEST_CASE("gradient converges at second order on interior faces") {
    auto max_error = [](int n) {
        Grid g(n, 4, 1.0, 1.0);
        ScalarField f(g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                f(i, j) = std::cos(M_PI * g.x(i) / g.Lx);
        VectorField grad = gradient(f);
        double err = 0.0;
        for (int k = 1; k < g.nx; ++k) {
            const double x = k * g.hx;  // face position
            const double exact = -(M_PI / g.Lx) * std::sin(M_PI * x / g.Lx);
            err = std::max(err, std::abs(grad.xf(k, 0) - exact));
        }
        return err;
    };
    CHECK(max_error(16) / max_error(32) >= 3.5);
}

TEST_CASE("chemotactic divergence reduces to the diffusion form for constant u") {
    Grid g(10, 11, 1.0, 1.3);
    ScalarField u(g, 2.5);
    ScalarField phi = random_field(g, 5);
    const double coeff = 0.7;
    ScalarField div = chemotactic_div(u, phi, coeff);
    ScalarField lap = laplacian(phi);
    for (int k = 0; k < g.cells(); ++k)
        CHECK(div.values[k] ==
              doctest::Approx(2.5 * coeff * lap.values[k]).epsilon(1e-12));
}

TEST_CASE("chemotactic divergence of a flat potential is zero") {
    Grid g(8, 8, 1.0, 1.0);
    ScalarField u = random_field(g, 6, 0.0, 2.0);
    ScalarField phi(g, 3.0);
    ScalarField div = chemotactic_div(u, phi, 1.4);
    for (double v : div.values) CHECK(v == 0.0);
}

TEST_CASE("chemotactic divergence conserves mass") {
    Grid g(14, 9, 2.0, 1.0);
    ScalarField u = random_field(g, 7, 0.0, 3.0);
    ScalarField phi = random_field(g, 8);
    for (double coeff : {1.0, -2.3}) {
        ScalarField div = chemotactic_div(u, phi, coeff);
        double sum = 0.0, abs_sum = 0.0;
        for (double v : div.values) { sum += v; abs_sum += std::abs(v); }
        CHECK(std::abs(sum) <= 1e-12 * std::max(abs_sum, 1e-300));
    }
}

TEST_CASE("integrate uses midpoint quadrature") {
    CHECK(integrate(ScalarField(Grid(8, 8, 1.0, 1.0), 1.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(integrate(ScalarField(Grid(10, 5, 2.0, 1.0), 3.0)) ==
          doctest::Approx(6.0).epsilon(1e-14));

    Grid g(32, 4, 1.0, 1.0);
    ScalarField f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            f(i, j) = std::cos(2.0 * M_PI * g.x(i) / g.Lx);
    CHECK(std::abs(integrate(f)) <= 1e-12);
}

TEST_CASE("summation by parts: dot(grad f, grad g) = -dot(f, lap g)") {
    Grid g(13, 10, 1.0, 1.5);
    ScalarField f = random_field(g, 9), h = random_field(g, 10);
    const double lhs = dot(gradient(f), gradient(h));
    const double rhs = -dot(f, laplacian(h));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}
