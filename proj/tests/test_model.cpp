#include <doctest.h>

#include <cmath>

#include "arks/init.hpp"
#include "arks/model.hpp"

using namespace arks;

namespace {

Params random_params(SplitMix64& rng) {
    auto draw = [&] { return std::pow(10.0, -1.0 + 2.0 * rng.next_double()); };
    return {draw(), draw(), draw(), draw(), draw(), draw(), draw(), draw()};
}

}  // namespace

TEST_CASE("derived constants") {
    Params p{.chi = 1, .xi = 2, .alpha = 1, .gamma = 2};
    auto d = derived(p);
    CHECK(d.theta1 == 3.0);
    CHECK(d.theta2 == 5.0);

    Params q{.chi = 1, .xi = 1, .alpha = 1, .gamma = 1};
    d = derived(q);
    CHECK(d.theta1 == 0.0);
    CHECK(d.theta2 == 2.0);

    SplitMix64 rng(42);
    for (int k = 0; k < 200; ++k) {
        Params r = random_params(rng);
        auto dc = derived(r);
        const double lhs = dc.theta2 * dc.theta2 - dc.theta1 * dc.theta1;
        const double rhs = 4.0 * r.xi * r.gamma * r.chi * r.alpha;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("steady state formulas") {
    Params p{.chi = 1, .xi = 1, .alpha = 1, .beta = 1, .gamma = 1, .delta = 1};
    auto s = steady_state(p, 1.0, 1.0);
    CHECK(s.u == 1.0);
    CHECK(s.v == 1.0);
    CHECK(s.w == 1.0);

    Params q{.chi = 1, .xi = 1, .alpha = 2, .beta = 1, .gamma = 3, .delta = 2};
    s = steady_state(q, 1.0, 1.0);
    CHECK(s.u == 1.0);
    CHECK(s.v == 2.0);
    CHECK(s.w == 1.5);

    s = steady_state(p, 0.5, 2.0);
    CHECK(s.u == 0.25);
}

TEST_CASE("classify on the reference parameter set") {
    Params p{.chi = 1, .xi = 2, .alpha = 1, .beta = 1,
             .gamma = 2, .delta = 1.2, .D1 = 1, .D2 = 1.5};
    auto r = classify(p);
    CHECK(r.cond_main);
    CHECK(r.cond_strict);
    CHECK(r.lc5_diffusion);
    CHECK(r.lc5_decay);
    CHECK(r.theta1 == 3.0);
    CHECK(r.mu2.has_value());
    CHECK(*r.mu2 == doctest::Approx(0.5));
    CHECK(*r.mu3 == doctest::Approx(3.0 / 5.6).epsilon(1e-14));
}

TEST_CASE("classify rejects the degenerate theta1 = 0 with unequal diffusion") {
    Params p{.chi = 1, .xi = 1, .alpha = 1, .beta = 1,
             .gamma = 1, .delta = 1, .D1 = 1, .D2 = 2};
    auto r = classify(p);
    CHECK(r.theta1 == 0.0);
    CHECK_FALSE(r.lc5_diffusion);
    CHECK_FALSE(r.cond_main);
}

TEST_CASE("classify rejects nonpositive parameters") {
    Params p;
    p.chi = -1.0;
    CHECK_THROWS_AS(classify(p), std::invalid_argument);
    p.chi = 0.0;
    CHECK_THROWS_AS(classify(p), std::invalid_argument);
}

TEST_CASE("matrix eigenvalue signs track the symbolic conditions") {
    SplitMix64 rng(7);
    for (int k = 0; k < 1000; ++k) {
        Params p = random_params(rng);
        auto r = classify(p);
        CHECK((matrix_A2(p).min_eig() >= 0.0) == r.lc5_diffusion);
        CHECK((matrix_A3(p).min_eig() >= 0.0) == r.lc5_decay);
        // A1 is always positive semidefinite: det(A1) = theta1^2/(16 xi a g c).
        CHECK(r.min_eig_A1 >= -1e-15);
        CHECK((r.min_eig_A1 > 0.0) == (r.theta1 != 0.0));
        if (r.theta1 > 0.0)
            CHECK(r.cond_main == (r.lc5_diffusion && r.lc5_decay));
        else
            CHECK_FALSE(r.cond_main);
    }
}

TEST_CASE("smallness criterion availability") {
    Params p{.chi = 1, .xi = 2, .alpha = 1, .beta = 1,
             .gamma = 2, .delta = 1.2, .D1 = 1, .D2 = 1};
    CHECK_FALSE(classify(p).lin2018.has_value());  // no ubar given

    // At ubar = 1: mass bound 1 < 4.8/0.04 and growth bound
    // 4.8*2/((4.8-0.04)*1) = 2.017 < xi*gamma = 4.
    auto r = classify(p, 1.0);
    REQUIRE(r.lin2018.has_value());
    CHECK(*r.lin2018);

    r = classify(p, 1e6);  // violates the mass bound
    REQUIRE(r.lin2018.has_value());
    CHECK_FALSE(*r.lin2018);

    Params q = p;
    q.delta = 1.0;  // beta == delta: not applicable
    CHECK_FALSE(classify(q, 1.0).lin2018.has_value());

    REQUIRE(r.steady.has_value());
    CHECK(r.steady->u == doctest::Approx(1e6));
}

TEST_CASE("mu bounds") {
    Grid unit(16, 16, 1.0, 1.0);

    Params p{.chi = 1, .xi = 2, .alpha = 1, .beta = 1,
             .gamma = 2, .delta = 1, .D1 = 1, .D2 = 1};
    auto m = mu_bounds(p, 1.0, 1.0, unit);
    CHECK(m.mu2 == 0.5);

    Params q{.chi = 1, .xi = 2, .alpha = 1, .beta = 1,
             .gamma = 2, .delta = 1.2, .D1 = 1, .D2 = 1.5};
    m = mu_bounds(q, 1.0, 1.0, unit);
    // theta1 = 3, xi g d - c a b = 3.8, xi g b - c a d = 2.8
    CHECK(m.mu3 == doctest::Approx(std::max(3.0 / 7.6, 3.0 / 5.6)).epsilon(1e-14));
    CHECK(m.mu3 == doctest::Approx(0.53571428571428572).epsilon(1e-14));
    CHECK(m.mu1 == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-14));
    CHECK(m.mu == doctest::Approx(1.01 * *classify(q).mu3).epsilon(1e-14));
    CHECK(m.lambda_pred == doctest::Approx(1.0 / (2.0 * m.mu)).epsilon(1e-14));

    // A4 admissibility at the chosen mu:
    // [4 t2^2 b d - (t2^2 - t1^2)(b+d)^2] mu^2 - 2(b+d) t1^2 mu + t1^2 >= 0
    auto d = derived(q);
    const double t1sq = d.theta1 * d.theta1, t2sq = d.theta2 * d.theta2;
    const double sb = q.beta + q.delta;
    const double quad =
        (4.0 * t2sq * q.beta * q.delta - (t2sq - t1sq) * sb * sb) * m.mu * m.mu -
        2.0 * sb * t1sq * m.mu + t1sq;
    CHECK(quad >= 0.0);
}

TEST_CASE("mu bounds scale consistently") {
    Grid unit(16, 16, 1.0, 1.0);
    Params p{.chi = 0.9, .xi = 2.1, .alpha = 1.1, .beta = 0.8,
             .gamma = 1.7, .delta = 1.0, .D1 = 1, .D2 = 1};
    auto m0 = mu_bounds(p, 1.0, 1.0, unit);

    const double s = 3.0;
    Params scaled_decay = p;
    scaled_decay.beta *= s;
    scaled_decay.delta *= s;
    CHECK(mu_bounds(scaled_decay, 1.0, 1.0, unit).mu2 ==
          doctest::Approx(m0.mu2 / s).epsilon(1e-14));

    // theta1 and both denominators scale by s^2, so mu3 is invariant.
    Params scaled_coupling = p;
    scaled_coupling.chi *= s;
    scaled_coupling.xi *= s;
    scaled_coupling.alpha *= s;
    scaled_coupling.gamma *= s;
    CHECK(mu_bounds(scaled_coupling, 1.0, 1.0, unit).mu3 ==
          doctest::Approx(m0.mu3).epsilon(1e-14));
}

TEST_CASE("mu bounds reject the non-strict regime") {
    Grid unit(16, 16, 1.0, 1.0);
    Params p{.chi = 2, .xi = 1, .alpha = 2, .beta = 1,
             .gamma = 1, .delta = 1.2, .D1 = 1, .D2 = 1};
    CHECK_THROWS_AS(mu_bounds(p, 1.0, 1.0, unit), std::invalid_argument);
}
