#include <doctest.h>

#include <cmath>
#include <vector>

#include "arks/analysis.hpp"
#include "arks/init.hpp"

using namespace arks;

namespace {

const Params kRef{.chi = 1, .xi = 2, .alpha = 1, .beta = 1,
                  .gamma = 2, .delta = 1.2, .D1 = 1, .D2 = 1.5};

}  // namespace

TEST_CASE("decay fit recovers an exact exponential") {
    std::vector<double> t, v;
    for (double x = 0.0; x <= 5.0 + 1e-12; x += 0.5) {
        t.push_back(x);
        v.push_back(3.0 * std::exp(-2.0 * x));
    }
    DecayFit fit = fit_decay(t, v, 1.0);
    CHECK(fit.rate == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.amplitude == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.r_squared >= 1.0 - 1e-12);
    CHECK(fit.samples_used == 11);
}

TEST_CASE("decay fit of constant values reports rate zero") {
    std::vector<double> t, v;
    for (int k = 0; k < 12; ++k) {
        t.push_back(0.1 * k);
        v.push_back(4.2);
    }
    DecayFit fit = fit_decay(t, v, 1.0);
    CHECK(std::abs(fit.rate) <= 1e-12);
    CHECK(fit.r_squared == 1.0);
}

TEST_CASE("decay fit tolerates a small multiplicative ripple") {
    std::vector<double> t, v;
    for (double x = 0.0; x <= 5.0 + 1e-12; x += 0.5) {
        t.push_back(x);
        v.push_back(3.0 * std::exp(-2.0 * x) * (1.0 + 0.01 * std::sin(10.0 * x)));
    }
    DecayFit fit = fit_decay(t, v, 1.0);
    CHECK(fit.rate == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("decay fit excludes the noise plateau") {
    std::vector<double> t, v;
    for (int k = 0; k <= 60; ++k) {
        const double x = 0.25 * k;
        t.push_back(x);
        v.push_back(std::max(std::exp(-3.0 * x), 1e-16));
    }
    DecayFit fit = fit_decay(t, v, 1.0);
    // exp(-3t) crosses the 1e-14 floor near t = 10.7; later samples dropped
    CHECK(fit.rate == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(fit.samples_used < 45);
}

TEST_CASE("decay fit needs at least eight usable samples") {
    std::vector<double> t{0, 1, 2, 3, 4, 5, 6}, v(7, 1.0);
    CHECK_THROWS(fit_decay(t, v, 1.0));
}

TEST_CASE("linearized rates at k2 = 0 are {0, -beta, -delta}") {
    ModeRates r = linearized_rates(kRef, 1.0, 0.0);
    CHECK(r.eigen_real_parts[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.eigen_real_parts[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.eigen_real_parts[2] == doctest::Approx(-1.2).epsilon(1e-12));
}

TEST_CASE("linearized rates decouple without chemotaxis") {
    Params p{.chi = 0.0, .xi = 0.0, .alpha = 1, .beta = 0.7,
             .gamma = 1, .delta = 1.1, .D1 = 2.0, .D2 = 0.5};
    const double q = 1.7;
    ModeRates r = linearized_rates(p, 1.0, q);
    // {-q, -D1 q - beta, -D2 q - delta} = {-1.7, -4.1, -1.95}, descending
    CHECK(r.eigen_real_parts[0] == doctest::Approx(-q));
    CHECK(r.eigen_real_parts[1] == doctest::Approx(-p.D2 * q - p.delta));
    CHECK(r.eigen_real_parts[2] == doctest::Approx(-p.D1 * q - p.beta));
}

TEST_CASE("linearized rates match the pinned companion-matrix values") {
    // alpha=beta=gamma=delta=chi=D1=D2=1, xi=2, ubar=1, k2=1:
    // char poly (l+2)(l^2+3l+3), real parts {-1.5, -1.5, -2}.
    Params p{.chi = 1, .xi = 2, .alpha = 1, .beta = 1,
             .gamma = 1, .delta = 1, .D1 = 1, .D2 = 1};
    ModeRates r = linearized_rates(p, 1.0, 1.0);
    CHECK(r.eigen_real_parts[0] == doctest::Approx(-1.5).epsilon(1e-9));
    CHECK(r.eigen_real_parts[1] == doctest::Approx(-1.5).epsilon(1e-9));
    CHECK(r.eigen_real_parts[2] == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("discrete mode eigenvalue") {
    Grid g(64, 64, 1.0, 1.0);
    const double q = discrete_mode_k2(g, 1, 0);
    CHECK(q == doctest::Approx(2.0 * 64 * 64 *
                               (1.0 - std::cos(M_PI / 64))).epsilon(1e-14));
    CHECK(q < M_PI * M_PI);
    CHECK(q > 0.995 * M_PI * M_PI);
    CHECK(discrete_mode_k2(g, 0, 0) == 0.0);
}

TEST_CASE("refinement study on the steady state stays at rounding level") {
    Grid g(16, 16, 1.0, 1.0);
    const SteadyState ss = steady_state(kRef, 1.0, 1.0);
    State init{ScalarField(g, ss.u), ScalarField(g, ss.v), ScalarField(g, ss.w),
               0.0};
    SolverConfig base;
    base.t_end = 0.4;
    base.record_every = 0.1;
    base.dt_max = 0.025;
    auto table = refinement_study(kRef, init, base, 2);
    REQUIRE(table.size() == 2);
    for (const auto& row : table) CHECK(row.max_residual <= 1e-10);
}

TEST_CASE("refinement study shows first-order residual decay") {
    Grid g(32, 32, 1.0, 1.0);
    const SteadyState ss = steady_state(kRef, 1.0, 1.0);
    State init{ScalarField(g, ss.u), ScalarField(g, ss.v), ScalarField(g, ss.w),
               0.0};
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            init.u(i, j) = 1.0 + 0.02 * std::cos(M_PI * g.x(i) / g.Lx);

    SolverConfig base;
    base.t_end = 0.8;
    base.record_every = 0.1;
    base.dt_max = 0.025;
    auto table = refinement_study(kRef, init, base, 3);
    REQUIRE(table.size() == 3);
    CHECK(std::isnan(table[0].observed_order));
    for (size_t lvl = 1; lvl < table.size(); ++lvl) {
        CHECK(table[lvl].observed_order >= 0.8);
        // refinement never increases the residual (10% slack)
        CHECK(table[lvl].max_residual <= 1.1 * table[lvl - 1].max_residual);
    }
}
