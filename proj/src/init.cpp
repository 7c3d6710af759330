#include "arks/init.hpp"

#include <cmath>

namespace arks {

State make_init(const RunConfig& cfg) {
    const Grid g = cfg.grid();
    const InitSpec& spec = cfg.init;
    if (std::abs(spec.amplitude) >= 1.0)
        throw ConfigError("init.amplitude: |amplitude| must be < 1");

    ScalarField u(g, spec.u_mean);
    switch (spec.kind) {
        case InitSpec::Kind::steady:
            break;
        case InitSpec::Kind::cosine_bump: {
            const double ax = spec.mode_m * M_PI / g.Lx;
            const double ay = spec.mode_n * M_PI / g.Ly;
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    u(i, j) = spec.u_mean *
                              (1.0 + spec.amplitude * std::cos(ax * g.x(i)) *
                                         std::cos(ay * g.y(j)));
            break;
        }
        case InitSpec::Kind::gaussian_bump: {
            const double cx = 0.5 * g.Lx, cy = 0.5 * g.Ly;
            const double s2 = 2.0 * spec.width * spec.width;
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    const double dx = g.x(i) - cx, dy = g.y(j) - cy;
                    u(i, j) = spec.u_mean *
                              (1.0 + spec.amplitude *
                                         std::exp(-(dx * dx + dy * dy) / s2));
                }
            break;
        }
        case InitSpec::Kind::random: {
            if (spec.lo > spec.hi)
                throw ConfigError("init.lo: must be <= init.hi");
            SplitMix64 rng(spec.seed);
            for (double& v : u.values)
                v = spec.lo + (spec.hi - spec.lo) * rng.next_double();
            break;
        }
    }

    const double ubar = integrate(u) / g.area();
    const SteadyState ss = steady_state(cfg.params, ubar, 1.0);
    const double v0 = ss.v + spec.v_offset;
    const double w0 = ss.w + spec.w_offset;
    if (v0 < 0.0 || w0 < 0.0)
        throw ConfigError(
            "init.v_offset/init.w_offset: chemical fields must stay >= 0");

    return {std::move(u), ScalarField(g, v0), ScalarField(g, w0), 0.0};
}

}  // namespace arks
