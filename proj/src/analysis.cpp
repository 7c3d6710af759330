#include "arks/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace arks {

DecayFit fit_decay(std::span<const double> times,
                   std::span<const double> values, double window_fraction) {
    if (times.size() != values.size())
        throw std::invalid_argument("fit_decay: times/values size mismatch");
    if (!(window_fraction > 0.0) || window_fraction > 1.0)
        throw std::invalid_argument("fit_decay: window_fraction must be in (0,1]");
    const size_t n = times.size();
    if (n == 0) throw std::invalid_argument("fit_decay: empty series");

    const double floor = 1e-14 * values.front();
    const size_t start = n - static_cast<size_t>(std::ceil(window_fraction * n));

    std::vector<double> ts, ys;
    for (size_t k = start; k < n; ++k) {
        if (values[k] > floor && values[k] > 0.0) {
            ts.push_back(times[k]);
            ys.push_back(std::log(values[k]));
        }
    }
    if (ts.size() < 8)
        throw std::invalid_argument(
            "fit_decay: fewer than 8 usable samples in window");

    const size_t m = ts.size();
    double st = 0.0, sy = 0.0;
    for (size_t k = 0; k < m; ++k) { st += ts[k]; sy += ys[k]; }
    const double tbar = st / m, ybar = sy / m;
    double stt = 0.0, sty = 0.0;
    for (size_t k = 0; k < m; ++k) {
        stt += (ts[k] - tbar) * (ts[k] - tbar);
        sty += (ts[k] - tbar) * (ys[k] - ybar);
    }
    if (!(stt > 0.0)) throw std::invalid_argument("fit_decay: degenerate times");
    const double slope = sty / stt;
    const double icept = ybar - slope * tbar;

    double ss_res = 0.0, ss_tot = 0.0;
    for (size_t k = 0; k < m; ++k) {
        const double e = ys[k] - (icept + slope * ts[k]);
        ss_res += e * e;
        ss_tot += (ys[k] - ybar) * (ys[k] - ybar);
    }

    DecayFit fit;
    fit.rate = -slope;
    fit.amplitude = std::exp(icept);
    fit.r_squared = ss_tot > 1e-300 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    fit.window_start = ts.front();
    fit.window_end = ts.back();
    fit.samples_used = static_cast<int>(m);
    return fit;
}

ModeRates linearized_rates(const Params& p, double ubar, double k2) {
    Eigen::Matrix3d M;
    M << -k2, p.chi * ubar * k2, -p.xi * ubar * k2,
         p.alpha, -p.D1 * k2 - p.beta, 0.0,
         p.gamma, 0.0, -p.D2 * k2 - p.delta;
    Eigen::EigenSolver<Eigen::Matrix3d> es(M, /*computeEigenvectors=*/false);
    std::array<double, 3> re{es.eigenvalues()[0].real(),
                             es.eigenvalues()[1].real(),
                             es.eigenvalues()[2].real()};
    std::sort(re.begin(), re.end(), std::greater<>());
    return {k2, re};
}

double discrete_mode_k2(const Grid& g, int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("discrete_mode_k2: mode indices must be >= 0");
    const double qx =
        2.0 / (g.hx * g.hx) * (1.0 - std::cos(m * M_PI * g.hx / g.Lx));
    const double qy =
        2.0 / (g.hy * g.hy) * (1.0 - std::cos(n * M_PI * g.hy / g.Ly));
    return qx + qy;
}

std::vector<RefinementRow> refinement_study(const Params& p, const State& init,
                                            const SolverConfig& base,
                                            int levels) {
    if (levels < 2)
        throw std::invalid_argument("refinement_study: levels must be >= 2");
    std::vector<RefinementRow> table;
    for (int lvl = 0; lvl < levels; ++lvl) {
        SolverConfig cfg = base;
        const double factor = std::pow(2.0, lvl);
        cfg.dt_max = base.dt_max / factor;
        cfg.record_every = base.record_every / factor;

        double max_res = 0.0;
        bool first = true;
        run(init, p, cfg, [&](const DiagnosticsRow& row, const State&) {
            if (!first) max_res = std::max(max_res, row.residual);
            first = false;
        });

        RefinementRow row;
        row.h = std::max(init.u.grid.hx, init.u.grid.hy);
        row.dt = cfg.dt_max;
        row.max_residual = max_res;
        row.observed_order =
            table.empty()
                ? std::numeric_limits<double>::quiet_NaN()
                : std::log2(table.back().max_residual / max_res);
        table.push_back(row);
    }
    return table;
}

}  // namespace arks
