#include "arks/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arks {

void SolverConfig::validate() const {
    if (!(dt_max > 0.0)) throw std::invalid_argument("solver.dt_max must be > 0");
    if (!(cfl_safety > 0.0) || cfl_safety > 1.0)
        throw std::invalid_argument("solver.cfl_safety must be in (0, 1]");
    if (!(lin_tol > 0.0) || lin_tol > 1e-8)
        throw std::invalid_argument("solver.lin_tol must be in (0, 1e-8]");
    if (lin_maxiter < 1)
        throw std::invalid_argument("solver.lin_maxiter must be >= 1");
    if (!(t_end >= 0.0)) throw std::invalid_argument("solver.t_end must be >= 0");
    if (!(record_every > 0.0))
        throw std::invalid_argument("solver.record_every must be > 0");
}

double cfl_dt(const State& s, const Params& p, const SolverConfig& cfg) {
    const Grid& g = s.u.grid;
    const VectorField gv = gradient(s.v);
    const VectorField gw = gradient(s.w);
    double vx = 0.0, vy = 0.0;
    for (size_t k = 0; k < gv.xcomp.size(); ++k)
        vx = std::max(vx, p.chi * std::abs(gv.xcomp[k]) +
                              p.xi * std::abs(gw.xcomp[k]));
    for (size_t k = 0; k < gv.ycomp.size(); ++k)
        vy = std::max(vy, p.chi * std::abs(gv.ycomp[k]) +
                              p.xi * std::abs(gw.ycomp[k]));
    double dt = cfg.dt_max;
    if (vx > 0.0) dt = std::min(dt, cfg.cfl_safety * g.hx / vx);
    if (vy > 0.0) dt = std::min(dt, cfg.cfl_safety * g.hy / vy);
    return dt;
}

namespace {

// y = (1 + dt*decay) x - dt*diff*lap(x), assembled in place.
void apply_helmholtz(const ScalarField& x, double diff, double decay, double dt,
                     ScalarField& y) {
    const Grid& g = x.grid;
    const double cx = dt * diff / (g.hx * g.hx);
    const double cy = dt * diff / (g.hy * g.hy);
    const double c0 = 1.0 + dt * decay;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double xc = x(i, j);
            double acc = c0 * xc;
            if (i > 0) acc -= cx * (x(i - 1, j) - xc);
            if (i + 1 < g.nx) acc -= cx * (x(i + 1, j) - xc);
            if (j > 0) acc -= cy * (x(i, j - 1) - xc);
            if (j + 1 < g.ny) acc -= cy * (x(i, j + 1) - xc);
            y(i, j) = acc;
        }
    }
}

double dot_plain(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

}  // namespace

ScalarField implicit_solve(const ScalarField& b, double diff, double decay,
                           double dt, const SolverConfig& cfg) {
    const Grid& g = b.grid;
    const int n = g.cells();
    const double cx = dt * diff / (g.hx * g.hx);
    const double cy = dt * diff / (g.hy * g.hy);
    const double c0 = 1.0 + dt * decay;

    // Per-cell diagonal: fewer face couplings on the boundary.
    ScalarField diag(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int fx = (i > 0) + (i + 1 < g.nx);
            const int fy = (j > 0) + (j + 1 < g.ny);
            diag(i, j) = c0 + fx * cx + fy * cy;
        }

    // The operator maps constants to (1+dt*decay) times themselves, so the
    // constant mode is solved in closed form and CG only handles the
    // mean-zero remainder. Spatially constant right-hand sides come out
    // exact, and with decay = 0 the cell sum of x matches the cell sum of b.
    const double bnorm = std::sqrt(dot_plain(b.values, b.values));
    double bmean = 0.0;
    for (double v : b.values) bmean += v;
    bmean /= n;

    ScalarField x(g, bmean / c0);
    ScalarField r = b;
    for (double& v : r.values) v -= bmean;
    if (bnorm == 0.0) return x;

    ScalarField z(g), pdir(g), ap(g);
    for (int k = 0; k < n; ++k) z.values[k] = r.values[k] / diag.values[k];
    pdir = z;
    double rz = dot_plain(r.values, z.values);
    const double tol = cfg.lin_tol * bnorm;

    int iter = 0;
    while (std::sqrt(dot_plain(r.values, r.values)) > tol) {
        if (++iter > cfg.lin_maxiter)
            throw SolverError("implicit_solve: no convergence within " +
                              std::to_string(cfg.lin_maxiter) + " iterations");
        apply_helmholtz(pdir, diff, decay, dt, ap);
        const double alpha = rz / dot_plain(pdir.values, ap.values);
        for (int k = 0; k < n; ++k) x.values[k] += alpha * pdir.values[k];
        for (int k = 0; k < n; ++k) r.values[k] -= alpha * ap.values[k];
        for (int k = 0; k < n; ++k) z.values[k] = r.values[k] / diag.values[k];
        const double rz_new = dot_plain(r.values, z.values);
        const double betacg = rz_new / rz;
        rz = rz_new;
        for (int k = 0; k < n; ++k)
            pdir.values[k] = z.values[k] + betacg * pdir.values[k];
    }

    // The Jacobi preconditioner is not constant on the boundary, so CG can
    // leak a constant component; shift it back out of the final residual.
    apply_helmholtz(x, diff, decay, dt, ap);
    double rmean = 0.0;
    for (int k = 0; k < n; ++k) rmean += b.values[k] - ap.values[k];
    rmean /= n;
    const double shift = rmean / c0;
    for (int k = 0; k < n; ++k) x.values[k] += shift;

    return x;
}

State step(const State& s, const Params& p, double dt, const SolverConfig& cfg) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");

    // Chemical fields first; transport of u then sees the new time level.
    ScalarField bv = s.v;
    axpy(dt * p.alpha, s.u, bv);
    ScalarField v_new = implicit_solve(bv, p.D1, p.beta, dt, cfg);

    ScalarField bw = s.w;
    axpy(dt * p.gamma, s.u, bw);
    ScalarField w_new = implicit_solve(bw, p.D2, p.delta, dt, cfg);

    // Explicit donor-cell transport: the attraction flux advects u by
    // chi*grad(v), the repulsion flux by -xi*grad(w); passing -xi keeps the
    // upwind side aligned with each flux's transport direction.
    ScalarField u_explicit = s.u;
    axpy(-dt, chemotactic_div(s.u, v_new, p.chi), u_explicit);
    axpy(-dt, chemotactic_div(s.u, w_new, -p.xi), u_explicit);

    ScalarField u_new = implicit_solve(u_explicit, 1.0, 0.0, dt, cfg);

    const double umax = u_new.max();
    if (u_new.min() < -1e-13 * std::max(umax, 0.0))
        throw SolverError("step: u dropped below -1e-13*max(u) at t = " +
                          std::to_string(s.t) + " (CFL violation?)");

    return {std::move(u_new), std::move(v_new), std::move(w_new), s.t + dt};
}

RunResult run(const State& init, const Params& p, const SolverConfig& cfg,
              const DiagnosticsSink& sink) {
    p.validate();
    cfg.validate();
    if (init.u.min() < 0.0 || init.v.min() < 0.0 || init.w.min() < 0.0)
        throw std::invalid_argument("run: initial fields must be nonnegative");
    const double mass0 = integrate(init.u);
    if (!(mass0 > 0.0))
        throw std::invalid_argument("run: initial u must carry mass");

    const double ubar0 = mass0 / init.u.grid.area();
    const SteadyState ss = steady_state(p, ubar0, 1.0);
    const double blowup_cap = 1e6 * init.u.max();

    double phi_v = dist_linf(init.v, ss.v);
    double phi_w = dist_linf(init.w, ss.w);

    State s = init;
    DiagnosticsRow prev =
        diagnostics_row(s, p, ubar0, phi_v, phi_w, nullptr);
    if (sink) sink(prev, s);

    RunResult res;
    long next_record = 1;
    const double teps = 1e-12 * std::max(1.0, cfg.t_end);
    while (s.t < cfg.t_end - teps) {
        const double t_event =
            std::min(cfg.t_end, next_record * cfg.record_every);
        double dt = std::min(cfl_dt(s, p, cfg), t_event - s.t);

        const double drive = dist_linf(s.u, ubar0);
        s = step(s, p, dt, cfg);
        phi_v = envelope_update(phi_v, dt, drive, p.beta, p.alpha);
        phi_w = envelope_update(phi_w, dt, drive, p.delta, p.gamma);
        ++res.steps;

        const bool blew_up = s.u.max() > blowup_cap;
        if (s.t >= t_event - teps || blew_up) {
            s.t = blew_up ? s.t : t_event;
            prev = diagnostics_row(s, p, ubar0, phi_v, phi_w, &prev);
            if (sink) sink(prev, s);
            while (next_record * cfg.record_every <= s.t + teps) ++next_record;
            if (blew_up) {
                res.status = RunStatus::blowup;
                res.state = std::move(s);
                return res;
            }
        }
    }
    res.state = std::move(s);
    return res;
}

}  // namespace arks
