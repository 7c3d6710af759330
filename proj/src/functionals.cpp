#include "arks/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "arks/solver.hpp"

namespace arks {

namespace {

double mean(const ScalarField& f) { return integrate(f) / f.grid.area(); }

}  // namespace

double entropy(const ScalarField& u) {
    const double ubar = mean(u);
    if (!(ubar > 0.0)) throw std::invalid_argument("entropy: field has no mass");
    // Sum the pointwise-nonnegative integrand u ln(u/ubar) - (u - ubar); the
    // subtracted part integrates to zero against the discrete mean, and the
    // summands stay accurate (and the sum nonnegative) as u approaches ubar.
    // Near e = 0 the log1p form still cancels (true value e^2/2 falls below
    // ulp(e)), so small deviations take the series
    //   (1+e)ln(1+e) - e = e^2 (1/2 - e/6 + e^2/12 - ...).
    double acc = 0.0;
    for (double v : u.values) {
        if (v > 0.0) {
            const double e = v / ubar - 1.0;
            if (std::abs(e) < 0.01) {
                const double tail =
                    0.5 + e * (-1.0 / 6 + e * (1.0 / 12 + e * (-1.0 / 20 +
                    e * (1.0 / 30 + e * (-1.0 / 42 + e * (1.0 / 56 +
                    e * (-1.0 / 72)))))));
                acc += e * e * tail;
            } else {
                acc += (1.0 + e) * std::log1p(e) - e;
            }
        } else {
            acc += 1.0;  // limit of the integrand at u = 0, in units of ubar
        }
    }
    return acc * ubar * u.grid.cell_area();
}

double dist_l1(const ScalarField& f, double c) {
    double acc = 0.0;
    for (double v : f.values) acc += std::abs(v - c);
    return acc * f.grid.cell_area();
}

double dist_l2sq(const ScalarField& f, double c) {
    double acc = 0.0;
    for (double v : f.values) acc += (v - c) * (v - c);
    return acc * f.grid.cell_area();
}

double dist_linf(const ScalarField& f, double c) {
    double acc = 0.0;
    for (double v : f.values) acc = std::max(acc, std::abs(v - c));
    return acc;
}

EnergyTerms energy_E_terms(const State& s, const Params& p) {
    const auto d = derived(p);
    const VectorField gv = gradient(s.v);
    const VectorField gw = gradient(s.w);

    EnergyTerms e;
    e.entropy_term = d.theta1 / (2.0 * p.xi * p.chi) * entropy(s.u);
    e.grad_v = d.theta2 / (4.0 * p.xi * p.alpha) * dot(gv, gv);
    e.grad_w = d.theta2 / (4.0 * p.gamma * p.chi) * dot(gw, gw);
    e.cross = -dot(gw, gv);
    e.total = e.entropy_term + e.grad_v + e.grad_w + e.cross;
    e.scale = std::abs(e.entropy_term) + std::abs(e.grad_v) +
              std::abs(e.grad_w) + std::abs(e.cross);
    return e;
}

double energy_E(const State& s, const Params& p) {
    return energy_E_terms(s, p).total;
}

double energy_E_quadratic(const State& s, const Params& p) {
    const auto d = derived(p);
    const Sym2 A1 = matrix_A1(p);
    const VectorField gv = gradient(s.v);
    const VectorField gw = gradient(s.w);
    double acc = 0.0;
    for (size_t k = 0; k < gv.xcomp.size(); ++k)
        acc += A1.quad(gv.xcomp[k], gw.xcomp[k]);
    for (size_t k = 0; k < gv.ycomp.size(); ++k)
        acc += A1.quad(gv.ycomp[k], gw.ycomp[k]);
    return d.theta1 / (2.0 * p.xi * p.chi) * entropy(s.u) +
           acc * s.u.grid.cell_area();
}

namespace {

// int |grad u|^2 / u with the face value of u taken as the harmonic mean of
// the adjacent cells. A face with zero harmonic mean but a nonzero jump
// saturates the integral to +inf.
double fisher_information(const ScalarField& u, bool* saturated) {
    const Grid& g = u.grid;
    double acc = 0.0;
    auto face = [&](double ul, double ur, double h) {
        const double du = ur - ul;
        if (du == 0.0) return;
        const double sum = ul + ur;
        const double harm = sum > 0.0 ? 2.0 * ul * ur / sum : 0.0;
        if (harm > 0.0) {
            acc += (du / h) * (du / h) / harm;
        } else {
            if (saturated) *saturated = true;
            acc = std::numeric_limits<double>::infinity();
        }
    };
    for (int j = 0; j < g.ny; ++j)
        for (int k = 1; k < g.nx; ++k) {
            face(u(k - 1, j), u(k, j), g.hx);
            if (std::isinf(acc)) return acc;
        }
    for (int k = 1; k < g.ny; ++k)
        for (int i = 0; i < g.nx; ++i) {
            face(u(i, k - 1), u(i, k), g.hy);
            if (std::isinf(acc)) return acc;
        }
    return acc * g.cell_area();
}

}  // namespace

DissipationTerms dissipation_F_terms(const State& s, const Params& p) {
    const auto d = derived(p);
    const VectorField gv = gradient(s.v);
    const VectorField gw = gradient(s.w);
    const ScalarField lv = laplacian(s.v);
    const ScalarField lw = laplacian(s.w);

    DissipationTerms f;
    f.fisher = d.theta1 / (2.0 * p.xi * p.chi) *
               fisher_information(s.u, &f.saturated);
    f.lap_v = d.theta2 * p.D1 / (2.0 * p.xi * p.alpha) * dot(lv, lv);
    f.lap_w = d.theta2 * p.D2 / (2.0 * p.gamma * p.chi) * dot(lw, lw);
    f.grad_v = d.theta2 * p.beta / (2.0 * p.xi * p.alpha) * dot(gv, gv);
    f.grad_w = d.theta2 * p.delta / (2.0 * p.gamma * p.chi) * dot(gw, gw);
    f.cross_lap = -(p.D1 + p.D2) * dot(lw, lv);
    f.cross_grad = -(p.beta + p.delta) * dot(gw, gv);
    f.total = f.fisher + f.lap_v + f.lap_w + f.grad_v + f.grad_w + f.cross_lap +
              f.cross_grad;
    f.scale = std::abs(f.fisher) + std::abs(f.lap_v) + std::abs(f.lap_w) +
              std::abs(f.grad_v) + std::abs(f.grad_w) + std::abs(f.cross_lap) +
              std::abs(f.cross_grad);
    return f;
}

double dissipation_F(const State& s, const Params& p) {
    return dissipation_F_terms(s, p).total;
}

CkpBounds ckp_bounds(const ScalarField& u) {
    const double ubar = mean(u);
    if (!(ubar > 0.0))
        throw std::invalid_argument("ckp_bounds: field has no mass");
    const double l1 = dist_l1(u, ubar);
    return {l1 * l1 / (2.0 * ubar), dist_l2sq(u, ubar) / ubar};
}

double envelope_update(double phi, double dt, double drive, double decay,
                       double source_coeff) {
    return (phi + dt * source_coeff * drive) / (1.0 + dt * decay);
}

std::optional<double> legacy_energy_s(const State& s, const Params& p) {
    const auto d = derived(p);
    if (std::abs(p.D1 - p.D2) > 1e-12 * std::max(p.D1, p.D2)) return {};
    if (!(d.theta1 > 0.0)) return {};

    double acc = 0.0;
    for (double v : s.u.values) acc += v > 0.0 ? v * std::log(v) : 0.0;
    const double ulnu = acc * s.u.grid.cell_area();

    ScalarField sf(s.u.grid);
    for (size_t k = 0; k < sf.values.size(); ++k)
        sf.values[k] = p.xi * s.w.values[k] - p.chi * s.v.values[k];
    const VectorField gs = gradient(sf);
    return ulnu + dot(gs, gs) / (2.0 * d.theta1);
}

DiagnosticsRow diagnostics_row(const State& s, const Params& p, double ubar0,
                               double phi_star_v, double phi_star_w,
                               const DiagnosticsRow* prev) {
    const SteadyState ss = steady_state(p, ubar0, 1.0);

    DiagnosticsRow r;
    r.t = s.t;
    r.mass = integrate(s.u);
    r.min_u = s.u.min();
    r.max_u = s.u.max();
    r.entropy = entropy(s.u);
    r.E = energy_E(s, p);
    r.F = dissipation_F(s, p);
    if (prev && s.t > prev->t) {
        const double dEdt = (r.E - prev->E) / (s.t - prev->t);
        r.residual = std::abs(dEdt + 0.5 * (r.F + prev->F));
    }
    const CkpBounds ckp = ckp_bounds(s.u);
    r.ckp_lower = ckp.lower;
    r.ckp_upper = ckp.upper;
    r.l1_u = dist_l1(s.u, ss.u);
    r.linf_u = dist_linf(s.u, ss.u);
    r.linf_v = dist_linf(s.v, ss.v);
    r.linf_w = dist_linf(s.w, ss.w);
    r.phi_star_v = phi_star_v;
    r.phi_star_w = phi_star_w;
    const auto legacy = legacy_energy_s(s, p);
    r.E_legacy = legacy ? *legacy : std::numeric_limits<double>::quiet_NaN();
    return r;
}

}  // namespace arks
