#pragma once

#include <optional>

#include "arks/grid.hpp"

namespace arks {

// The eight positive model constants of the three-field system
//   u_t = lap(u) - div(chi u grad v) + div(xi u grad w)
//   v_t = D1 lap(v) + alpha u - beta v
//   w_t = D2 lap(w) + gamma u - delta w
struct Params {
    double chi = 1.0;
    double xi = 2.0;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 2.0;
    double delta = 1.2;
    double D1 = 1.0;
    double D2 = 1.5;

    // Throws std::invalid_argument unless all eight are strictly positive.
    void validate() const;

    bool operator==(const Params&) const = default;
};

// theta1 = xi*gamma - chi*alpha (repulsion minus attraction),
// theta2 = xi*gamma + chi*alpha. theta2^2 - theta1^2 = 4*xi*gamma*chi*alpha.
struct DerivedConstants {
    double theta1 = 0.0;
    double theta2 = 0.0;
};

DerivedConstants derived(const Params& p);

struct SteadyState {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};

// Constant steady state (ubar, alpha*ubar/beta, gamma*ubar/delta) with
// ubar = mass/area.
SteadyState steady_state(const Params& p, double mass, double area);

// Symmetric 2x2 matrix [[a00, a01], [a01, a11]].
struct Sym2 {
    double a00 = 0.0;
    double a01 = 0.0;
    double a11 = 0.0;

    double det() const { return a00 * a11 - a01 * a01; }
    double min_eig() const;
    // Quadratic form (x y) A (x y)^T.
    double quad(double x, double y) const {
        return a00 * x * x + 2.0 * a01 * x * y + a11 * y * y;
    }
};

// Energy quadratic form on (grad v, grad w).
Sym2 matrix_A1(const Params& p);
// Dissipation quadratic form on (lap v, lap w).
Sym2 matrix_A2(const Params& p);
// Dissipation quadratic form on (grad v, grad w).
Sym2 matrix_A3(const Params& p);

struct RegimeReport {
    double theta1 = 0.0;
    double theta2 = 0.0;
    // xi*gamma/(chi*alpha) >= max{D1/D2, D2/D1, beta/delta, delta/beta}
    bool cond_main = false;
    // xi*gamma/(chi*alpha) > max{beta/delta, delta/beta}
    bool cond_strict = false;
    // theta2^2 (D1-D2)^2 <= (D1+D2)^2 theta1^2
    bool lc5_diffusion = false;
    // theta2^2 (beta-delta)^2 <= (beta+delta)^2 theta1^2
    bool lc5_decay = false;
    double min_eig_A1 = 0.0;
    double min_eig_A2 = 0.0;
    double min_eig_A3 = 0.0;
    // Present only when cond_strict holds.
    std::optional<double> mu2;
    std::optional<double> mu3;
    // Smallness-based criterion from earlier work on the equal-diffusion
    // case; not applicable (nullopt) when beta == delta or ubar is unknown.
    std::optional<bool> lin2018;
    // Present when ubar was supplied.
    std::optional<SteadyState> steady;
};

// Evaluates every algebraic regime condition. ubar (mean cell density) is
// optional; it is needed only for the smallness criterion and the steady
// state. Throws on nonpositive parameters.
RegimeReport classify(const Params& p, std::optional<double> ubar = {});

// Constants controlling the energy-dissipation comparison E <= mu * F and
// the implied L1 decay rate exp(-t/(2 mu)).
struct MuBounds {
    double mu1 = 0.0;  // sup_u / (ubar * lambda1), lambda1 = pi^2/max(Lx,Ly)^2
    double mu2 = 0.0;  // max{1/(2 beta), 1/(2 delta)}
    double mu3 = 0.0;  // max{theta1/(2(xg d - ca b)), theta1/(2(xg b - ca d))}
    double mu = 0.0;   // (1 + headroom) * max{mu1, mu2, mu3}
    double lambda_pred = 0.0;  // 1/(2 mu)
    static constexpr double headroom = 0.01;
};

// Requires the strict condition (xi gamma delta > chi alpha beta and
// xi gamma beta > chi alpha delta); throws otherwise.
MuBounds mu_bounds(const Params& p, double sup_u, double ubar, const Grid& grid);

}  // namespace arks
