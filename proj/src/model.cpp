#include "arks/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arks {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0))
        throw std::invalid_argument(std::string("Params: ") + name +
                                    " must be > 0");
}

}  // namespace

void Params::validate() const {
    require_positive(chi, "chi");
    require_positive(xi, "xi");
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_positive(gamma, "gamma");
    require_positive(delta, "delta");
    require_positive(D1, "D1");
    require_positive(D2, "D2");
}

DerivedConstants derived(const Params& p) {
    return {p.xi * p.gamma - p.chi * p.alpha, p.xi * p.gamma + p.chi * p.alpha};
}

SteadyState steady_state(const Params& p, double mass, double area) {
    if (!(mass > 0.0) || !(area > 0.0))
        throw std::invalid_argument("steady_state: mass and area must be > 0");
    const double ubar = mass / area;
    return {ubar, p.alpha * ubar / p.beta, p.gamma * ubar / p.delta};
}

double Sym2::min_eig() const {
    const double mid = 0.5 * (a00 + a11);
    const double rad = std::hypot(0.5 * (a00 - a11), a01);
    return mid - rad;
}

Sym2 matrix_A1(const Params& p) {
    const auto d = derived(p);
    return {d.theta2 / (4.0 * p.xi * p.alpha), -0.5,
            d.theta2 / (4.0 * p.gamma * p.chi)};
}

Sym2 matrix_A2(const Params& p) {
    const auto d = derived(p);
    return {d.theta2 * p.D1 / (2.0 * p.xi * p.alpha), -0.5 * (p.D1 + p.D2),
            d.theta2 * p.D2 / (2.0 * p.gamma * p.chi)};
}

Sym2 matrix_A3(const Params& p) {
    const auto d = derived(p);
    return {d.theta2 * p.beta / (2.0 * p.xi * p.alpha), -0.5 * (p.beta + p.delta),
            d.theta2 * p.delta / (2.0 * p.gamma * p.chi)};
}

RegimeReport classify(const Params& p, std::optional<double> ubar) {
    p.validate();
    const auto d = derived(p);

    RegimeReport r;
    r.theta1 = d.theta1;
    r.theta2 = d.theta2;

    const double ratio = (p.xi * p.gamma) / (p.chi * p.alpha);
    const double diff_ratio = std::max(p.D1 / p.D2, p.D2 / p.D1);
    const double decay_ratio = std::max(p.beta / p.delta, p.delta / p.beta);
    r.cond_main = ratio >= std::max(diff_ratio, decay_ratio);
    r.cond_strict = ratio > decay_ratio;

    const double t1sq = d.theta1 * d.theta1;
    const double t2sq = d.theta2 * d.theta2;
    const double dD = p.D1 - p.D2, sD = p.D1 + p.D2;
    const double db = p.beta - p.delta, sb = p.beta + p.delta;
    r.lc5_diffusion = t2sq * dD * dD <= sD * sD * t1sq;
    r.lc5_decay = t2sq * db * db <= sb * sb * t1sq;

    r.min_eig_A1 = matrix_A1(p).min_eig();
    r.min_eig_A2 = matrix_A2(p).min_eig();
    r.min_eig_A3 = matrix_A3(p).min_eig();

    if (r.cond_strict) {
        r.mu2 = std::max(1.0 / (2.0 * p.beta), 1.0 / (2.0 * p.delta));
        const double den1 = p.xi * p.gamma * p.delta - p.chi * p.alpha * p.beta;
        const double den2 = p.xi * p.gamma * p.beta - p.chi * p.alpha * p.delta;
        r.mu3 = std::max(d.theta1 / (2.0 * den1), d.theta1 / (2.0 * den2));
    }

    if (ubar && p.beta != p.delta) {
        const double u0 = *ubar;
        const double ca = p.chi * p.alpha;
        const double bd4 = 4.0 * p.beta * p.delta;
        const bool small_mass = u0 < bd4 / (ca * db * db);
        bool growth = false;
        const double den = (bd4 - db * db * ca * u0) * u0;
        if (den > 0.0)
            growth = p.xi * p.gamma > bd4 * (ca * u0 + 1.0) / den;
        r.lin2018 = small_mass && growth;
    }

    if (ubar) r.steady = steady_state(p, *ubar, 1.0);

    return r;
}

MuBounds mu_bounds(const Params& p, double sup_u, double ubar,
                   const Grid& grid) {
    p.validate();
    if (!(sup_u > 0.0) || !(ubar > 0.0))
        throw std::invalid_argument("mu_bounds: sup_u and ubar must be > 0");
    const auto d = derived(p);
    const double den1 = p.xi * p.gamma * p.delta - p.chi * p.alpha * p.beta;
    const double den2 = p.xi * p.gamma * p.beta - p.chi * p.alpha * p.delta;
    if (!(den1 > 0.0) || !(den2 > 0.0))
        throw std::invalid_argument(
            "mu_bounds: requires xi*gamma/(chi*alpha) > max{beta/delta, "
            "delta/beta}");

    MuBounds m;
    const double L = std::max(grid.Lx, grid.Ly);
    const double lambda1 = M_PI * M_PI / (L * L);
    m.mu1 = sup_u / (ubar * lambda1);
    m.mu2 = std::max(1.0 / (2.0 * p.beta), 1.0 / (2.0 * p.delta));
    m.mu3 = std::max(d.theta1 / (2.0 * den1), d.theta1 / (2.0 * den2));
    m.mu = (1.0 + MuBounds::headroom) * std::max({m.mu1, m.mu2, m.mu3});
    m.lambda_pred = 1.0 / (2.0 * m.mu);
    return m;
}

}  // namespace arks
