#pragma once

#include <optional>

#include "arks/grid_ops.hpp"
#include "arks/model.hpp"

namespace arks {

struct State;  // defined in solver.hpp

// Relative entropy integral of u ln(u/ubar) with the integrand continued by
// zero where u = 0. Nonnegative; throws if u has no mass.
double entropy(const ScalarField& u);

// L1 / squared-L2 / sup distances to a constant, quadrature-consistent.
double dist_l1(const ScalarField& f, double c);
double dist_l2sq(const ScalarField& f, double c);
double dist_linf(const ScalarField& f, double c);

struct EnergyTerms {
    double entropy_term = 0.0;  // theta1/(2 xi chi) * entropy
    double grad_v = 0.0;        // theta2/(4 xi alpha) * |grad v|^2
    double grad_w = 0.0;        // theta2/(4 gamma chi) * |grad w|^2
    double cross = 0.0;         // - grad w . grad v
    double total = 0.0;
    double scale = 0.0;         // sum of absolute term values
};

// Lyapunov energy
//   E = theta1/(2 xi chi) int u ln(u/ubar) + theta2/(4 xi alpha) int |grad v|^2
//     + theta2/(4 gamma chi) int |grad w|^2 - int grad w . grad v
double energy_E(const State& s, const Params& p);
EnergyTerms energy_E_terms(const State& s, const Params& p);

// Same quantity assembled through the per-face quadratic form with A1;
// agrees with energy_E to rounding.
double energy_E_quadratic(const State& s, const Params& p);

struct DissipationTerms {
    double fisher = 0.0;      // theta1/(2 xi chi) * int |grad u|^2/u
    double lap_v = 0.0;       // theta2 D1/(2 xi alpha) * int (lap v)^2
    double lap_w = 0.0;       // theta2 D2/(2 gamma chi) * int (lap w)^2
    double grad_v = 0.0;      // theta2 beta/(2 xi alpha) * int |grad v|^2
    double grad_w = 0.0;      // theta2 delta/(2 gamma chi) * int |grad w|^2
    double cross_lap = 0.0;   // -(D1+D2) int lap w lap v
    double cross_grad = 0.0;  // -(beta+delta) int grad w . grad v
    double total = 0.0;
    double scale = 0.0;
    bool saturated = false;   // a face with u = 0 but grad u != 0 (total = inf)
};

double dissipation_F(const State& s, const Params& p);
DissipationTerms dissipation_F_terms(const State& s, const Params& p);

// Csiszar-Kullback-Pinsker sandwich around the relative entropy:
// lower = |u-ubar|_1^2 / (2 ubar), upper = |u-ubar|_2^2 / ubar.
struct CkpBounds {
    double lower = 0.0;
    double upper = 0.0;
};
CkpBounds ckp_bounds(const ScalarField& u);

// Backward-Euler update of the scalar comparison envelope
//   phi' + decay*phi = source_coeff*drive,
// i.e. (phi + dt*source_coeff*drive)/(1 + dt*decay).
double envelope_update(double phi, double dt, double drive, double decay,
                       double source_coeff);

// Equal-diffusion entropy int u ln u + 1/(2 theta1) int |grad(xi w - chi v)|^2.
// Applicable only when D1 == D2 (to 1e-12 relative) and theta1 > 0.
std::optional<double> legacy_energy_s(const State& s, const Params& p);

// One time-sample of everything the diagnostics stream records.
struct DiagnosticsRow {
    double t = 0.0;
    double mass = 0.0;
    double min_u = 0.0;
    double max_u = 0.0;
    double entropy = 0.0;
    double E = 0.0;
    double F = 0.0;
    double residual = 0.0;  // |dE/dt + avg F| between consecutive records
    double ckp_lower = 0.0;
    double ckp_upper = 0.0;
    double l1_u = 0.0;    // |u - ubar0|_1
    double linf_u = 0.0;  // |u - ubar0|_inf
    double linf_v = 0.0;  // |v - alpha ubar0/beta|_inf
    double linf_w = 0.0;  // |w - gamma ubar0/delta|_inf
    double phi_star_v = 0.0;
    double phi_star_w = 0.0;
    double E_legacy = 0.0;  // NaN when not applicable
};

// Assembles a row. prev, when present, supplies (t, E, F) of the previous
// record for the Lyapunov residual; the first row carries residual 0.
DiagnosticsRow diagnostics_row(const State& s, const Params& p, double ubar0,
                               double phi_star_v, double phi_star_w,
                               const DiagnosticsRow* prev);

}  // namespace arks
