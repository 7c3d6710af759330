#pragma once

#include <array>
#include <span>
#include <vector>

#include "arks/solver.hpp"

namespace arks {

struct DecayFit {
    double rate = 0.0;       // lambda: value ~ amplitude * exp(-lambda t)
    double amplitude = 0.0;
    double r_squared = 0.0;
    double window_start = 0.0;
    double window_end = 0.0;
    int samples_used = 0;
};

// Least-squares line on (t, ln value) over the trailing window_fraction of
// the samples. Values at or below 1e-14 times the first value of the series
// are excluded as solver-noise plateau. Throws if fewer than 8 usable
// samples remain.
DecayFit fit_decay(std::span<const double> times,
                   std::span<const double> values, double window_fraction);

// Real parts (sorted descending) of the eigenvalues of the linearization of
// the system about the constant steady state at spatial mode k2:
//   [[-k2, chi*ubar*k2, -xi*ubar*k2], [alpha, -D1*k2-beta, 0],
//    [gamma, 0, -D2*k2-delta]]
struct ModeRates {
    double k2 = 0.0;
    std::array<double, 3> eigen_real_parts{};  // descending
};

ModeRates linearized_rates(const Params& p, double ubar, double k2);

// Eigenvalue of the mirrored five-point stencil for the (m,n) cosine mode:
// (2/hx^2)(1-cos(m pi hx/Lx)) + (2/hy^2)(1-cos(n pi hy/Ly)).
double discrete_mode_k2(const Grid& g, int m, int n);

struct RefinementRow {
    double h = 0.0;
    double dt = 0.0;
    double max_residual = 0.0;
    double observed_order = 0.0;  // log2 ratio vs previous level; NaN at level 0
};

// Reruns the given problem at successively halved dt_max and record_every
// (levels >= 2) and reports the largest Lyapunov residual per level.
std::vector<RefinementRow> refinement_study(const Params& p, const State& init,
                                            const SolverConfig& base,
                                            int levels);

}  // namespace arks
