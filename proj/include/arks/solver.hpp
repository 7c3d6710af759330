#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "arks/functionals.hpp"
#include "arks/grid_ops.hpp"
#include "arks/model.hpp"

namespace arks {

// Simulation state: nonnegative cell densities and chemical fields at time t.
struct State {
    ScalarField u;
    ScalarField v;
    ScalarField w;
    double t = 0.0;
};

struct SolverConfig {
    double dt_max = 0.025;
    double cfl_safety = 0.2;   // in (0,1]
    double lin_tol = 1e-10;    // relative residual, <= 1e-8
    int lin_maxiter = 20000;
    double t_end = 10.0;
    double record_every = 0.1;

    void validate() const;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Admissible explicit-transport step:
//   min{ cfl_safety*hx/Vx_max, cfl_safety*hy/Vy_max, dt_max }
// with V the face speed of chi|grad v| + xi|grad w|. Returns dt_max when the
// chemical fields are flat.
double cfl_dt(const State& s, const Params& p, const SolverConfig& cfg);

// Solves (I - dt*diff*lap + dt*decay) x = b by Jacobi-preconditioned
// conjugate gradients to a relative residual of lin_tol. The constant mode
// is corrected exactly, so the cell sum of x matches the cell sum of b when
// decay = 0. Throws SolverError on non-convergence.
ScalarField implicit_solve(const ScalarField& b, double diff, double decay,
                           double dt, const SolverConfig& cfg);

// One IMEX step: backward-Euler solves for v and w, explicit donor-cell
// chemotactic transport of u against the fresh chemical fields, then a
// backward-Euler diffusion solve for u. Mass of u is conserved to rounding;
// u stays nonnegative under the CFL cap. Throws SolverError if u drops
// below -1e-13 * max(u).
State step(const State& s, const Params& p, double dt, const SolverConfig& cfg);

enum class RunStatus { normal, blowup };

struct RunResult {
    State state;
    RunStatus status = RunStatus::normal;
    long steps = 0;
};

// Diagnostics consumer: called with each emitted row and the state snapshot
// it was computed from.
using DiagnosticsSink =
    std::function<void(const DiagnosticsRow&, const State&)>;

// Advances init to cfg.t_end with adaptive dt, emitting a diagnostics row at
// t = 0, at every multiple of record_every, and at t_end. Comparison
// envelopes for v and w are advanced per step. A state whose maximum exceeds
// 1e6 times the initial maximum terminates the run with RunStatus::blowup.
RunResult run(const State& init, const Params& p, const SolverConfig& cfg,
              const DiagnosticsSink& sink);

}  // namespace arks
