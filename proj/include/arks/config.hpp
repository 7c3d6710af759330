#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "arks/model.hpp"
#include "arks/solver.hpp"

namespace arks {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InitSpec {
    enum class Kind { steady, cosine_bump, gaussian_bump, random };
    Kind kind = Kind::cosine_bump;
    double amplitude = 0.5;  // |amplitude| < 1
    int mode_m = 1;
    int mode_n = 0;
    double width = 0.1;      // gaussian_bump std deviation
    std::uint64_t seed = 1;
    double u_mean = 1.0;
    double lo = 0.5;         // random kind: per-cell uniform in [lo, hi]
    double hi = 1.5;
    double v_offset = 0.0;   // constant offsets from the steady chemical fields
    double w_offset = 0.0;

    bool operator==(const InitSpec&) const = default;
};

struct OutputSpec {
    double snapshot_every = 0.0;  // 0: final snapshot only

    bool operator==(const OutputSpec&) const = default;
};

// Full run description. Parsed from a flat "key = value" text with '#'
// comments; missing keys take the defaults below, unknown keys are errors.
struct RunConfig {
    Params params;
    int nx = 64;
    int ny = 64;
    double Lx = 1.0;
    double Ly = 1.0;
    SolverConfig solver;
    InitSpec init;
    OutputSpec output;

    // When solver.dt_max is not given it derives as record_every/4 so the
    // diagnostics sampling stays honest.
    bool dt_max_given = false;

    Grid grid() const { return Grid(nx, ny, Lx, Ly); }

    // Assigns one key; throws ConfigError on unknown key or bad value.
    void set(const std::string& key, const std::string& value);

    // Resolves derived defaults and checks cross-field constraints.
    void finalize();

    bool operator==(const RunConfig& o) const {
        return params == o.params && nx == o.nx && ny == o.ny && Lx == o.Lx &&
               Ly == o.Ly && solver.dt_max == o.solver.dt_max &&
               solver.cfl_safety == o.solver.cfl_safety &&
               solver.lin_tol == o.solver.lin_tol &&
               solver.lin_maxiter == o.solver.lin_maxiter &&
               solver.t_end == o.solver.t_end &&
               solver.record_every == o.solver.record_every && init == o.init &&
               output == o.output;
    }
};

// Parses and finalizes a config from text; error messages carry 1-based
// line numbers.
RunConfig parse_config(const std::string& text);

// Reads the file and parses it.
RunConfig load_config(const std::string& path);

// Canonical key = value rendering; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& c);

const char* to_string(InitSpec::Kind kind);

}  // namespace arks
