#include "arks/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace arks {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return d;
    } catch (const std::exception&) {
        throw ConfigError(key + ": not a number: '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const auto [p, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size())
        throw ConfigError(key + ": not an integer: '" + value + "'");
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const auto [p, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size())
        throw ConfigError(key + ": not an unsigned integer: '" + value + "'");
    return out;
}

double parse_positive(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    if (!(d > 0.0)) throw ConfigError(key + ": must be > 0, got " + value);
    return d;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const char* to_string(InitSpec::Kind kind) {
    switch (kind) {
        case InitSpec::Kind::steady: return "steady";
        case InitSpec::Kind::cosine_bump: return "cosine_bump";
        case InitSpec::Kind::gaussian_bump: return "gaussian_bump";
        case InitSpec::Kind::random: return "random";
    }
    return "?";
}

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key == "params.chi") params.chi = parse_positive(key, value);
    else if (key == "params.xi") params.xi = parse_positive(key, value);
    else if (key == "params.alpha") params.alpha = parse_positive(key, value);
    else if (key == "params.beta") params.beta = parse_positive(key, value);
    else if (key == "params.gamma") params.gamma = parse_positive(key, value);
    else if (key == "params.delta") params.delta = parse_positive(key, value);
    else if (key == "params.D1") params.D1 = parse_positive(key, value);
    else if (key == "params.D2") params.D2 = parse_positive(key, value);
    else if (key == "grid.nx") {
        nx = parse_int(key, value);
        if (nx < 4) throw ConfigError(key + ": must be >= 4");
    } else if (key == "grid.ny") {
        ny = parse_int(key, value);
        if (ny < 4) throw ConfigError(key + ": must be >= 4");
    } else if (key == "grid.Lx") Lx = parse_positive(key, value);
    else if (key == "grid.Ly") Ly = parse_positive(key, value);
    else if (key == "solver.dt_max") {
        solver.dt_max = parse_positive(key, value);
        dt_max_given = true;
    } else if (key == "solver.cfl_safety") {
        solver.cfl_safety = parse_positive(key, value);
        if (solver.cfl_safety > 1.0) throw ConfigError(key + ": must be <= 1");
    } else if (key == "solver.lin_tol") {
        solver.lin_tol = parse_positive(key, value);
        if (solver.lin_tol > 1e-8) throw ConfigError(key + ": must be <= 1e-8");
    } else if (key == "solver.lin_maxiter") {
        solver.lin_maxiter = parse_int(key, value);
        if (solver.lin_maxiter < 1) throw ConfigError(key + ": must be >= 1");
    } else if (key == "solver.t_end") {
        solver.t_end = parse_double(key, value);
        if (solver.t_end < 0.0) throw ConfigError(key + ": must be >= 0");
    } else if (key == "solver.record_every")
        solver.record_every = parse_positive(key, value);
    else if (key == "init.kind") {
        if (value == "steady") init.kind = InitSpec::Kind::steady;
        else if (value == "cosine_bump") init.kind = InitSpec::Kind::cosine_bump;
        else if (value == "gaussian_bump")
            init.kind = InitSpec::Kind::gaussian_bump;
        else if (value == "random") init.kind = InitSpec::Kind::random;
        else
            throw ConfigError(
                key + ": expected steady|cosine_bump|gaussian_bump|random, got '" +
                value + "'");
    } else if (key == "init.amplitude") init.amplitude = parse_double(key, value);
    else if (key == "init.mode_m") {
        init.mode_m = parse_int(key, value);
        if (init.mode_m < 0) throw ConfigError(key + ": must be >= 0");
    } else if (key == "init.mode_n") {
        init.mode_n = parse_int(key, value);
        if (init.mode_n < 0) throw ConfigError(key + ": must be >= 0");
    } else if (key == "init.width") init.width = parse_positive(key, value);
    else if (key == "init.seed") init.seed = parse_u64(key, value);
    else if (key == "init.u_mean") init.u_mean = parse_positive(key, value);
    else if (key == "init.lo") {
        init.lo = parse_double(key, value);
        if (init.lo < 0.0) throw ConfigError(key + ": must be >= 0");
    } else if (key == "init.hi") init.hi = parse_positive(key, value);
    else if (key == "init.v_offset") init.v_offset = parse_double(key, value);
    else if (key == "init.w_offset") init.w_offset = parse_double(key, value);
    else if (key == "output.snapshot_every") {
        output.snapshot_every = parse_double(key, value);
        if (output.snapshot_every < 0.0)
            throw ConfigError(key + ": must be >= 0");
    } else
        throw ConfigError("unknown key '" + key + "'");
}

void RunConfig::finalize() {
    if (!dt_max_given) {
        solver.dt_max = solver.record_every / 4.0;
        dt_max_given = true;
    }
    params.validate();
    solver.validate();
    (void)grid();  // validates nx, ny, Lx, Ly
    if (std::abs(init.amplitude) >= 1.0)
        throw ConfigError("init.amplitude: |amplitude| must be < 1");
    if (init.lo > init.hi) throw ConfigError("init.lo: must be <= init.hi");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) +
                              ": empty key or value");
        try {
            cfg.set(key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " +
                              e.what());
        }
    }
    cfg.finalize();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    out << "params.chi = " << fmt(c.params.chi) << "\n"
        << "params.xi = " << fmt(c.params.xi) << "\n"
        << "params.alpha = " << fmt(c.params.alpha) << "\n"
        << "params.beta = " << fmt(c.params.beta) << "\n"
        << "params.gamma = " << fmt(c.params.gamma) << "\n"
        << "params.delta = " << fmt(c.params.delta) << "\n"
        << "params.D1 = " << fmt(c.params.D1) << "\n"
        << "params.D2 = " << fmt(c.params.D2) << "\n"
        << "grid.nx = " << c.nx << "\n"
        << "grid.ny = " << c.ny << "\n"
        << "grid.Lx = " << fmt(c.Lx) << "\n"
        << "grid.Ly = " << fmt(c.Ly) << "\n"
        << "solver.dt_max = " << fmt(c.solver.dt_max) << "\n"
        << "solver.cfl_safety = " << fmt(c.solver.cfl_safety) << "\n"
        << "solver.lin_tol = " << fmt(c.solver.lin_tol) << "\n"
        << "solver.lin_maxiter = " << c.solver.lin_maxiter << "\n"
        << "solver.t_end = " << fmt(c.solver.t_end) << "\n"
        << "solver.record_every = " << fmt(c.solver.record_every) << "\n"
        << "init.kind = " << to_string(c.init.kind) << "\n"
        << "init.amplitude = " << fmt(c.init.amplitude) << "\n"
        << "init.mode_m = " << c.init.mode_m << "\n"
        << "init.mode_n = " << c.init.mode_n << "\n"
        << "init.width = " << fmt(c.init.width) << "\n"
        << "init.seed = " << c.init.seed << "\n"
        << "init.u_mean = " << fmt(c.init.u_mean) << "\n"
        << "init.lo = " << fmt(c.init.lo) << "\n"
        << "init.hi = " << fmt(c.init.hi) << "\n"
        << "init.v_offset = " << fmt(c.init.v_offset) << "\n"
        << "init.w_offset = " << fmt(c.init.w_offset) << "\n"
        << "output.snapshot_every = " << fmt(c.output.snapshot_every) << "\n";
    return out.str();
}

}  // namespace arks
