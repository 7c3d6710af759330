#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include "arks/analysis.hpp"
#include "arks/config.hpp"
#include "arks/init.hpp"
#include "arks/io.hpp"
#include "arks/model.hpp"
#include "arks/solver.hpp"

namespace fs = std::filesystem;
using namespace arks;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitBlowup = 3;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void print_classify(const Params& p, const RegimeReport& r,
                    std::optional<double> ubar) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::printf("regime report\n");
    std::printf("  %-28s %s\n", "theta1 = xi g - chi a", num6(r.theta1).c_str());
    std::printf("  %-28s %s\n", "theta2 = xi g + chi a", num6(r.theta2).c_str());
    std::printf("  %-28s %s\n", "main condition", yn(r.cond_main));
    std::printf("    xi*gamma/(chi*alpha) >= max{D1/D2, D2/D1, beta/delta, delta/beta}\n");
    std::printf("  %-28s %s\n", "strict decay condition", yn(r.cond_strict));
    std::printf("    xi*gamma/(chi*alpha) > max{beta/delta, delta/beta}\n");
    std::printf("  %-28s %s\n", "diffusion balance", yn(r.lc5_diffusion));
    std::printf("  %-28s %s\n", "decay balance", yn(r.lc5_decay));
    std::printf("  %-28s %s\n", "min eig A1", num6(r.min_eig_A1).c_str());
    std::printf("  %-28s %s\n", "min eig A2", num6(r.min_eig_A2).c_str());
    std::printf("  %-28s %s\n", "min eig A3", num6(r.min_eig_A3).c_str());
    if (r.mu2)
        std::printf("  %-28s %s   (max{1/(2 beta), 1/(2 delta)})\n", "mu2",
                    num6(*r.mu2).c_str());
    if (r.mu3) std::printf("  %-28s %s\n", "mu3", num6(*r.mu3).c_str());
    if (r.lin2018)
        std::printf("  %-28s %s\n", "smallness criterion", yn(*r.lin2018));
    else
        std::printf("  %-28s n/a%s\n", "smallness criterion",
                    ubar ? " (beta == delta)" : " (needs --ubar)");
    if (r.steady)
        std::printf("  %-28s (%s, %s, %s)\n", "steady state",
                    num6(r.steady->u).c_str(), num6(r.steady->v).c_str(),
                    num6(r.steady->w).c_str());

    std::printf("\n# machine readable\n");
    std::printf("theta1=%s\n", num(r.theta1).c_str());
    std::printf("theta2=%s\n", num(r.theta2).c_str());
    std::printf("cond_main=%d\n", r.cond_main);
    std::printf("cond_strict=%d\n", r.cond_strict);
    std::printf("lc5_diffusion=%d\n", r.lc5_diffusion);
    std::printf("lc5_decay=%d\n", r.lc5_decay);
    std::printf("min_eig_A1=%s\n", num(r.min_eig_A1).c_str());
    std::printf("min_eig_A2=%s\n", num(r.min_eig_A2).c_str());
    std::printf("min_eig_A3=%s\n", num(r.min_eig_A3).c_str());
    std::printf("mu2=%s\n", r.mu2 ? num(*r.mu2).c_str() : "nan");
    std::printf("mu3=%s\n", r.mu3 ? num(*r.mu3).c_str() : "nan");
    std::printf("mu2_formula=max{1/(2*beta),1/(2*delta)}\n");
    std::printf("mu_headroom=%s\n", num(MuBounds::headroom).c_str());
    if (r.lin2018) std::printf("lin2018=%d\n", *r.lin2018);
    else std::printf("lin2018=na\n");
    if (r.steady)
        std::printf("steady_u=%s\nsteady_v=%s\nsteady_w=%s\n",
                    num(r.steady->u).c_str(), num(r.steady->v).c_str(),
                    num(r.steady->w).c_str());
    (void)p;
}

struct RunOutputs {
    RunStatus status = RunStatus::normal;
    long steps = 0;
    DiagnosticsRow first;
    DiagnosticsRow last;
    double min_u_over_run = 0.0;
    std::vector<double> times, l1_u;
};

// Runs one configured problem, streaming diagnostics + snapshots into dir.
RunOutputs run_to_dir(const RunConfig& cfg, const fs::path& dir) {
    fs::create_directories(dir);
    {
        std::ofstream cfg_out(dir / "config.txt");
        cfg_out << serialize_config(cfg);
    }
    const State init = make_init(cfg);

    DiagnosticsWriter csv((dir / "diagnostics.csv").string());
    RunOutputs out;
    out.min_u_over_run = init.u.min();
    bool first_row = true;
    int snap_index = 0;
    double next_snap = 0.0;
    const double snap_every = cfg.output.snapshot_every;

    RunResult res = run(init, cfg.params, cfg.solver,
                        [&](const DiagnosticsRow& row, const State& s) {
        csv.write(row);
        if (first_row) out.first = row;
        first_row = false;
        out.last = row;
        out.min_u_over_run = std::min(out.min_u_over_run, row.min_u);
        out.times.push_back(row.t);
        out.l1_u.push_back(row.l1_u);
        if (snap_every > 0.0 && row.t >= next_snap - 1e-12) {
            char name[32];
            std::snprintf(name, sizeof name, "snapshot_%04d.txt", snap_index++);
            write_snapshot((dir / name).string(), s);
            while (next_snap <= row.t + 1e-12) next_snap += snap_every;
        }
    });
    csv.close();
    write_snapshot((dir / "snapshot_final.txt").string(), res.state);
    out.status = res.status;
    out.steps = res.steps;
    return out;
}

void write_summary(const fs::path& dir, const std::string& status,
                   const RunOutputs* out, const std::string& message = "") {
    std::ofstream s(dir / "summary.txt");
    s << "status = " << status << "\n";
    if (!message.empty()) s << "message = " << message << "\n";
    if (out) {
        const double drift =
            out->first.mass != 0.0
                ? std::abs(out->last.mass - out->first.mass) /
                      std::abs(out->first.mass)
                : 0.0;
        s << "steps = " << out->steps << "\n"
          << "t_final = " << num(out->last.t) << "\n"
          << "mass_drift_rel = " << num(drift) << "\n"
          << "min_u_over_run = " << num(out->min_u_over_run) << "\n"
          << "l1_u = " << num(out->last.l1_u) << "\n"
          << "linf_u = " << num(out->last.linf_u) << "\n"
          << "linf_v = " << num(out->last.linf_v) << "\n"
          << "linf_w = " << num(out->last.linf_w) << "\n"
          << "E = " << num(out->last.E) << "\n"
          << "F = " << num(out->last.F) << "\n";
    }
}

struct SweepAxis {
    std::string key;
    std::vector<std::string> values;  // pre-formatted, %.17g round-trip
};

SweepAxis parse_vary(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--vary expects key=lo:hi:count, got '" + text + "'");
    SweepAxis axis;
    axis.key = text.substr(0, eq);
    const std::string range = text.substr(eq + 1);
    const auto c1 = range.find(':');
    const auto c2 = range.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError("--vary expects key=lo:hi:count, got '" + text + "'");
    const double lo = std::stod(range.substr(0, c1));
    const double hi = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    const int count = std::stoi(range.substr(c2 + 1));
    if (count < 1) throw ConfigError("--vary count must be >= 1");
    for (int k = 0; k < count; ++k) {
        const double v =
            count == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / (count - 1);
        axis.values.push_back(num(v));
    }
    return axis;
}

int default_jobs() {
    if (const char* env = std::getenv("ARKS_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

int cmd_classify(const std::string& config_path, std::optional<double> ubar) {
    const RunConfig cfg = load_config(config_path);
    const RegimeReport r = classify(cfg.params, ubar);
    print_classify(cfg.params, r, ubar);
    return kExitOk;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    const RunConfig cfg = load_config(config_path);
    const fs::path dir(out_dir);
    try {
        const RunOutputs out = run_to_dir(cfg, dir);
        const bool blew = out.status == RunStatus::blowup;
        write_summary(dir, blew ? "blowup" : "normal", &out);
        std::printf("status: %s after %ld steps, t = %s\n",
                    blew ? "blowup" : "normal", out.steps,
                    num6(out.last.t).c_str());
        std::printf("  |u-ubar|_inf = %s  |v-v*|_inf = %s  |w-w*|_inf = %s\n",
                    num6(out.last.linf_u).c_str(), num6(out.last.linf_v).c_str(),
                    num6(out.last.linf_w).c_str());
        return blew ? kExitBlowup : kExitOk;
    } catch (const std::exception& e) {
        write_summary(dir, "error", nullptr, e.what());
        throw;
    }
}

int cmd_oracle(const std::string& config_path, const std::string& mode) {
    const RunConfig cfg = load_config(config_path);
    const auto comma = mode.find(',');
    if (comma == std::string::npos)
        throw ConfigError("--mode expects m,n (e.g. 1,0)");
    const int m = std::stoi(mode.substr(0, comma));
    const int n = std::stoi(mode.substr(comma + 1));
    const State init = make_init(cfg);
    const double ubar = integrate(init.u) / init.u.grid.area();
    const double k2 = discrete_mode_k2(cfg.grid(), m, n);
    const ModeRates rates = linearized_rates(cfg.params, ubar, k2);
    std::printf("mode (%d,%d): discrete k2 = %s, ubar = %s\n", m, n,
                num(k2).c_str(), num(ubar).c_str());
    std::printf("eigenvalue real parts (descending):\n");
    for (double re : rates.eigen_real_parts)
        std::printf("  %s\n", num(re).c_str());
    std::printf("k2=%s\n", num(k2).c_str());
    std::printf("re0=%s\nre1=%s\nre2=%s\n", num(rates.eigen_real_parts[0]).c_str(),
                num(rates.eigen_real_parts[1]).c_str(),
                num(rates.eigen_real_parts[2]).c_str());
    return kExitOk;
}

int cmd_fit(const std::string& csv_path, const std::string& column,
            double window) {
    const CsvTable table = read_csv(csv_path);
    const auto& t = table.column("t");
    const auto& v = table.column(column);
    const DecayFit fit = fit_decay(t, v, window);
    std::printf("fit of %s over t in [%s, %s] (%d samples)\n", column.c_str(),
                num6(fit.window_start).c_str(), num6(fit.window_end).c_str(),
                fit.samples_used);
    std::printf("  value ~ C exp(-lambda t)\n");
    std::printf("rate=%s\namplitude=%s\nr_squared=%s\n", num(fit.rate).c_str(),
                num(fit.amplitude).c_str(), num(fit.r_squared).c_str());
    return kExitOk;
}

int cmd_sweep(const std::string& config_path,
              const std::vector<std::string>& vary_specs,
              const std::string& out_dir, int jobs) {
    const RunConfig base = load_config(config_path);
    std::vector<SweepAxis> axes;
    for (const auto& spec : vary_specs) axes.push_back(parse_vary(spec));
    if (axes.empty()) throw ConfigError("sweep needs at least one --vary");

    // Cartesian product of the axes.
    std::vector<std::vector<std::pair<std::string, std::string>>> points{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<std::pair<std::string, std::string>>> next;
        for (const auto& pt : points)
            for (const auto& val : axis.values) {
                auto p = pt;
                p.emplace_back(axis.key, val);
                next.push_back(std::move(p));
            }
        points = std::move(next);
    }

    const fs::path dir(out_dir);
    fs::create_directories(dir);

    struct PointResult {
        std::string status = "error";
        RunOutputs out;
        double lambda_l1 = std::nan("");
        double r2_l1 = std::nan("");
        std::string message;
    };
    std::vector<PointResult> results(points.size());

    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const size_t k = cursor.fetch_add(1);
            if (k >= points.size()) return;
            char name[32];
            std::snprintf(name, sizeof name, "point_%04zu", k);
            const fs::path pdir = dir / name;
            PointResult& pr = results[k];
            try {
                RunConfig cfg = base;
                for (const auto& [key, val] : points[k]) cfg.set(key, val);
                cfg.finalize();
                pr.out = run_to_dir(cfg, pdir);
                pr.status =
                    pr.out.status == RunStatus::blowup ? "blowup" : "normal";
                write_summary(pdir, pr.status, &pr.out);
                try {
                    const DecayFit fit =
                        fit_decay(pr.out.times, pr.out.l1_u, 0.5);
                    pr.lambda_l1 = fit.rate;
                    pr.r2_l1 = fit.r_squared;
                } catch (const std::exception&) {
                    // too few usable samples; leave nan
                }
            } catch (const std::exception& e) {
                pr.message = e.what();
                write_summary(pdir, "error", nullptr, e.what());
            }
        }
    };

    const int nthreads =
        std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
    std::vector<std::thread> pool;
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ofstream csv(dir / "sweep.csv");
    csv << "point";
    for (const auto& axis : axes) csv << ',' << axis.key;
    csv << ",status,steps,t_final,min_u,l1_u,linf_u,linf_v,linf_w,E,F,"
           "lambda_l1,r2_l1\n";
    bool any_error = false;
    for (size_t k = 0; k < points.size(); ++k) {
        const PointResult& pr = results[k];
        csv << k;
        for (const auto& [key, val] : points[k]) csv << ',' << val;
        csv << ',' << pr.status;
        if (pr.status == "error") {
            any_error = true;
            csv << ",0,nan,nan,nan,nan,nan,nan,nan,nan,nan,nan\n";
            continue;
        }
        csv << ',' << pr.out.steps << ',' << num(pr.out.last.t) << ','
            << num(pr.out.min_u_over_run) << ',' << num(pr.out.last.l1_u) << ','
            << num(pr.out.last.linf_u) << ',' << num(pr.out.last.linf_v) << ','
            << num(pr.out.last.linf_w) << ',' << num(pr.out.last.E) << ','
            << num(pr.out.last.F) << ',' << num(pr.lambda_l1) << ','
            << num(pr.r2_l1) << '\n';
    }
    std::printf("sweep: %zu points -> %s\n", points.size(),
                (dir / "sweep.csv").c_str());
    return any_error ? kExitRuntime : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for a three-field chemotaxis system "
                 "with attraction and repulsion"};
    app.require_subcommand(1);

    std::string config_path, out_dir, mode = "1,0", csv_path, column;
    std::optional<double> ubar;
    double window = 0.5;
    std::vector<std::string> vary_specs;
    int jobs = default_jobs();

    auto* classify_cmd =
        app.add_subcommand("classify", "Evaluate the parameter-regime report");
    classify_cmd->add_option("--config", config_path, "config file")->required();
    classify_cmd->add_option("--ubar", ubar, "mean cell density");

    auto* run_cmd = app.add_subcommand("run", "Integrate the system");
    run_cmd->add_option("--config", config_path, "config file")->required();
    run_cmd->add_option("--out", out_dir, "output directory")->required();

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "Linearized decay rates at a grid cosine mode");
    oracle_cmd->add_option("--config", config_path, "config file")->required();
    oracle_cmd->add_option("--mode", mode, "mode indices m,n (default 1,0)");

    auto* fit_cmd =
        app.add_subcommand("fit", "Fit an exponential decay rate to a CSV column");
    fit_cmd->add_option("--csv", csv_path, "diagnostics CSV")->required();
    fit_cmd->add_option("--column", column, "column name")->required();
    fit_cmd->add_option("--window", window, "trailing sample fraction (0,1]");

    auto* sweep_cmd = app.add_subcommand("sweep", "Grid of runs over parameters");
    sweep_cmd->add_option("--config", config_path, "config file")->required();
    sweep_cmd->add_option("--vary", vary_specs, "key=lo:hi:count (repeatable)")
        ->required();
    sweep_cmd->add_option("--out", out_dir, "output directory")->required();
    sweep_cmd->add_option("--jobs", jobs, "worker count (env ARKS_JOBS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(config_path, ubar);
        if (run_cmd->parsed()) return cmd_run(config_path, out_dir);
        if (oracle_cmd->parsed()) return cmd_oracle(config_path, mode);
        if (fit_cmd->parsed()) return cmd_fit(csv_path, column, window);
        if (sweep_cmd->parsed())
            return cmd_sweep(config_path, vary_specs, out_dir, jobs);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}
