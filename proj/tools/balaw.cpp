// Command-line front end: riemann | simulate | decay | convergence |
// oracle-compare. Configuration comes from an optional key=value file plus
// repeatable --set overrides; every run stamps its outputs with the resolved
// config. Exit codes: 0 success, 2 configuration error, 3 guard abort,
// 4 solver or I/O failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "balaw/run.hpp"
#include "balaw/version.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir = "out";
    long long seed = -1;
    bool quiet = false;
};

void add_common(CLI::App* sub, CommonArgs& a) {
    sub->add_option("--config", a.config_path, "key=value config file");
    sub->add_option("--set", a.sets, "override, e.g. --set mesh.h=0.01 (repeatable)");
    sub->add_option("--out", a.out_dir, "output directory (default: out)");
    sub->add_option("--seed", a.seed, "override sampling.seed");
    sub->add_flag("--quiet", a.quiet, "suppress progress output");
}

balaw::Config load_config(const CommonArgs& a) {
    balaw::Config cfg;
    if (!a.config_path.empty()) cfg = balaw::Config::parse_file(a.config_path);
    for (const std::string& s : a.sets) cfg.set_override(s);
    if (a.seed >= 0) cfg.set("sampling.seed", std::to_string(a.seed));
    return cfg;
}

void say(const CommonArgs& a, const std::string& line) {
    if (!a.quiet) std::cout << line << "\n";
}

int dispatch(const std::string& cmd, const CommonArgs& a) {
    const balaw::Config cfg = load_config(a);

    if (cmd == "riemann") {
        const auto res = balaw::run_riemann(cfg, a.out_dir);
        const auto& fan = res.fan;
        char line[256];
        std::snprintf(line, sizeof line,
                      "gamma = (%.10g, %.10g); minus %s [%.10g, %.10g]; plus %s [%.10g, %.10g]",
                      fan.gamma.x0, fan.gamma.x1, fan.waves[0].is_shock() ? "shock" : "rarefaction",
                      fan.waves[0].speed_lo, fan.waves[0].speed_hi,
                      fan.waves[1].is_shock() ? "shock" : "rarefaction", fan.waves[1].speed_lo,
                      fan.waves[1].speed_hi);
        say(a, line);
        say(a, "wrote " + res.csv_path);
        return 0;
    }
    if (cmd == "simulate") {
        const auto res = balaw::run_simulate(cfg, a.out_dir);
        char line[128];
        std::snprintf(line, sizeof line, "ran %ld strips to t = %.6g, %zu records",
                      res.setup.n_strips, res.final_state.t(), res.records.size());
        say(a, line);
        for (const auto& f : res.written) say(a, "wrote " + f);
        return 0;
    }
    if (cmd == "decay") {
        const auto res = balaw::run_decay(cfg, a.out_dir);
        char line[256];
        std::snprintf(line, sizeof line,
                      "TV exponent %.4f (envelope violations %.2f%%), L1 exponent %.4f "
                      "(violations %.2f%%)",
                      res.tv_fit.exponent, 100.0 * res.tv_env.violation_fraction,
                      res.l1_fit.exponent, 100.0 * res.l1_env.violation_fraction);
        say(a, line);
        for (const auto& f : res.sim.written) say(a, "wrote " + f);
        say(a, "wrote " + res.json_path);
        return 0;
    }
    if (cmd == "convergence") {
        const auto res = balaw::run_convergence(cfg, a.out_dir);
        for (const auto& lvl : res.levels) {
            char line[256];
            std::snprintf(line, sizeof line,
                          "h = %-8g flux_mismatch %.3e  mass_drift %.3e  l1_self_diff %.3e",
                          lvl.h, lvl.flux_mismatch_max, lvl.mass_drift, lvl.l1_self_diff);
            say(a, line);
        }
        say(a, "wrote " + res.csv_path);
        return 0;
    }
    if (cmd == "oracle-compare") {
        const auto res = balaw::run_oracle_compare(cfg, a.out_dir);
        for (const auto& row : res.rows) {
            char line[256];
            std::snprintf(line, sizeof line, "t = %-8g l1 %.3e  linf %.3e", row.t,
                          row.l1_w1 + row.l1_w2, row.linf);
            say(a, line);
        }
        say(a, "wrote " + res.csv_path);
        return 0;
    }
    std::cerr << "unknown subcommand '" << cmd << "'\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(balaw::version_string) +
                 " - random-choice solver for a 2x2 balance law with logistic growth"};
    app.require_subcommand(1);

    CommonArgs args;
    const std::vector<std::pair<std::string, std::string>> subs = {
        {"riemann", "solve one Riemann problem and sample its wave fan"},
        {"simulate", "run the random-choice scheme and write diagnostics + snapshots"},
        {"decay", "simulate, then fit decay exponents and write a JSON summary"},
        {"convergence", "mesh-refinement sweep: flux mismatch, mass drift, self-differences"},
        {"oracle-compare", "compare against the fine-mesh finite-volume reference"},
    };
    for (const auto& [name, desc] : subs) add_common(app.add_subcommand(name, desc), args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), args);
    } catch (const balaw::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const balaw::guard_error& e) {
        std::cerr << "guard abort: " << e.what() << "\n";
        return 3;
    } catch (const balaw::solver_error& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 4;
    } catch (const balaw::io_error& e) {
        std::cerr << "io failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 4;
    }
}
