#pragma once

// Experiment drivers behind the CLI subcommands. Each driver resolves a flat
// key=value Config against the full default catalog (rejecting unknown keys),
// runs the experiment, and writes CSV/JSON artifacts whose comment headers
// embed the resolved config and the version string, so every output file is
// self-describing and reruns with the same config are byte-identical.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "balaw/config.hpp"
#include "balaw/diagnostics.hpp"
#include "balaw/errors.hpp"
#include "balaw/glimm.hpp"
#include "balaw/initial_data.hpp"
#include "balaw/oracle.hpp"
#include "balaw/riemann.hpp"
#include "balaw/version.hpp"

namespace balaw {

namespace detail {

inline std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::vector<double> parse_double_list(const std::string& s, const std::string& key) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        // trim
        std::size_t a = 0, b = item.size();
        while (a < b && std::isspace(static_cast<unsigned char>(item[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(item[b - 1]))) --b;
        if (a == b) continue;
        const std::string tok = item.substr(a, b - a);
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw config_error("config key '" + key + "': invalid number '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Config resolution
// ---------------------------------------------------------------------------

/// All ingredients of a run, plus the fully materialized config used to
/// stamp output files.
struct RunSetup {
    Config resolved;
    MeshConfig mesh;
    ModelParams params;
    SamplingSequence seq;
    AsymptoticProfile prof{0.0};
    InitialDataSpec data_spec;
    InitialData data;
    DiagnosticsOptions diag;
    std::vector<double> snapshot_times;
    long n_strips = 0;
    // fitting / comparison knobs
    double fit_t_lo = 0.0, fit_t_hi = 0.0, envelope_power = -0.25;
    double oracle_dx = 1e-3, compare_X = 0.0;
    std::vector<double> convergence_h;
    double riemann_theta = 0.0, riemann_span = 2.0;
    long riemann_samples = 401;
};

namespace detail {

/// Reads keys with defaults, materializes every resolved value, and rejects
/// keys outside the catalog.
class Resolver {
  public:
    explicit Resolver(const Config& user) : user_(user) {}

    double num(const std::string& key, double fallback) {
        const double v = user_.get_double(key, fallback);
        out_.set(key, user_.has(key) ? user_.get_string(key, "") : fmt_g(v));
        seen_.insert(key);
        return v;
    }

    long long integer(const std::string& key, long long fallback) {
        const long long v = user_.get_long(key, fallback);
        out_.set(key, user_.has(key) ? user_.get_string(key, "") : std::to_string(v));
        seen_.insert(key);
        return v;
    }

    bool flag(const std::string& key, bool fallback) {
        const bool v = user_.get_bool(key, fallback);
        out_.set(key, user_.has(key) ? user_.get_string(key, "") : (v ? "true" : "false"));
        seen_.insert(key);
        return v;
    }

    std::string str(const std::string& key, const std::string& fallback) {
        const std::string v = user_.get_string(key, fallback);
        out_.set(key, v);
        seen_.insert(key);
        return v;
    }

    void reject_unknown() const {
        for (const auto& [k, v] : user_.entries())
            if (seen_.count(k) == 0) throw config_error("unknown config key '" + k + "'");
    }

    Config take() { return std::move(out_); }

  private:
    const Config& user_;
    Config out_;
    std::set<std::string> seen_;
};

inline std::vector<TableRow> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open table file '" + path + "'");
    std::vector<TableRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        TableRow r;
        char trail;
        const int got = std::sscanf(line.c_str(), " %lf , %lf , %lf %c", &r.x, &r.v, &r.u, &trail);
        if (got != 3)
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": expected 'x,v,u', got '" + line + "'");
        rows.push_back(r);
    }
    return rows;
}

} // namespace detail

inline RunSetup resolve_run(const Config& user) {
    detail::Resolver r(user);
    RunSetup s;

    // Initial data.
    InitialDataSpec& d = s.data_spec;
    d.family = parse_family(r.str("data.family", "rational_bump"));
    d.amplitude = r.num("data.amplitude", 0.05);
    d.power = r.num("data.power", 4.0);
    d.mass_target = r.num("data.mass_target", 0.0);
    d.shift = r.num("data.shift", 0.0);
    d.jump_at = r.num("data.jump_at", 0.0);
    d.left_v = r.num("data.left_v", 0.0);
    d.left_u = r.num("data.left_u", 1.0);
    d.right_v = r.num("data.right_v", 0.0);
    d.right_u = r.num("data.right_u", 1.0);
    const std::string table_file = r.str("data.table_file", "");
    if (!table_file.empty()) d.table = detail::load_table(table_file);
    s.data = make_initial_data(d);

    // Mesh.
    s.mesh.h = r.num("mesh.h", 0.01);
    s.mesh.lambda_cfl = r.num("mesh.lambda_cfl", 2.0);
    s.mesh.X = r.num("mesh.X", 10.0);
    s.mesh.T_final = r.num("mesh.T", 1.0);
    s.mesh.boundary_tol = r.num("mesh.boundary_tol", 1e-3);
    s.mesh.validate();
    s.n_strips = static_cast<long>(std::floor(s.mesh.T_final / s.mesh.tau() + 1e-9));

    // Sampling.
    const std::string kind = r.str("sampling.kind", "vdc");
    if (kind == "vdc")
        s.seq.kind = SamplingSequence::Kind::van_der_corput;
    else if (kind == "prng")
        s.seq.kind = SamplingSequence::Kind::seeded_prng;
    else
        throw config_error("sampling.kind must be 'vdc' or 'prng', got '" + kind + "'");
    s.seq.seed = static_cast<std::uint64_t>(r.integer("sampling.seed", 0));

    // Model.
    s.params.rho0 = r.num("model.rho0", 0.25);
    s.params.source_enabled = r.flag("model.source", true);
    s.params.theta_enabled = r.flag("model.theta", true);

    // Profile mass: default is the mass carried by the data (zero-mass
    // perturbation); non-decaying families default to a massless profile.
    const double auto_mass = std::isfinite(s.data.mass) ? s.data.mass : 0.0;
    s.prof = AsymptoticProfile{r.num("profile.mass", auto_mass)};

    // Diagnostics.
    s.diag.kappa = r.num("diag.kappa", 20.0);
    s.diag.record_every = static_cast<long>(r.integer("diag.record_every", 1));

    // Snapshots (comma-separated times; default = final time).
    const std::string snaps = r.str("output.snapshots", "");
    s.snapshot_times = detail::parse_double_list(snaps, "output.snapshots");
    if (s.snapshot_times.empty()) s.snapshot_times = {s.mesh.T_final};
    std::sort(s.snapshot_times.begin(), s.snapshot_times.end());
    for (const double t : s.snapshot_times)
        if (t < 0.0 || t > s.mesh.T_final + 1e-9)
            throw config_error("output.snapshots: time " + detail::fmt_g(t) +
                               " outside [0, mesh.T]");

    // Decay fitting.
    s.fit_t_lo = r.num("fit.t_lo", s.mesh.T_final / 4.0);
    s.fit_t_hi = r.num("fit.t_hi", s.mesh.T_final);
    s.envelope_power = r.num("fit.envelope_power", -0.25);

    // Oracle comparison.
    s.oracle_dx = r.num("oracle.dx", 1e-3);
    s.compare_X = r.num("oracle.compare_X", s.mesh.X);

    // Convergence sweep.
    s.convergence_h =
        detail::parse_double_list(r.str("convergence.h_list", "0.04,0.02,0.01"),
                                  "convergence.h_list");
    if (s.convergence_h.empty())
        throw config_error("convergence.h_list: empty list");

    // Single-fan subcommand.
    s.riemann_theta = r.num("riemann.theta", 0.0);
    s.riemann_span = r.num("riemann.span", 2.0);
    s.riemann_samples = static_cast<long>(r.integer("riemann.samples", 401));
    if (s.riemann_samples < 2) throw config_error("riemann.samples must be >= 2");

    r.reject_unknown();
    s.resolved = r.take();
    return s;
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

/// Comment block stamped into every artifact: version plus resolved config.
inline std::vector<std::string> config_comment_lines(const Config& resolved) {
    std::vector<std::string> out;
    out.push_back(std::string("version: ") + version_string);
    for (const auto& [k, v] : resolved.entries()) out.push_back("config: " + k + " = " + v);
    return out;
}

namespace detail {

inline void write_csv_file(const std::string& path, const std::vector<std::string>& comments,
                           const std::string& header,
                           const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open output file '" + path + "'");
    for (const std::string& c : comments) os << "# " << c << '\n';
    os << header << '\n';
    char buf[64];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << '\n';
    }
    if (!os) throw io_error("write failure on '" + path + "'");
}

inline std::string out_path(const std::string& dir, const std::string& name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory '" + dir + "': " + ec.message());
    return (fs::path(dir) / name).string();
}

} // namespace detail

/// Sampled primitive fields of one strip bottom: rows (x, v, u, theta).
inline std::vector<std::array<double, 4>> snapshot_rows(const GridSolution& sol,
                                                        const AsymptoticProfile& prof,
                                                        const ModelParams& params) {
    std::vector<std::array<double, 4>> rows;
    const double t = sol.t();
    for (int k = -sol.K; k <= sol.K; ++k) {
        if (!sol.active(k)) continue;
        const double x = sol.x_of(k);
        const double th = params.theta_enabled ? prof.theta(x, t) : 0.0;
        const double w1 = sol.hat_at(k).x0;
        const double w2 = sol.hat_at(k).x1 + (params.source_enabled ? sol.phi_at(k) : 0.0);
        rows.push_back({x, w1 + th, 1.0 + w2, th});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateResult {
    RunSetup setup;
    std::vector<DiagnosticsRecord> records;
    GridSolution final_state;
    std::vector<std::string> written;
};

inline SimulateResult run_simulate(const Config& user, const std::string& out_dir) {
    SimulateResult res;
    res.setup = resolve_run(user);
    RunSetup& s = res.setup;

    const auto W0 = shifted_data(s.data, s.prof);
    GridSolution sol = init_solution(W0, s.prof, s.mesh, s.params);

    DiagnosticsCollector collector(s.prof, s.params, s.mesh, s.diag);

    // Map snapshot times to strip indices; index n_strips = final state.
    std::vector<long> strip_of;
    for (const double t : s.snapshot_times) {
        long m = std::lround(t / s.mesh.tau());
        m = std::max(0L, std::min(m, s.n_strips));
        strip_of.push_back(m);
    }
    std::vector<std::vector<std::array<double, 4>>> snaps(strip_of.size());
    std::vector<double> snap_t(strip_of.size(), 0.0);

    const StripObserver obs = [&](const GridSolution& bottom, const SplitStates& split,
                                  const RiemannStepResult& step) {
        collector.observe(bottom, split, step);
        for (std::size_t i = 0; i < strip_of.size(); ++i)
            if (strip_of[i] == bottom.m) {
                snaps[i] = snapshot_rows(bottom, s.prof, s.params);
                snap_t[i] = bottom.t();
            }
    };

    res.final_state = advance(std::move(sol), s.seq, s.mesh, s.params, s.prof, s.n_strips, obs);
    for (std::size_t i = 0; i < strip_of.size(); ++i)
        if (strip_of[i] == res.final_state.m) {
            snaps[i] = snapshot_rows(res.final_state, s.prof, s.params);
            snap_t[i] = res.final_state.t();
        }

    res.records = collector.records();

    const auto comments = config_comment_lines(s.resolved);
    const std::string diag_path = detail::out_path(out_dir, "diagnostics.csv");
    {
        std::ofstream os(diag_path, std::ios::binary);
        if (!os) throw io_error("cannot open output file '" + diag_path + "'");
        write_diagnostics_csv(os, res.records, comments);
    }
    res.written.push_back(diag_path);

    for (std::size_t i = 0; i < snaps.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "snapshot_%03zu.csv", i);
        auto lines = comments;
        lines.push_back("snapshot time: " + detail::fmt_g(snap_t[i]));
        std::vector<std::vector<double>> rows;
        rows.reserve(snaps[i].size());
        for (const auto& a : snaps[i]) rows.push_back({a[0], a[1], a[2], a[3]});
        const std::string path = detail::out_path(out_dir, name);
        detail::write_csv_file(path, lines, "x,v,u,theta", rows);
        res.written.push_back(path);
    }
    return res;
}

// ---------------------------------------------------------------------------
// riemann
// ---------------------------------------------------------------------------

struct RiemannRunResult {
    RunSetup setup;
    WaveFan fan;
    std::string csv_path;
};

inline RiemannRunResult run_riemann(const Config& user, const std::string& out_dir) {
    RiemannRunResult res;
    res.setup = resolve_run(user);
    const RunSetup& s = res.setup;
    const InitialDataSpec& d = s.data_spec;
    if (!(d.left_u > 0.0) || !(d.right_u > 0.0))
        throw config_error("riemann: u must stay positive on both sides");

    const FrozenContext ctx{s.riemann_theta};
    const Vec2 WL{d.left_v - ctx.theta_val, d.left_u - 1.0};
    const Vec2 WR{d.right_v - ctx.theta_val, d.right_u - 1.0};
    res.fan = solve_riemann(WL, WR, ctx);

    auto comments = config_comment_lines(s.resolved);
    const WaveFan& fan = res.fan;
    comments.push_back("gamma_minus = " + detail::fmt_g(fan.gamma.x0));
    comments.push_back("gamma_plus = " + detail::fmt_g(fan.gamma.x1));
    comments.push_back("minus_wave: " + std::string(fan.waves[0].is_shock() ? "shock" : "rarefaction") +
                       " speeds [" + detail::fmt_g(fan.waves[0].speed_lo) + ", " +
                       detail::fmt_g(fan.waves[0].speed_hi) + "]");
    comments.push_back("plus_wave: " + std::string(fan.waves[1].is_shock() ? "shock" : "rarefaction") +
                       " speeds [" + detail::fmt_g(fan.waves[1].speed_lo) + ", " +
                       detail::fmt_g(fan.waves[1].speed_hi) + "]");
    comments.push_back("middle: v = " + detail::fmt_g(fan.middle.x0 + ctx.theta_val) +
                       ", u = " + detail::fmt_g(1.0 + fan.middle.x1));

    std::vector<std::vector<double>> rows;
    const long n = s.riemann_samples;
    for (long i = 0; i < n; ++i) {
        const double xi = -s.riemann_span +
                          2.0 * s.riemann_span * static_cast<double>(i) / static_cast<double>(n - 1);
        const Vec2 W = sample_fan(fan, xi);
        rows.push_back({xi, W.x0, W.x1, W.x0 + ctx.theta_val, 1.0 + W.x1});
    }
    res.csv_path = detail::out_path(out_dir, "riemann_fan.csv");
    detail::write_csv_file(res.csv_path, comments, "xi,w1,w2,v,u", rows);
    return res;
}

// ---------------------------------------------------------------------------
// decay
// ---------------------------------------------------------------------------

struct DecayResult {
    SimulateResult sim;
    FitResult tv_fit, l1_fit;
    EnvelopeCheck tv_env, l1_env;
    double sup_weighted_l2 = 0.0;
    double mass_drift_max = 0.0;
    std::string json_path;
};

inline DecayResult run_decay(const Config& user, const std::string& out_dir) {
    DecayResult res;
    res.sim = run_simulate(user, out_dir);
    const RunSetup& s = res.sim.setup;
    const auto& recs = res.sim.records;

    std::vector<double> t, tv, l1;
    t.reserve(recs.size());
    for (const auto& rec : recs) {
        t.push_back(rec.t);
        tv.push_back(rec.TV_total);
        l1.push_back(rec.L1_to_theta + rec.L1_u_to_1);
        res.sup_weighted_l2 = std::max(res.sup_weighted_l2, rec.weighted_L2);
        res.mass_drift_max =
            std::max(res.mass_drift_max, std::abs(rec.mass_w1 - recs.front().mass_w1));
    }

    if (t.empty()) throw config_error("decay: no diagnostics records to fit");
    // Records live at strip bottoms, so the last sample sits one strip below
    // T; clamp the requested window to the sampled range.
    const double w_lo = std::max(s.fit_t_lo, t.front());
    const double w_hi = std::min(s.fit_t_hi, t.back());
    res.tv_fit = fit_decay(t, tv, w_lo, w_hi);
    res.l1_fit = fit_decay(t, l1, w_lo, w_hi);
    res.tv_env = envelope_check(t, tv, s.envelope_power, w_lo, w_hi);
    res.l1_env = envelope_check(t, l1, s.envelope_power, w_lo, w_hi);

    nlohmann::json j;
    j["version"] = version_string;
    nlohmann::json jc;
    for (const auto& [k, v] : s.resolved.entries()) jc[k] = v;
    j["config"] = jc;
    j["data"] = {{"mass", s.data.mass},
                 {"delta", s.data.delta},
                 {"sigma2", s.data.sigma2},
                 {"sigma", std::sqrt(s.data.sigma2)},
                 {"decay_exponent", s.data.decay_exponent}};
    const auto fit_json = [](const FitResult& f, const EnvelopeCheck& e) {
        return nlohmann::json{{"exponent", f.exponent},
                              {"prefactor", f.prefactor},
                              {"residual", f.residual},
                              {"t_lo", f.t_lo},
                              {"t_hi", f.t_hi},
                              {"envelope_prefactor", e.prefactor},
                              {"envelope_violation_fraction", e.violation_fraction}};
    };
    j["tv"] = fit_json(res.tv_fit, res.tv_env);
    j["l1"] = fit_json(res.l1_fit, res.l1_env);
    j["envelope_power"] = s.envelope_power;
    j["sup_weighted_l2"] = res.sup_weighted_l2;
    j["mass_drift_max"] = res.mass_drift_max;
    j["n_records"] = recs.size();

    res.json_path = detail::out_path(out_dir, "decay_summary.json");
    std::ofstream os(res.json_path, std::ios::binary);
    if (!os) throw io_error("cannot open output file '" + res.json_path + "'");
    os << j.dump(2) << '\n';
    if (!os) throw io_error("write failure on '" + res.json_path + "'");
    return res;
}

// ---------------------------------------------------------------------------
// convergence
// ---------------------------------------------------------------------------

/// Primitive (v, u) at position x (nearest active mesh point).
inline Vec2 primitive_at(const GridSolution& sol, const AsymptoticProfile& prof,
                         const ModelParams& params, double x) {
    const double q = x / sol.h;
    long k = std::lround(q);
    if (((k + sol.m) & 1L) == 0) k += q >= static_cast<double>(k) ? 1 : -1;
    const long lim = sol.K - ((sol.K + sol.m) % 2 == 0 ? 1 : 0);
    k = std::max(-lim, std::min(k, lim));
    const double th = params.theta_enabled ? prof.theta(x, sol.t()) : 0.0;
    const Vec2 hat = sol.hat_at(static_cast<int>(k));
    const double w2 = hat.x1 + (params.source_enabled ? sol.phi_at(static_cast<int>(k)) : 0.0);
    return {hat.x0 + th, 1.0 + w2};
}

struct ConvergenceLevel {
    double h = 0.0;
    long n_strips = 0;
    double final_t = 0.0;
    double flux_mismatch_max = 0.0;
    double mass_drift = 0.0;
    double l1_self_diff = 0.0; // vs previous (coarser) level; NaN on the first
};

struct ConvergenceResult {
    RunSetup setup;
    std::vector<ConvergenceLevel> levels;
    std::string csv_path;
};

inline ConvergenceResult run_convergence(const Config& user, const std::string& out_dir) {
    ConvergenceResult res;
    res.setup = resolve_run(user);
    const RunSetup& s = res.setup;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    const auto W0 = shifted_data(s.data, s.prof);
    std::vector<GridSolution> finals;

    for (const double h : s.convergence_h) {
        MeshConfig mesh = s.mesh;
        mesh.h = h;
        mesh.validate();

        ConvergenceLevel lvl;
        lvl.h = h;
        lvl.n_strips = static_cast<long>(std::floor(mesh.T_final / mesh.tau() + 1e-9));

        GridSolution sol = init_solution(W0, s.prof, mesh, s.params);
        SplitStates split;
        compute_split_states(sol, s.prof, mesh, s.params, split);
        for (int k = -sol.K + 1; k <= sol.K - 1; ++k) {
            if (!sol.active(k)) continue;
            lvl.flux_mismatch_max =
                std::max(lvl.flux_mismatch_max, flux_mismatch(split, sol, s.prof, s.params, k));
        }

        double mass0 = 0.0;
        bool have_mass0 = false;
        double drift = 0.0;
        const StripObserver obs = [&](const GridSolution& bottom, const SplitStates&,
                                      const RiemannStepResult&) {
            const SnapshotIntegrals snap = snapshot_integrals(bottom, s.prof, s.params);
            if (!have_mass0) {
                mass0 = snap.mass_w1;
                have_mass0 = true;
            }
            drift = std::max(drift, std::abs(snap.mass_w1 - mass0));
        };
        GridSolution fin =
            advance(std::move(sol), s.seq, mesh, s.params, s.prof, lvl.n_strips, obs);
        const SnapshotIntegrals last = snapshot_integrals(fin, s.prof, s.params);
        if (have_mass0) drift = std::max(drift, std::abs(last.mass_w1 - mass0));
        lvl.mass_drift = drift;
        lvl.final_t = fin.t();

        lvl.l1_self_diff = nan;
        if (!finals.empty()) {
            const GridSolution& coarse = finals.back();
            const double win = std::min(s.compare_X, s.mesh.X - 2.0 * s.convergence_h.front());
            double acc = 0.0;
            for (int k = -coarse.K; k <= coarse.K; ++k) {
                if (!coarse.active(k)) continue;
                const double x = coarse.x_of(k);
                if (std::abs(x) > win) continue;
                const Vec2 pc = primitive_at(coarse, s.prof, s.params, x);
                const Vec2 pf = primitive_at(fin, s.prof, s.params, x);
                acc += 2.0 * coarse.h * (pf - pc).norm1();
            }
            lvl.l1_self_diff = acc;
        }
        finals.push_back(std::move(fin));
        res.levels.push_back(lvl);
    }

    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < res.levels.size(); ++i) {
        const ConvergenceLevel& lvl = res.levels[i];
        const double fr = i ? res.levels[i - 1].flux_mismatch_max / lvl.flux_mismatch_max : nan;
        const double dr = i ? res.levels[i - 1].mass_drift / lvl.mass_drift : nan;
        const double lr = i >= 2 ? res.levels[i - 1].l1_self_diff / lvl.l1_self_diff : nan;
        rows.push_back({lvl.h, static_cast<double>(lvl.n_strips), lvl.final_t,
                        lvl.flux_mismatch_max, fr, lvl.mass_drift, dr, lvl.l1_self_diff, lr});
    }
    res.csv_path = detail::out_path(out_dir, "convergence.csv");
    detail::write_csv_file(res.csv_path, config_comment_lines(s.resolved),
                           "h,n_strips,final_t,flux_mismatch_max,flux_ratio,mass_drift,"
                           "drift_ratio,l1_self_diff,l1_diff_ratio",
                           rows);
    return res;
}

// ---------------------------------------------------------------------------
// oracle-compare
// ---------------------------------------------------------------------------

struct OracleCompareRow {
    double t = 0.0;        // random-choice solution time
    double oracle_t = 0.0; // reference solution time
    double l1_w1 = 0.0, l1_w2 = 0.0, linf = 0.0;
};

struct OracleCompareResult {
    RunSetup setup;
    std::vector<OracleCompareRow> rows;
    std::string csv_path;
};

inline OracleCompareResult run_oracle_compare(const Config& user, const std::string& out_dir) {
    OracleCompareResult res;
    res.setup = resolve_run(user);
    const RunSetup& s = res.setup;

    const auto W0 = shifted_data(s.data, s.prof);
    GridSolution sol = init_solution(W0, s.prof, s.mesh, s.params);

    for (const double target : s.snapshot_times) {
        long m = std::lround(target / s.mesh.tau());
        m = std::max(0L, std::min(m, s.n_strips));
        if (m > sol.m)
            sol = advance(std::move(sol), s.seq, s.mesh, s.params, s.prof, m - sol.m);

        FVConfig fv;
        fv.x_lo = -s.mesh.X;
        fv.x_hi = s.mesh.X;
        fv.dx = s.oracle_dx;
        fv.t_end = sol.t();
        fv.rho0 = s.params.rho0;
        if (fv.t_end > 0.0) {
            // t_end must be an integer number of steps; shrink dt below the
            // CFL default to make it divide exactly.
            const double steps = std::ceil(fv.t_end / (0.2 * fv.dx) - 1e-12);
            fv.dt = fv.t_end / steps;
        }
        AsymptoticProfile prof = s.params.theta_enabled ? s.prof : AsymptoticProfile{0.0};
        const FVSolution ref = fv_solve(W0, prof, fv, s.params.source_enabled);

        OracleCompareRow row;
        row.t = sol.t();
        row.oracle_t = ref.t;
        for (int k = -sol.K; k <= sol.K; ++k) {
            if (!sol.active(k)) continue;
            const double x = sol.x_of(k);
            if (std::abs(x) > s.compare_X) continue;
            const Vec2 hat = sol.hat_at(k);
            const Vec2 g{hat.x0,
                         hat.x1 + (s.params.source_enabled ? sol.phi_at(k) : 0.0)};
            std::size_t i = static_cast<std::size_t>(
                std::max(0.0, std::min((x - fv.x_lo) / fv.dx,
                                       static_cast<double>(ref.W.size() - 1))));
            const Vec2 diff = g - ref.W[i];
            row.l1_w1 += 2.0 * sol.h * std::abs(diff.x0);
            row.l1_w2 += 2.0 * sol.h * std::abs(diff.x1);
            row.linf = std::max(row.linf, diff.norm_inf());
        }
        res.rows.push_back(row);
    }

    std::vector<std::vector<double>> rows;
    for (const auto& r : res.rows)
        rows.push_back({r.t, r.oracle_t, r.l1_w1, r.l1_w2, r.l1_w1 + r.l1_w2, r.linf});
    res.csv_path = detail::out_path(out_dir, "oracle_compare.csv");
    detail::write_csv_file(res.csv_path, config_comment_lines(s.resolved),
                           "t,oracle_t,l1_w1,l1_w2,l1_total,linf", rows);
    return res;
}

} // namespace balaw
