#pragma once

// Diagnostics for Glimm runs: total variation and its jump/wave split, the
// wave interaction potential and Glimm functional, weighted L2 energies,
// entropy budget, masses, L1 distances to the asymptotic profile, the
// discrete potential Psi, and decay-exponent fitting.
//
// All spatial integrals use the midpoint rule over the active mesh cells
// (width 2h); integrals in time accumulate strip-by-strip with the
// left-endpoint rule. Truncation at the domain edge +-X is benign as long as
// the run keeps its boundary guard: the fields sit at equilibrium there and
// only the analytic profile tails are lost (see weighted_tail_bound).

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "balaw/errors.hpp"
#include "balaw/glimm.hpp"
#include "balaw/linalg.hpp"
#include "balaw/model.hpp"
#include "balaw/profile.hpp"
#include "balaw/riemann.hpp"

namespace balaw {

// ---------------------------------------------------------------------------
// Per-strip record
// ---------------------------------------------------------------------------

struct DiagnosticsRecord {
    double t = 0.0;
    double TV_total = 0.0;     // TV(v) + TV(u) of the sampled primitive fields
    double K_m = 0.0;          // splitting-jump part of the hatted strip TV
    double L_m = 0.0;          // elementary-wave part (sum of wave strengths)
    double M_m = 0.0;          // interaction potential over approaching pairs
    double N_m = 0.0;          // Glimm functional L_m + kappa * M_m
    double mass_v = 0.0;       // integral of v = integral of w1 + profile mass
    double mass_w1 = 0.0;      // integral of w1 (zero-mass tracking)
    double L1_to_theta = 0.0;  // integral |v - theta|
    double L1_u_to_1 = 0.0;    // integral |u - 1|
    double weighted_L2 = 0.0;  // integral (x^2+t+1)(w1^2 + w2^2)
    double dissipation_accum = 0.0;  // running integral of (x^2+s+1)(w2+theta_x)^2
    double Y_accum = 0.0;            // running integral of w1^2
    double entropy_total = 0.0;      // integral eta(v, u)
    double entropy_production_step = 0.0;  // tau * integral of the entropy
                                           // dissipation over this strip
    double entropy_slack = 0.0;  // entropy_total - entropy_total(0) + the
                                 // accumulated production; <= 0 up to O(h)
    double Delta_m = 0.0;        // sum |eps - alpha - beta| vs the prior strip
    double J_m = 0.0;            // time integral of the hatted TV over the
                                 // strip starting at t: tau * (K_m + L_m)
};

// ---------------------------------------------------------------------------
// Total variation
// ---------------------------------------------------------------------------

/// Plain total variation of a piecewise-constant state sequence: the sum of
/// the 1-norms of the consecutive jumps.
inline double total_variation(const std::vector<Vec2>& states) {
    double tv = 0.0;
    for (std::size_t i = 1; i < states.size(); ++i) tv += (states[i] - states[i - 1]).norm1();
    return tv;
}

/// Jump/wave split of the hatted total variation of one strip.
struct StripTV {
    double K = 0.0; // 1-norm jumps between the left/right split states
    double L = 0.0; // wave strengths |gamma| of the elementary waves

    double total() const { return K + L; }
};

/// K_m: the hatted jumps introduced by the splitting step at the state
/// points (k+m odd) of the strip.
inline double splitting_jump_sum(const SplitStates& split) {
    double K_m = 0.0;
    for (int k = -split.K; k <= split.K; ++k) {
        if (((k + split.m) & 1) == 0) continue;
        const std::size_t j = split.idx(k);
        K_m += (split.WhatR[j] - split.WhatL[j]).norm1();
    }
    return K_m;
}

/// L_m: the sum of elementary-wave strengths of the fans of the strip (fans
/// sit at k+m even; strength = |amplitude|).
inline double wave_strength_sum(const std::vector<WaveFan>& fans, int K, int m) {
    double L_m = 0.0;
    for (int k = -K; k <= K; ++k) {
        if (((k + m) & 1) != 0) continue;
        const WaveFan& fan = fans[static_cast<std::size_t>(k + K)];
        L_m += std::abs(fan.gamma.x0) + std::abs(fan.gamma.x1);
    }
    return L_m;
}

/// Independent left-to-right walk over the strip representation, measuring
/// splitting jumps by the 1-norm and elementary waves by their strength.
/// Equals splitting_jump_sum + wave_strength_sum up to summation order.
inline StripTV strip_total_variation(const SplitStates& split, const std::vector<WaveFan>& fans) {
    StripTV tv;
    for (int k = -split.K; k <= split.K; ++k) {
        const std::size_t j = split.idx(k);
        if (((k + split.m) & 1) != 0) {
            tv.K += (split.WhatR[j] - split.WhatL[j]).norm1();
        } else {
            tv.L += std::abs(fans[j].gamma.x0) + std::abs(fans[j].gamma.x1);
        }
    }
    return tv;
}

// ---------------------------------------------------------------------------
// Interaction potential and Glimm functional
// ---------------------------------------------------------------------------

/// M_m = sum |gamma_i| |gamma_j| over approaching pairs of elementary waves
/// emanating from the mesh points of one time line. A pair with wave i to
/// the left of wave j approaches iff i is a plus wave and j a minus wave, or
/// both belong to the same family and at least one is a shock. The two waves
/// of a single fan (minus left of plus) never approach. Computed in one pass
/// with prefix sums of the strengths seen so far.
inline double interaction_potential(const std::vector<WaveFan>& fans, int K, int m) {
    double M_m = 0.0;
    double plus_all = 0.0, minus_all = 0.0;   // strengths of earlier waves
    double plus_shock = 0.0, minus_shock = 0.0;
    for (int k = -K; k <= K; ++k) {
        if (((k + m) & 1) != 0) continue;
        const WaveFan& fan = fans[static_cast<std::size_t>(k + K)];
        const double gm = std::abs(fan.gamma.x0);
        const double gp = std::abs(fan.gamma.x1);
        if (gm > 0.0) {
            M_m += gm * plus_all; // plus left of minus: always approaching
            M_m += gm * (fan.waves[0].is_shock() ? minus_all : minus_shock);
        }
        if (gp > 0.0) {
            M_m += gp * (fan.waves[1].is_shock() ? plus_all : plus_shock);
        }
        minus_all += gm;
        plus_all += gp;
        if (fan.waves[0].is_shock()) minus_shock += gm;
        if (fan.waves[1].is_shock()) plus_shock += gp;
    }
    return M_m;
}

/// N_m = L_m + kappa * M_m.
inline double glimm_functional(double L_m, double M_m, double kappa) {
    if (!(kappa > 0.0)) throw config_error("glimm_functional: kappa must be positive");
    return L_m + kappa * M_m;
}

// ---------------------------------------------------------------------------
// Interaction deficit Delta_m
// ---------------------------------------------------------------------------

namespace detail {

/// Signed amplitude of the portion of wave w lying on one side of the
/// sampling ray xi (right_side: speeds > xi). A rarefaction straddling the
/// ray splits at the curve parameter where its characteristic speed is xi.
inline double wave_portion(const ElementaryWave& w, double xi, const FrozenContext& ctx,
                           bool right_side) {
    if (w.amplitude == 0.0) return 0.0;
    if (w.speed_lo > xi) return right_side ? w.amplitude : 0.0;
    if (w.speed_hi <= xi) return right_side ? 0.0 : w.amplitude;
    const double g = rarefaction_parameter(w, xi, ctx);
    return right_side ? w.amplitude - g : g;
}

} // namespace detail

/// Delta_m = sum over the fans of the current strip (amplitudes eps at mesh
/// points (kh, m tau)) of |eps - alpha - beta|_1, where alpha and beta are
/// the portions of the two neighbor fans of the previous strip that entered
/// the diamond at kh across the sampling ray xi = zeta_m * lambda_cfl.
inline double interaction_deficit(const std::vector<WaveFan>& prev_fans, double prev_zeta,
                                  const std::vector<WaveFan>& cur_fans, int K, int m_cur,
                                  double lambda_cfl) {
    const double xi = prev_zeta * lambda_cfl;
    double Delta_m = 0.0;
    for (int k = -K; k <= K; ++k) {
        if (((k + m_cur) & 1) != 0) continue;
        const WaveFan& eps = cur_fans[static_cast<std::size_t>(k + K)];
        Vec2 in{0.0, 0.0}; // alpha + beta by family
        if (k - 1 >= -K) {
            const WaveFan& fl = prev_fans[static_cast<std::size_t>(k - 1 + K)];
            in.x0 += detail::wave_portion(fl.waves[0], xi, fl.ctx, /*right_side=*/true);
            in.x1 += detail::wave_portion(fl.waves[1], xi, fl.ctx, /*right_side=*/true);
        }
        if (k + 1 <= K) {
            const WaveFan& fr = prev_fans[static_cast<std::size_t>(k + 1 + K)];
            in.x0 += detail::wave_portion(fr.waves[0], xi, fr.ctx, /*right_side=*/false);
            in.x1 += detail::wave_portion(fr.waves[1], xi, fr.ctx, /*right_side=*/false);
        }
        Delta_m += (eps.gamma - in).norm1();
    }
    return Delta_m;
}

// ---------------------------------------------------------------------------
// Snapshot integrals
// ---------------------------------------------------------------------------

struct SnapshotIntegrals {
    double mass_w1 = 0.0;              // integral w1
    double l1_w1 = 0.0;                // integral |w1|
    double l1_w2 = 0.0;                // integral |w2|
    double weighted_l2 = 0.0;          // integral (x^2+t+1)(w1^2+w2^2)
    double dissipation_integrand = 0.0;// integral (x^2+t+1)(w2+theta_x)^2
    double y_integrand = 0.0;          // integral w1^2
    double entropy = 0.0;              // integral eta(v, u)
    double production_integrand = 0.0; // integral ut (1+ut) ln(1+ut)
    double tv_primitive = 0.0;         // TV(v) + TV(u) of the sampled grid
};

/// One pass over the active cells of a grid snapshot. The quadrature is the
/// midpoint rule with cell width 2h; the primitive fields are reconstructed
/// as v = w1 + theta and u = 1 + w2 with w2 = hat w2 + phi.
inline SnapshotIntegrals snapshot_integrals(const GridSolution& sol,
                                            const AsymptoticProfile& prof,
                                            const ModelParams& params) {
    const AsymptoticProfile profile = params.theta_enabled ? prof : AsymptoticProfile{0.0};
    const double t = sol.t();
    const double cell = 2.0 * sol.h;
    SnapshotIntegrals out;
    bool have_prev = false;
    double prev_v = 0.0, prev_u = 0.0;
    for (int k = -sol.K; k <= sol.K; ++k) {
        if (!sol.active(k)) continue;
        const double x = sol.x_of(k);
        const auto th = profile.derivs(x, t);
        const double w1 = sol.hat_at(k).x0;
        const double w2 = sol.hat_at(k).x1 + sol.phi_at(k);
        const double weight = x * x + t + 1.0;

        out.mass_w1 += cell * w1;
        out.l1_w1 += cell * std::abs(w1);
        out.l1_w2 += cell * std::abs(w2);
        out.weighted_l2 += cell * weight * (w1 * w1 + w2 * w2);
        const double r = w2 + th.theta_x;
        out.dissipation_integrand += cell * weight * r * r;
        out.y_integrand += cell * w1 * w1;

        const double v = w1 + th.theta;
        const EntropyTriple e = entropy_pair(v, w2);
        out.entropy += cell * e.eta;
        out.production_integrand += cell * e.dissipation;

        const double u = 1.0 + w2;
        if (have_prev) out.tv_primitive += std::abs(v - prev_v) + std::abs(u - prev_u);
        prev_v = v;
        prev_u = u;
        have_prev = true;
    }
    return out;
}

/// Numeric bound on the weighted tail lost to the domain truncation:
/// 2 * integral over |x| > X of (x^2+t+1) theta_x^2 dx (the fields are at
/// equilibrium there, so only the profile contributes). Midpoint rule over
/// [X, X + 20 sqrt(t+1)], beyond which the Gaussian tail is negligible.
inline double weighted_tail_bound(const AsymptoticProfile& prof, double X, double t) {
    const int n = 400;
    const double span = 20.0 * std::sqrt(t + 1.0);
    const double dx = span / n;
    double tail = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = X + (i + 0.5) * dx;
        const double gx = prof.theta_x(x, t);
        tail += dx * (x * x + t + 1.0) * gx * gx;
    }
    return 2.0 * tail;
}

// ---------------------------------------------------------------------------
// Discrete potential Psi
// ---------------------------------------------------------------------------

/// Psi(kh) = integral of w1 up to kh at every mesh point, by the same
/// midpoint rule as the potential phi (Psi = 2 phi when the source is on;
/// computed from the w1 field directly so it exists in every mode).
inline std::vector<double> potential_psi(const GridSolution& sol) {
    std::vector<double> psi(static_cast<std::size_t>(2 * sol.K + 1), 0.0);
    double mu = 0.0;
    for (int k = -sol.K; k <= sol.K; ++k) {
        if (sol.active(k)) {
            const double w1 = sol.hat_at(k).x0;
            psi[static_cast<std::size_t>(k + sol.K)] = mu + sol.h * w1;
            mu += 2.0 * sol.h * w1;
        } else {
            psi[static_cast<std::size_t>(k + sol.K)] = mu;
        }
    }
    return psi;
}

/// |Psi(X)|: the zero-mass residual of the w1 field.
inline double psi_tail_residual(const GridSolution& sol) {
    double mu = 0.0;
    for (int k = -sol.K; k <= sol.K; ++k)
        if (sol.active(k)) mu += 2.0 * sol.h * sol.hat_at(k).x0;
    return std::abs(mu);
}

// ---------------------------------------------------------------------------
// Entropy budget
// ---------------------------------------------------------------------------

/// slack = eta_total(t2) - eta_total(t1) + accumulated dissipation over
/// (t1, t2). Admissible solutions satisfy slack <= 0; the scheme adds
/// splitting and sampling error of size O(h).
inline double entropy_budget(double entropy_t1, double entropy_t2, double dissipation_t1_t2) {
    return entropy_t2 - entropy_t1 + dissipation_t1_t2;
}

// ---------------------------------------------------------------------------
// Decay fitting
// ---------------------------------------------------------------------------

struct FitResult {
    double exponent = 0.0;  // power law: y ~ prefactor (1+t)^exponent;
                            // exponential: y ~ prefactor e^(-exponent t)
    double prefactor = 0.0;
    double residual = 0.0;  // root-mean-square residual in log y
    double t_lo = 0.0;
    double t_hi = 0.0;
};

namespace detail {

/// Least squares of log y against the abscissa produced by axis(t) over the
/// window [t_lo, t_hi].
template <class Axis>
inline FitResult fit_loglinear(const std::vector<double>& t, const std::vector<double>& y,
                               double t_lo, double t_hi, Axis axis) {
    if (t.size() != y.size()) throw config_error("fit_decay: size mismatch");
    const double pad = 1e-9 * (1.0 + std::abs(t_hi));
    if (t.empty() || t_lo < t.front() - pad || t_hi > t.back() + pad || !(t_lo < t_hi))
        throw config_error("fit_decay: window outside the sampled range");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        if (!(y[i] > 0.0))
            throw solver_error("fit_decay: nonpositive sample in the fit window");
        const double X = axis(t[i]);
        const double Y = std::log(y[i]);
        sx += X;
        sy += Y;
        sxx += X * X;
        sxy += X * Y;
        ++n;
    }
    if (n < 20) throw config_error("fit_decay: fewer than 20 samples in the window");
    const double den = n * sxx - sx * sx;
    if (!(std::abs(den) > 0.0)) throw solver_error("fit_decay: degenerate abscissa");
    const double slope = (n * sxy - sx * sy) / den;
    const double intercept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        const double r = std::log(y[i]) - (intercept + slope * axis(t[i]));
        ss += r * r;
    }
    FitResult out;
    out.exponent = slope;
    out.prefactor = std::exp(intercept);
    out.residual = std::sqrt(ss / static_cast<double>(n));
    out.t_lo = t_lo;
    out.t_hi = t_hi;
    return out;
}

} // namespace detail

/// Power-law fit y ~ prefactor (1+t)^exponent over [t_lo, t_hi].
inline FitResult fit_decay(const std::vector<double>& t, const std::vector<double>& y,
                           double t_lo, double t_hi) {
    return detail::fit_loglinear(t, y, t_lo, t_hi,
                                 [](double s) { return std::log(1.0 + s); });
}

/// Exponential fit y ~ prefactor e^(-exponent t) over [t_lo, t_hi]
/// (exponent = nu > 0 for a decaying series).
inline FitResult fit_exponential(const std::vector<double>& t, const std::vector<double>& y,
                                 double t_lo, double t_hi) {
    FitResult out = detail::fit_loglinear(t, y, t_lo, t_hi, [](double s) { return s; });
    out.exponent = -out.exponent;
    return out;
}

/// Two-term decay model b sigma (1+t)^(-1/4) + b delta e^(-nu t): the power
/// tail is fitted on [T/4, T] where it dominates, the exponential head on
/// [0, min(10, T/4)].
struct DecayFit {
    FitResult power_tail;
    FitResult exp_head;
};

inline DecayFit fit_two_term(const std::vector<double>& t, const std::vector<double>& y,
                             double T) {
    DecayFit out;
    out.power_tail = fit_decay(t, y, T / 4.0, T);
    out.exp_head = fit_exponential(t, y, 0.0, std::min(10.0, T / 4.0));
    return out;
}

/// Envelope check against prefactor (1+t)^power: the prefactor is anchored
/// as the max of y (1+t)^(-power) over the first anchor_fraction of the
/// window; the violation fraction counts later samples exceeding the
/// envelope by more than a relative rounding slack.
struct EnvelopeCheck {
    double prefactor = 0.0;
    double violation_fraction = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
};

inline EnvelopeCheck envelope_check(const std::vector<double>& t, const std::vector<double>& y,
                                    double power, double t_lo, double t_hi,
                                    double anchor_fraction = 0.1) {
    if (t.size() != y.size()) throw config_error("envelope_check: size mismatch");
    if (!(t_lo < t_hi) || !(anchor_fraction > 0.0 && anchor_fraction < 1.0))
        throw config_error("envelope_check: bad window or anchor fraction");
    const double t_anchor = t_lo + anchor_fraction * (t_hi - t_lo);
    EnvelopeCheck out;
    out.t_lo = t_lo;
    out.t_hi = t_hi;
    long checked = 0, violated = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        if (t[i] <= t_anchor) {
            out.prefactor = std::max(out.prefactor, y[i] * std::pow(1.0 + t[i], -power));
        } else {
            ++checked;
            if (y[i] > out.prefactor * std::pow(1.0 + t[i], power) * (1.0 + 1e-12)) ++violated;
        }
    }
    if (checked == 0) throw config_error("envelope_check: no samples beyond the anchor");
    out.violation_fraction = static_cast<double>(violated) / static_cast<double>(checked);
    return out;
}

// ---------------------------------------------------------------------------
// Collector
// ---------------------------------------------------------------------------

struct DiagnosticsOptions {
    double kappa = 20.0;   // Glimm-functional weight
    long record_every = 1; // keep every n-th strip record (accumulators run
                           // every strip regardless)
};

/// Strip observer assembling one DiagnosticsRecord per observed strip. Plug
/// into advance() via observer().
class DiagnosticsCollector {
  public:
    DiagnosticsCollector(AsymptoticProfile prof, ModelParams params, MeshConfig mesh,
                         DiagnosticsOptions opt = {})
        : prof_(prof), params_(params), mesh_(mesh), opt_(opt) {
        if (!(opt_.kappa > 0.0)) throw config_error("diagnostics: kappa must be positive");
        if (opt_.record_every < 1) throw config_error("diagnostics: record_every must be >= 1");
    }

    void observe(const GridSolution& bottom, const SplitStates& split,
                 const RiemannStepResult& step) {
        const SnapshotIntegrals snap = snapshot_integrals(bottom, prof_, params_);
        // The entropy production d comes from the logistic source; without
        // the source the budget is pure conservation plus shock dissipation.
        const double production = params_.source_enabled ? snap.production_integrand : 0.0;
        if (!have_entropy0_) {
            entropy0_ = snap.entropy;
            have_entropy0_ = true;
        }

        if (bottom.m % opt_.record_every == 0) {
            DiagnosticsRecord rec;
            rec.t = bottom.t();
            rec.TV_total = snap.tv_primitive;
            rec.K_m = splitting_jump_sum(split);
            rec.L_m = wave_strength_sum(step.fans, bottom.K, bottom.m);
            rec.M_m = interaction_potential(step.fans, bottom.K, bottom.m);
            rec.N_m = glimm_functional(rec.L_m, rec.M_m, opt_.kappa);
            rec.mass_w1 = snap.mass_w1;
            rec.mass_v = snap.mass_w1 + (params_.theta_enabled ? prof_.mass : 0.0);
            rec.L1_to_theta = snap.l1_w1;
            rec.L1_u_to_1 = snap.l1_w2;
            rec.weighted_L2 = snap.weighted_l2;
            rec.dissipation_accum = dissipation_accum_;
            rec.Y_accum = y_accum_;
            rec.entropy_total = snap.entropy;
            rec.entropy_production_step = bottom.tau * production;
            rec.entropy_slack = entropy_budget(entropy0_, snap.entropy, production_accum_);
            rec.Delta_m = have_prev_
                              ? interaction_deficit(prev_fans_, prev_zeta_, step.fans,
                                                    bottom.K, bottom.m, mesh_.lambda_cfl)
                              : 0.0;
            rec.J_m = bottom.tau * (rec.K_m + rec.L_m);
            records_.push_back(rec);
        }

        dissipation_accum_ += bottom.tau * snap.dissipation_integrand;
        y_accum_ += bottom.tau * snap.y_integrand;
        production_accum_ += bottom.tau * production;
        prev_fans_ = step.fans; // assignment reuses the buffer capacity
        prev_zeta_ = step.zeta;
        have_prev_ = true;
    }

    StripObserver observer() {
        return [this](const GridSolution& bottom, const SplitStates& split,
                      const RiemannStepResult& step) { observe(bottom, split, step); };
    }

    const std::vector<DiagnosticsRecord>& records() const { return records_; }

  private:
    AsymptoticProfile prof_;
    ModelParams params_;
    MeshConfig mesh_;
    DiagnosticsOptions opt_;
    std::vector<DiagnosticsRecord> records_;
    std::vector<WaveFan> prev_fans_;
    double prev_zeta_ = 0.0;
    bool have_prev_ = false;
    double entropy0_ = 0.0;
    bool have_entropy0_ = false;
    double dissipation_accum_ = 0.0;
    double y_accum_ = 0.0;
    double production_accum_ = 0.0;
};

// ---------------------------------------------------------------------------
// CSV output
// ---------------------------------------------------------------------------

inline const char* diagnostics_csv_header() {
    return "t,TV,K,L,Mint,N,mass_v,mass_w1,L1_v_theta,L1_u,wL2,diss,Y,eta,slack";
}

/// Stable-order CSV of the records; comment lines (prefixed "# ") precede
/// the header. Values are written with %.17g so reruns compare bytewise.
inline void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& recs,
                                  const std::vector<std::string>& comments = {}) {
    for (const std::string& line : comments) os << "# " << line << '\n';
    os << diagnostics_csv_header() << '\n';
    char buf[512];
    for (const DiagnosticsRecord& r : recs) {
        std::snprintf(buf, sizeof buf,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                      "%.17g,%.17g,%.17g,%.17g",
                      r.t, r.TV_total, r.K_m, r.L_m, r.M_m, r.N_m, r.mass_v, r.mass_w1,
                      r.L1_to_theta, r.L1_u_to_1, r.weighted_L2, r.dissipation_accum, r.Y_accum,
                      r.entropy_total, r.entropy_slack);
        os << buf << '\n';
    }
    if (!os) throw io_error("write_diagnostics_csv: stream failure");
}

} // namespace balaw
