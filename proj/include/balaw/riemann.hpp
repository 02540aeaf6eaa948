// Copyright 2026 The balaw Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
#pragma once

#include <cmath>
#include <string>

#include "balaw/errors.hpp"
#include "balaw/linalg.hpp"
#include "balaw/model.hpp"

// Exact Riemann solver for the frozen-coefficient homogeneous system
//   U_t + F(U)_x = 0,  F(U) = (u2, (u1 + theta)(1 + u2)),
// with theta frozen at a constant. Both characteristic families are genuinely
// nonlinear; every fan consists of one minus-family and one plus-family wave
// (shock or centered rarefaction), separated by a middle state.
//
// Wave curves are parametrized by the change of the first state component:
// the rarefaction branch is the integral curve of r_pm = (1, lambda_pm)^t and
// the shock branch solves Rankine-Hugoniot in closed form, so the two join C2
// at amplitude zero and the curve tangent at the base state is exactly r_pm.
// Signed amplitude: negative = shock, positive = rarefaction.

namespace balaw {

struct FrozenContext {
    double theta_val = 0.0;
};

enum class Family { minus, plus };

namespace detail {

inline constexpr double curve_ode_step = 1e-3; // amplitude step of the RK4 integrator
inline constexpr double curve_a_bound = 1.2;   // admissible |u1 + theta| along curves
inline constexpr double curve_b_floor = 0.04;  // admissible 1 + u2 along curves

inline void check_curve_state(double a, double b) {
    if (!(b > curve_b_floor))
        throw guard_error("wave curve: vacuum-like degeneracy, 1+u2 = " + std::to_string(b));
    if (!(std::abs(a) < curve_a_bound))
        throw guard_error("wave curve: left admissible region, u1+theta = " + std::to_string(a));
}

inline double lambda_of(Family f, double a, double b) {
    const double d = std::sqrt(a * a + 4.0 * b);
    return f == Family::minus ? 0.5 * (a - d) : 0.5 * (a + d);
}

/// One RK4 step of db/da = lambda_f(a, b) of size s starting at (a, b).
inline double rarefaction_rk4_step(Family f, double a, double b, double s) {
    const double k1 = lambda_of(f, a, b);
    const double k2 = lambda_of(f, a + 0.5 * s, b + 0.5 * s * k1);
    const double k3 = lambda_of(f, a + 0.5 * s, b + 0.5 * s * k2);
    const double k4 = lambda_of(f, a + s, b + s * k3);
    return b + s / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Follow the rarefaction branch from (a0, b0) over a signed amplitude span
/// gamma (positive span moves right along the curve). Returns (a, b) at the end.
inline void rarefaction_point(Family f, double& a, double& b, double gamma) {
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(gamma) / curve_ode_step)));
    const double s = gamma / n;
    for (int i = 0; i < n; ++i) {
        b = rarefaction_rk4_step(f, a, b, s);
        a += s;
        check_curve_state(a, b);
    }
}

/// Shock branch through the anchor (a0, b0): the state a distance gamma < 0
/// along the curve (forward = anchor is the left state, backward = right).
/// Returns the shock speed and fills (a, b) of the far state. Closed form:
/// Rankine-Hugoniot gives s^2 = s a_far + b_anchor and b_far = b_anchor + s da.
inline double shock_point(Family f, double a0, double b0, double gamma, bool forward, double& a,
                          double& b) {
    a = a0 + (forward ? gamma : -gamma);
    const double disc = a * a + 4.0 * b0;
    if (!(disc > 0.0)) throw guard_error("shock branch: lost hyperbolicity");
    const double sgn = f == Family::minus ? -1.0 : 1.0;
    const double s = 0.5 * (a + sgn * std::sqrt(disc));
    b = b0 + (forward ? s * gamma : -s * gamma);
    check_curve_state(a, b);
    return s;
}

struct CurveEnd {
    Vec2 state;
    double speed_lo = 0.0; // shock speed, or lambda at the slow edge
    double speed_hi = 0.0;
};

/// End state of the wave of family f with signed amplitude gamma, starting
/// from the left state (forward = true) or the right state (forward = false).
inline CurveEnd wave_end(Family f, Vec2 from, double gamma, const FrozenContext& ctx,
                         bool forward) {
    double a = from.x0 + ctx.theta_val;
    double b = 1.0 + from.x1;
    check_curve_state(a, b);
    if (gamma == 0.0) {
        const double lam = lambda_of(f, a, b);
        return {from, lam, lam};
    }
    CurveEnd out;
    if (gamma >= 0.0) {
        const double lam_from = lambda_of(f, a, b);
        rarefaction_point(f, a, b, forward ? gamma : -gamma);
        const double lam_to = lambda_of(f, a, b);
        out.speed_lo = forward ? lam_from : lam_to;
        out.speed_hi = forward ? lam_to : lam_from;
    } else {
        const double s = shock_point(f, a, b, gamma, forward, a, b);
        out.speed_lo = out.speed_hi = s;
    }
    out.state = {a - ctx.theta_val, b - 1.0};
    return out;
}

} // namespace detail

/// Right end-state of the fan with left state U_L and amplitudes gamma.
inline Vec2 forward_wave_curve(Vec2 U_L, Vec2 gamma, const FrozenContext& ctx) {
    const Vec2 mid = detail::wave_end(Family::minus, U_L, gamma.x0, ctx, true).state;
    return detail::wave_end(Family::plus, mid, gamma.x1, ctx, true).state;
}

/// Left end-state of the fan with right state U_R and amplitudes gamma.
inline Vec2 backward_wave_curve(Vec2 U_R, Vec2 gamma, const FrozenContext& ctx) {
    const Vec2 mid = detail::wave_end(Family::plus, U_R, gamma.x1, ctx, false).state;
    return detail::wave_end(Family::minus, mid, gamma.x0, ctx, false).state;
}

/// Amplitude vector gamma with P(U_L, gamma) = U_R.
///
/// The first component is additive along both wave curves, so
/// gamma_minus + gamma_plus equals u1R - u1L exactly and the middle-state
/// solve reduces to a safeguarded scalar Newton iteration in gamma_minus.
inline Vec2 amplitude_omega(Vec2 U_L, Vec2 U_R, const FrozenContext& ctx) {
    if (U_L == U_R) return {0.0, 0.0};
    const double du1 = U_R.x0 - U_L.x0;

    const auto f = [&](double gm) {
        const Vec2 mid = detail::wave_end(Family::minus, U_L, gm, ctx, true).state;
        return detail::wave_end(Family::plus, mid, du1 - gm, ctx, true).state.x1 - U_R.x1;
    };

    // Initial guess from the linearization gamma ~= R^{-1}(U_L) (U_R - U_L).
    const Vec2 guess = eigenvector_matrix_inverse(U_L, ctx.theta_val) * (U_R - U_L);
    double gm = guess.x0;
    const double span = std::abs(du1) + std::abs(U_R.x1 - U_L.x1) + 1e-3;
    double lo = gm - span, hi = gm + span; // f is decreasing: want f(lo) > 0 > f(hi)
    bool have_lo = false, have_hi = false;
    double f_gm = f(gm);
    const double tol = 1e-13 * (1.0 + std::abs(U_R.x1));

    for (int it = 0; it < 50; ++it) {
        if (std::abs(f_gm) <= tol) return {gm, du1 - gm};
        if (f_gm > 0.0) {
            lo = gm;
            have_lo = true;
        } else {
            hi = gm;
            have_hi = true;
        }
        // Newton step with a finite-difference slope, bisection as safeguard.
        const double step = 1e-7 * (1.0 + std::abs(gm));
        const double slope = (f(gm + step) - f_gm) / step;
        double next = slope != 0.0 ? gm - f_gm / slope : gm;
        if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
            if (have_lo && have_hi)
                next = 0.5 * (lo + hi);
            else
                next = f_gm > 0.0 ? gm + span : gm - span;
        }
        gm = next;
        f_gm = f(gm);
    }
    throw solver_error("amplitude_omega: no convergence after 50 iterations; U_L = (" +
                       std::to_string(U_L.x0) + ", " + std::to_string(U_L.x1) + "), U_R = (" +
                       std::to_string(U_R.x0) + ", " + std::to_string(U_R.x1) +
                       "), residual = " + std::to_string(f_gm));
}

/// H(U, Z) = Omega(U, U + Z).
inline Vec2 amplitude_H(Vec2 U, Vec2 Z, const FrozenContext& ctx) {
    return amplitude_omega(U, U + Z, ctx);
}

/// One elementary wave of a fan.
struct ElementaryWave {
    Family family = Family::minus;
    double amplitude = 0.0; // negative = shock, positive = rarefaction
    Vec2 left, right;
    double speed_lo = 0.0;
    double speed_hi = 0.0;

    bool is_shock() const { return amplitude < 0.0; }
};

/// Self-similar two-wave Riemann solution.
struct WaveFan {
    Vec2 gamma;
    ElementaryWave waves[2]; // minus-family wave, then plus-family wave
    Vec2 left, middle, right;
    FrozenContext ctx;

    double max_abs_speed() const {
        return std::max({std::abs(waves[0].speed_lo), std::abs(waves[0].speed_hi),
                         std::abs(waves[1].speed_lo), std::abs(waves[1].speed_hi)});
    }
};

inline WaveFan solve_riemann(Vec2 U_L, Vec2 U_R, const FrozenContext& ctx) {
    WaveFan fan;
    fan.ctx = ctx;
    fan.left = U_L;
    fan.gamma = amplitude_omega(U_L, U_R, ctx);

    const auto mid_end = detail::wave_end(Family::minus, U_L, fan.gamma.x0, ctx, true);
    fan.middle = mid_end.state;
    fan.waves[0] = {Family::minus, fan.gamma.x0, U_L, fan.middle, mid_end.speed_lo,
                    mid_end.speed_hi};
    const auto right_end = detail::wave_end(Family::plus, fan.middle, fan.gamma.x1, ctx, true);
    // The realized end state (agrees with U_R to the middle-state tolerance);
    // using it keeps the piecewise fan exactly chained.
    fan.right = right_end.state;
    fan.waves[1] = {Family::plus, fan.gamma.x1, fan.middle, fan.right, right_end.speed_lo,
                    right_end.speed_hi};
    return fan;
}

namespace detail {

/// Curve parameter g in [0, amplitude] with lambda_f(U(g)) = xi inside the
/// rarefaction of family f: Newton along the integral curve from the left
/// state of the wave (lambda is monotone in the amplitude parameter).
inline double rarefaction_parameter(const ElementaryWave& w, double xi, const FrozenContext& ctx) {
    double g = w.amplitude * (xi - w.speed_lo) / std::max(w.speed_hi - w.speed_lo, 1e-300);
    g = std::min(std::max(g, 0.0), w.amplitude);
    for (int it = 0; it < 60; ++it) {
        double a = w.left.x0 + ctx.theta_val;
        double b = 1.0 + w.left.x1;
        rarefaction_point(w.family, a, b, g);
        const double lam = lambda_of(w.family, a, b);
        if (std::abs(lam - xi) <= 1e-13 * (1.0 + std::abs(xi))) break;
        const double d = std::sqrt(a * a + 4.0 * b);
        const double dlam = w.family == Family::minus ? 1.0 - a / d : 1.0 + a / d;
        g += (xi - lam) / dlam;
        g = std::min(std::max(g, 0.0), w.amplitude);
    }
    return g;
}

/// State inside the rarefaction of family f at similarity coordinate xi,
/// where lambda_f(U(xi)) = xi.
inline Vec2 rarefaction_interior(const ElementaryWave& w, double xi, const FrozenContext& ctx) {
    const double g = rarefaction_parameter(w, xi, ctx);
    double a = w.left.x0 + ctx.theta_val;
    double b = 1.0 + w.left.x1;
    rarefaction_point(w.family, a, b, g);
    return {a - ctx.theta_val, b - 1.0};
}

} // namespace detail

/// Evaluate the fan at similarity coordinate xi = x / t.
inline Vec2 sample_fan(const WaveFan& fan, double xi) {
    for (int i = 0; i < 2; ++i) {
        const ElementaryWave& w = fan.waves[i];
        if (w.amplitude == 0.0) continue;
        if (xi < w.speed_lo) return w.left;
        if (xi < w.speed_hi) return detail::rarefaction_interior(w, xi, fan.ctx);
        // xi >= speed_hi: continue to the next wave.
    }
    return fan.right;
}

} // namespace balaw
