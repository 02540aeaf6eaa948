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
#include <utility>
#include <vector>

#include "balaw/errors.hpp"
#include "balaw/linalg.hpp"
#include "balaw/profile.hpp"

// The 2x2 system of balance laws
//   v_t + u_x       = 0
//   u_t + (u v)_x   = u (1 - u)
// around the equilibrium (v,u) = (0,1), in three coordinate frames:
//   primitive (v, u), shifted W = (w1, w2) = (v - theta, u - 1),
//   hatted Whot = W - (0, phi) with phi the half-potential of w1.

namespace balaw {

struct ModelParams {
    double rho0 = 0.25;       // amplitude guard radius, |v| + |u-1| < rho0
    bool source_enabled = true;
    bool theta_enabled = true;
};

/// Primitive state (v, u).
struct Primitive {
    double v = 0.0;
    double u = 1.0;
};

// --- frame conversions -----------------------------------------------------

inline Vec2 to_shifted(Primitive p, double theta_val) {
    return {p.v - theta_val, p.u - 1.0};
}

inline Primitive from_shifted(Vec2 W, double theta_val) {
    return {W.x0 + theta_val, 1.0 + W.x1};
}

inline Vec2 to_hat(Vec2 W, double phi) { return {W.x0, W.x1 - phi}; }

inline Vec2 from_hat(Vec2 What, double phi) { return {What.x0, What.x1 + phi}; }

/// |v| + |u-1| of the W-frame state (the quantity guarded by rho0).
inline double amplitude_norm(Vec2 W, double theta_val) {
    return std::abs(W.x0 + theta_val) + std::abs(W.x1);
}

inline void check_amplitude(Vec2 W, double theta_val, double rho0, const char* where) {
    if (!(amplitude_norm(W, theta_val) < rho0))
        throw guard_error(std::string(where) + ": state (" + std::to_string(W.x0) + ", " +
                          std::to_string(W.x1) + ") with theta=" + std::to_string(theta_val) +
                          " outside amplitude ball rho0=" + std::to_string(rho0));
}

// --- flux, source, eigenstructure (shifted frame) ---------------------------

/// F(W) = (w2, (w1+theta)(1+w2)).
inline Vec2 flux_W(Vec2 W, double theta_val) {
    return {W.x1, (W.x0 + theta_val) * (1.0 + W.x1)};
}

/// G(W) = (theta_t, (1+w2) w2); the system reads W_t + F_x + G = 0.
inline Vec2 source_G(Vec2 W, double theta_t_val) {
    return {theta_t_val, (1.0 + W.x1) * W.x1};
}

/// dF/dx at frozen W, i.e. theta_x d/dtheta F = (0, theta_x (1+w2)).
inline Vec2 flux_x(Vec2 W, double theta_x_val) {
    return {0.0, theta_x_val * (1.0 + W.x1)};
}

inline Mat2 flux_jacobian(Vec2 W, double theta_val) {
    return {0.0, 1.0, 1.0 + W.x1, W.x0 + theta_val};
}

inline Mat2 flux_jacobian_inverse(Vec2 W, double theta_val) {
    const double b = 1.0 + W.x1;
    // Numerically singular well before b = 0: reject degenerate densities.
    if (!(b > 1e-8))
        throw guard_error("flux_jacobian_inverse: singular, 1+w2 = " + std::to_string(b));
    return {-(W.x0 + theta_val) / b, 1.0 / b, 1.0, 0.0};
}

/// lambda_pm = ((w1+theta) +- sqrt((w1+theta)^2 + 4(1+w2))) / 2.
inline std::pair<double, double> eigenvalues(Vec2 W, double theta_val) {
    const double a = W.x0 + theta_val;
    const double disc = a * a + 4.0 * (1.0 + W.x1);
    if (!(disc > 0.0))
        throw guard_error("eigenvalues: hyperbolicity lost, discriminant = " +
                          std::to_string(disc));
    const double d = std::sqrt(disc);
    return {0.5 * (a - d), 0.5 * (a + d)};
}

/// Columns are the right eigenvectors (1, lambda_-)^t and (1, lambda_+)^t.
inline Mat2 eigenvector_matrix(Vec2 W, double theta_val) {
    const auto [lm, lp] = eigenvalues(W, theta_val);
    return {1.0, 1.0, lm, lp};
}

inline Mat2 eigenvector_matrix_inverse(Vec2 W, double theta_val) {
    const auto [lm, lp] = eigenvalues(W, theta_val);
    const double d = lp - lm;
    return {lp / d, -1.0 / d, -lm / d, 1.0 / d};
}

// --- entropy pair (shifted primitive arguments v, ut = u-1) ------------------

struct EntropyTriple {
    double eta = 0.0;         // 1/2 v^2 + (1+ut) ln(1+ut) - ut
    double q = 0.0;           // v (1+ut) ln(1+ut)
    double dissipation = 0.0; // ut (1+ut) ln(1+ut) >= 0
};

inline EntropyTriple entropy_pair(double v, double ut) {
    const double b = 1.0 + ut;
    if (!(b > 0.0))
        throw guard_error("entropy_pair: 1+u_tilde = " + std::to_string(b) + " <= 0");
    const double blogb = b * std::log(b);
    return {0.5 * v * v + blogb - ut, v * blogb, ut * blogb};
}

// --- hatted system -----------------------------------------------------------

/// Fhat(What, Phi) = F(What + Phi) - F(Phi), theta frozen at theta_val.
inline Vec2 hat_flux(Vec2 What, Vec2 Phi, double theta_val, double rho0 = 0.25) {
    check_amplitude(What + Phi, theta_val, rho0, "hat_flux");
    check_amplitude(Phi, theta_val, rho0, "hat_flux(Phi)");
    return flux_W(What + Phi, theta_val) - flux_W(Phi, theta_val);
}

/// Ghat(What, phi) =
///   ( w1/2 + theta_xx,
///     w3/2 + theta w1 / 2 + phi/2 + theta_x (1/2 + phi) + (w3 + phi)^2 ).
inline Vec2 hat_source(Vec2 What, double phi, double theta_val, double theta_x_val,
                       double theta_xx_val) {
    const double w1 = What.x0, w3 = What.x1;
    const double w2 = w3 + phi;
    return {0.5 * w1 + theta_xx_val,
            0.5 * w3 + 0.5 * theta_val * w1 + 0.5 * phi + theta_x_val * (0.5 + phi) + w2 * w2};
}

/// d Ghat / d What = [[1/2, 0], [theta/2, 1/2 + 2 (w3 + phi)]].
inline Mat2 hat_source_jacobian(Vec2 What, double phi, double theta_val) {
    return {0.5, 0.0, 0.5 * theta_val, 0.5 + 2.0 * (What.x1 + phi)};
}

// --- modeling transforms ------------------------------------------------------

/// v = s_x / s by centered differences (one-sided O(h^2) at the ends).
inline std::vector<double> inverse_hopf_cole(const std::vector<double>& s, double h) {
    const std::size_t n = s.size();
    if (n < 3) throw config_error("inverse_hopf_cole: need at least 3 samples");
    if (!(h > 0.0)) throw config_error("inverse_hopf_cole: grid spacing must be positive");
    for (double si : s)
        if (!(si > 0.0))
            throw guard_error("inverse_hopf_cole: nonpositive sample " + std::to_string(si));
    std::vector<double> v(n);
    v[0] = (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * h) / s[0];
    for (std::size_t i = 1; i + 1 < n; ++i) v[i] = (s[i + 1] - s[i - 1]) / (2.0 * h) / s[i];
    v[n - 1] = (3.0 * s[n - 1] - 4.0 * s[n - 2] + s[n - 3]) / (2.0 * h) / s[n - 1];
    return v;
}

/// Scale factors reducing
///   v_t + mu u_x = 0,  u_t + chi (u v)_x = D u_xx + a u (1 - u/K)
/// to the normalized system: t' = t_factor t, x' = x_factor x,
/// v' = v_factor v, u' = u_factor u, with growth rate r = a/(chi mu K).
struct RescaleResult {
    double r = 1.0;
    double t_factor = 1.0;
    double x_factor = 1.0;
    double v_factor = 1.0;
    double u_factor = 1.0;
};

inline RescaleResult rescale_parameters(double chi, double mu, double K, double a,
                                        double D = 0.0) {
    if (!(chi * mu > 0.0))
        throw config_error("rescale_parameters: need chi*mu > 0, got " + std::to_string(chi * mu));
    if (!(K > 0.0)) throw config_error("rescale_parameters: need K > 0");
    if (!(a > 0.0)) throw config_error("rescale_parameters: need a > 0");
    if (D < 0.0) throw config_error("rescale_parameters: need D >= 0");
    const double cmk = chi * mu * K;
    const double sgn = chi > 0.0 ? 1.0 : -1.0;
    return {a / cmk, cmk, std::sqrt(cmk), sgn * std::sqrt(chi / (mu * K)), 1.0 / K};
}

} // namespace balaw
