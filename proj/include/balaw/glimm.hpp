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
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "balaw/errors.hpp"
#include "balaw/linalg.hpp"
#include "balaw/model.hpp"
#include "balaw/profile.hpp"
#include "balaw/riemann.hpp"

// Random-choice scheme with operator splitting and the nonlocal potential
// transformation. Mesh points (kh, m tau) with k+m even carry the Riemann
// fans; sampling points y_{k,m} = (k + zeta_m) h with k+m odd carry the
// piecewise-constant hatted states. The potential phi is recomputed from the
// sampled w1 field at every strip (self-consistent coupling); the splitting
// states carry the S (Phi - differences), h*S-tilde and tau*G-hat corrections.

namespace balaw {

struct MeshConfig {
    double h = 0.01;          // spatial mesh-length
    double lambda_cfl = 2.0;  // mesh ratio h/tau; >= 2 and above all wave speeds
    double X = 10.0;          // domain truncation radius
    double T_final = 1.0;
    double boundary_tol = 1e-3; // abort if waves this large reach the boundary

    double tau() const { return h / lambda_cfl; }
    int half_cells() const { return static_cast<int>(std::llround(X / h)); }

    void validate() const {
        if (!(h > 0.0)) throw config_error("mesh: h must be positive");
        if (!(lambda_cfl >= 2.0)) throw config_error("mesh: lambda_cfl must be >= 2");
        if (!(X > 0.0) || std::abs(half_cells() * h - X) > 1e-9 * X)
            throw config_error("mesh: X must be a positive multiple of h");
        if (!(T_final >= 0.0)) throw config_error("mesh: T_final must be nonnegative");
    }
};

struct SamplingSequence {
    enum class Kind { van_der_corput, seeded_prng };
    Kind kind = Kind::van_der_corput;
    std::uint64_t seed = 0;

    /// zeta_m in (-1, 1) for strip index m >= 1. Stateless and random-access.
    double zeta(long m) const {
        if (kind == Kind::van_der_corput) {
            // Bit-reversal radix-2 van der Corput value in (0,1), mapped to (-1,1).
            double x = 0.0, b = 0.5;
            for (std::uint64_t v = static_cast<std::uint64_t>(m); v != 0; v >>= 1, b *= 0.5)
                if (v & 1u) x += b;
            return 2.0 * x - 1.0;
        }
        // Counter-based generator: splitmix64 of (seed, m); reproducible and
        // independent of evaluation order.
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(m);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        const double u = (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53; // (0,1)
        return 2.0 * u - 1.0;
    }
};

inline double sample_sequence_value(long m, const SamplingSequence& seq) {
    if (m < 1) throw config_error("sample_sequence_value: strip index must be >= 1");
    return seq.zeta(m);
}

/// Piecewise-constant hatted field at the bottom of strip m. States live at
/// mesh points kh with k+m odd, each covering the cell ((k-1)h, (k+1)h); phi
/// holds the discrete potential at every mesh point kh.
struct GridSolution {
    int m = 0;
    int K = 0; // k ranges over [-K, K]
    double h = 0.0;
    double tau = 0.0;
    std::vector<Vec2> hat;   // size 2K+1, entry j = k+K, valid when k+m odd
    std::vector<double> phi; // size 2K+1, all mesh points

    bool active(int k) const { return ((k + m) & 1) != 0; }
    const Vec2& hat_at(int k) const { return hat[static_cast<std::size_t>(k + K)]; }
    Vec2& hat_at(int k) { return hat[static_cast<std::size_t>(k + K)]; }
    double phi_at(int k) const {
        // Clamped read: beyond the boundary the potential is frozen (no w1
        // mass outside the domain by the boundary guard).
        const int kk = k < -K ? -K : (k > K ? K : k);
        return phi[static_cast<std::size_t>(kk + K)];
    }
    double x_of(int k) const { return k * h; }
    double t() const { return m * tau; }
};

/// Recompute the discrete potential phi(kh) = 1/2 * (midpoint quadrature of
/// w1 up to kh) from the current piecewise-constant w1 field.
inline void recompute_phi(GridSolution& sol, bool enabled) {
    const int K = sol.K;
    if (!enabled) {
        sol.phi.assign(static_cast<std::size_t>(2 * K + 1), 0.0);
        return;
    }
    sol.phi.resize(static_cast<std::size_t>(2 * K + 1));
    double mu = 0.0; // integral of w1 over cells fully left of the current point
    for (int k = -K; k <= K; ++k) {
        if (sol.active(k)) {
            const double w1 = sol.hat_at(k).x0; // hat and shifted w1 coincide
            sol.phi[static_cast<std::size_t>(k + K)] = 0.5 * (mu + sol.h * w1);
            mu += 2.0 * sol.h * w1;
        } else {
            sol.phi[static_cast<std::size_t>(k + K)] = 0.5 * mu;
        }
    }
}

/// Splitting states of one strip, aligned with mesh indices (entry j = k+K,
/// valid at k+m odd).
struct SplitStates {
    int m = 0;
    int K = 0;
    std::vector<Vec2> What, W;           // Eq. sampled hat state and W = hat + Phi
    std::vector<Mat2> S;                 // F_W^{-1}(W) F_W(Phi)
    std::vector<Vec2> Stilde, G;         // explicit-x correction; hat source
    std::vector<Vec2> WL, WR;            // left/right split states (W frame)
    std::vector<Vec2> WhatL, WhatR;      // the same in the hat frame

    std::size_t idx(int k) const { return static_cast<std::size_t>(k + K); }
};

inline GridSolution init_solution(const std::function<Vec2(double)>& W0,
                                  const AsymptoticProfile& prof, const MeshConfig& mesh,
                                  const ModelParams& params = {}) {
    mesh.validate();
    GridSolution sol;
    sol.m = 0;
    sol.K = mesh.half_cells();
    sol.h = mesh.h;
    sol.tau = mesh.tau();
    sol.hat.assign(static_cast<std::size_t>(2 * sol.K + 1), Vec2{});

    // Cell-midpoint evaluation of the shifted initial data at odd k.
    for (int k = -sol.K; k <= sol.K; ++k) {
        if (!sol.active(k)) continue;
        const Vec2 W = W0(sol.x_of(k));
        check_amplitude(W, prof.theta(sol.x_of(k), 0.0), params.rho0, "init_solution");
        sol.hat_at(k) = W; // Phi subtracted below once phi is known
    }
    // Data must be at equilibrium near the truncation boundary.
    for (const int k : {-sol.K, -sol.K + 1, sol.K - 1, sol.K}) {
        if (!sol.active(k)) continue;
        if (sol.hat_at(k).norm1() > mesh.boundary_tol)
            throw config_error("init_solution: data not at equilibrium near the boundary");
    }

    recompute_phi(sol, params.source_enabled); // phi of w1 = shifted w1 field
    if (params.source_enabled) {
        for (int k = -sol.K; k <= sol.K; ++k)
            if (sol.active(k)) sol.hat_at(k).x1 -= sol.phi_at(k);
    }
    return sol;
}

inline void compute_split_states(const GridSolution& sol, const AsymptoticProfile& prof,
                                 const MeshConfig& mesh, const ModelParams& params,
                                 SplitStates& out) {
    const int K = sol.K;
    const double t = sol.t();
    const double h = sol.h;
    const double tau = sol.tau;
    out.m = sol.m;
    out.K = K;
    const std::size_t n = static_cast<std::size_t>(2 * K + 1);
    for (auto* v : {&out.What, &out.W, &out.Stilde, &out.G, &out.WL, &out.WR, &out.WhatL,
                    &out.WhatR})
        v->resize(n);
    out.S.resize(n);

    const AsymptoticProfile profile = params.theta_enabled ? prof : AsymptoticProfile{0.0};

    for (int k = -K; k <= K; ++k) {
        if (!sol.active(k)) continue;
        const std::size_t j = out.idx(k);
        const double x = sol.x_of(k);
        const auto th = profile.derivs(x, t);

        const Vec2 What = sol.hat_at(k);
        const double phi_k = sol.phi_at(k);
        const Vec2 Phi{0.0, phi_k};
        const Vec2 W = What + Phi;
        if (amplitude_norm(W, th.theta) >= params.rho0)
            throw guard_error("amplitude guard: |v| + |u-1| = " +
                              std::to_string(amplitude_norm(W, th.theta)) + " >= rho0 at x = " +
                              std::to_string(x) + ", strip " + std::to_string(sol.m));
        // Deviation from the profile state near the truncation boundary.
        if (std::abs(k) >= K - 2 && std::abs(What.x0) + std::abs(W.x1) > mesh.boundary_tol)
            throw solver_error("boundary influence: waves reached the domain truncation at strip " +
                               std::to_string(sol.m));

        out.What[j] = What;
        out.W[j] = W;

        if (!params.source_enabled) {
            out.S[j] = Mat2::identity();
            out.Stilde[j] = {0.0, 0.0};
            out.G[j] = {0.0, 0.0};
            out.WL[j] = W;
            out.WR[j] = W;
            out.WhatL[j] = W;
            out.WhatR[j] = W;
            continue;
        }

        const Mat2 S = flux_jacobian_inverse(W, th.theta) * flux_jacobian(Phi, th.theta);
        const Vec2 Stilde{th.theta_x * What.x1 / (1.0 + W.x1), 0.0};
        const Vec2 G = hat_source(What, phi_k, th.theta, th.theta_x, th.theta_xx);

        const double phi_l = sol.phi_at(k - 1);
        const double phi_r = sol.phi_at(k + 1);
        const Vec2 base = W - tau * G;
        const Vec2 WL = base + S * Vec2{0.0, phi_l - phi_k} + h * Stilde;
        const Vec2 WR = base + S * Vec2{0.0, phi_r - phi_k} - h * Stilde;

        out.S[j] = S;
        out.Stilde[j] = Stilde;
        out.G[j] = G;
        out.WL[j] = WL;
        out.WR[j] = WR;
        out.WhatL[j] = WL - Vec2{0.0, phi_l};
        out.WhatR[j] = WR - Vec2{0.0, phi_r};
    }
}

inline SplitStates compute_split_states(const GridSolution& sol, const AsymptoticProfile& prof,
                                        const MeshConfig& mesh, const ModelParams& params = {}) {
    SplitStates out;
    compute_split_states(sol, prof, mesh, params, out);
    return out;
}

/// |F-hat(W-hat^R, Phi_{k+1}, (k+1)h) - F-hat(W-hat^L, Phi_{k-1}, (k-1)h)|_inf
/// at odd k, each flux taken at its neighbor's position (time m tau). The
/// h*S-tilde correction in the split states cancels the first-order theta
/// drift between the neighbor positions, so this mismatch scales as O(h^2).
inline double flux_mismatch(const SplitStates& split, const GridSolution& sol,
                            const AsymptoticProfile& prof, const ModelParams& params, int k) {
    const std::size_t j = split.idx(k);
    const AsymptoticProfile profile = params.theta_enabled ? prof : AsymptoticProfile{0.0};
    const double t = sol.t();
    const Vec2 fr = hat_flux(split.WhatR[j], {0.0, sol.phi_at(k + 1)},
                             profile.theta(sol.x_of(k + 1), t), /*rho0=*/1.0);
    const Vec2 fl = hat_flux(split.WhatL[j], {0.0, sol.phi_at(k - 1)},
                             profile.theta(sol.x_of(k - 1), t), /*rho0=*/1.0);
    return (fr - fl).norm_inf();
}

struct RiemannStepResult {
    GridSolution next;
    std::vector<WaveFan> fans; // entry j = k+K, valid at k+m even
    double zeta = 0.0;         // zeta_{m+1} used for the sampling
    double max_speed = 0.0;    // largest |wave speed| seen in the strip
};

inline void riemann_step(const SplitStates& split, const GridSolution& sol,
                         const AsymptoticProfile& prof, const MeshConfig& mesh,
                         const ModelParams& params, const SamplingSequence& seq,
                         RiemannStepResult& out) {
    const int K = sol.K;
    const double t = sol.t();
    const AsymptoticProfile profile = params.theta_enabled ? prof : AsymptoticProfile{0.0};

    out.zeta = sample_sequence_value(sol.m + 1, seq);
    out.max_speed = 0.0;
    out.fans.resize(static_cast<std::size_t>(2 * K + 1));

    GridSolution& next = out.next;
    next.m = sol.m + 1;
    next.K = K;
    next.h = sol.h;
    next.tau = sol.tau;
    next.hat.assign(static_cast<std::size_t>(2 * K + 1), Vec2{});

    const double xi = out.zeta * mesh.lambda_cfl;

    for (int k = -K; k <= K; ++k) {
        if (sol.active(k)) continue; // fans sit at the complementary parity
        const std::size_t j = static_cast<std::size_t>(k + K);
        // Ghost data beyond the boundary: the equilibrium of the shifted
        // system (the solution tracks the profile in the far field).
        const Vec2 left = k - 1 >= -K ? split.WR[split.idx(k - 1)] : Vec2{0.0, 0.0};
        const Vec2 right = k + 1 <= K ? split.WL[split.idx(k + 1)] : Vec2{0.0, 0.0};
        const FrozenContext ctx{profile.theta(sol.x_of(k), t)};

        const WaveFan fan = solve_riemann(left, right, ctx);
        const double speed = fan.max_abs_speed();
        if (speed >= mesh.lambda_cfl)
            throw solver_error("CFL violation: wave speed " + std::to_string(speed) +
                               " >= lambda_cfl at strip " + std::to_string(sol.m));
        if (speed > out.max_speed) out.max_speed = speed;

        const Vec2 U = sample_fan(fan, xi);
        next.hat_at(k) = U - Vec2{0.0, sol.phi_at(k)};
        out.fans[j] = fan;
    }

    recompute_phi(next, params.source_enabled);
}

inline RiemannStepResult riemann_step(const SplitStates& split, const GridSolution& sol,
                                      const AsymptoticProfile& prof, const MeshConfig& mesh,
                                      const ModelParams& params, const SamplingSequence& seq) {
    RiemannStepResult out;
    riemann_step(split, sol, prof, mesh, params, seq, out);
    return out;
}

/// Called once per strip after the Riemann step, before the result becomes
/// the next strip's bottom state.
using StripObserver =
    std::function<void(const GridSolution& bottom, const SplitStates& split,
                       const RiemannStepResult& step)>;

inline GridSolution advance(GridSolution sol, const SamplingSequence& seq,
                            const MeshConfig& mesh, const ModelParams& params,
                            const AsymptoticProfile& prof, long n_strips,
                            const StripObserver& observer = {}) {
    mesh.validate();
    if (static_cast<double>(n_strips) * mesh.tau() > mesh.T_final + 1e-9)
        throw config_error("advance: n_strips * tau exceeds T_final");
    SplitStates split;
    RiemannStepResult step;
    for (long i = 0; i < n_strips; ++i) {
        compute_split_states(sol, prof, mesh, params, split);
        riemann_step(split, sol, prof, mesh, params, seq, step);
        if (observer) observer(sol, split, step);
        std::swap(sol, step.next); // recycle the old buffers next strip
    }
    return sol;
}

} // namespace balaw
