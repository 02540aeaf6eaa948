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
#include <numbers>

namespace balaw {

/// Heat-kernel asymptotic profile
///   theta(x,t) = M (4 pi (t+1))^{-1/2} exp(-x^2 / (4(t+1)))
/// with closed-form derivatives. M = 0 gives the identically-zero profile.
struct AsymptoticProfile {
    double mass = 0.0;

    double theta(double x, double t) const {
        if (mass == 0.0) return 0.0;
        const double t1 = t + 1.0;
        return mass / std::sqrt(4.0 * std::numbers::pi * t1) * std::exp(-x * x / (4.0 * t1));
    }

    double theta_x(double x, double t) const {
        const double t1 = t + 1.0;
        return -x / (2.0 * t1) * theta(x, t);
    }

    double theta_xx(double x, double t) const {
        const double t1 = t + 1.0;
        return (x * x - 2.0 * t1) / (4.0 * t1 * t1) * theta(x, t);
    }

    double theta_xxx(double x, double t) const {
        const double t1 = t + 1.0;
        return x * (6.0 * t1 - x * x) / (8.0 * t1 * t1 * t1) * theta(x, t);
    }

    /// Time derivative; equals theta_xx since theta solves the heat equation.
    double theta_t(double x, double t) const {
        const double t1 = t + 1.0;
        return (-1.0 / (2.0 * t1) + x * x / (4.0 * t1 * t1)) * theta(x, t);
    }

    struct Derivs {
        double theta = 0.0;
        double theta_x = 0.0;
        double theta_xx = 0.0; // = theta_t
    };

    /// theta and its first two spatial derivatives with one exponential.
    Derivs derivs(double x, double t) const {
        if (mass == 0.0) return {};
        const double t1 = t + 1.0;
        const double th =
            mass / std::sqrt(4.0 * std::numbers::pi * t1) * std::exp(-x * x / (4.0 * t1));
        return {th, -x / (2.0 * t1) * th, (x * x - 2.0 * t1) / (4.0 * t1 * t1) * th};
    }
};

} // namespace balaw
