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

namespace balaw {

/// Two-component state / amplitude vector.
struct Vec2 {
    double x0 = 0.0;
    double x1 = 0.0;

    constexpr double& operator[](int i) { return i == 0 ? x0 : x1; }
    constexpr double operator[](int i) const { return i == 0 ? x0 : x1; }

    /// 1-norm (the vector norm convention used throughout).
    double norm1() const { return std::abs(x0) + std::abs(x1); }
    double norm_inf() const { return std::max(std::abs(x0), std::abs(x1)); }
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x0 + b.x0, a.x1 + b.x1}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x0 - b.x0, a.x1 - b.x1}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x0, -a.x1}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x0, s * a.x1}; }
constexpr Vec2 operator*(Vec2 a, double s) { return s * a; }
constexpr bool operator==(Vec2 a, Vec2 b) { return a.x0 == b.x0 && a.x1 == b.x1; }

/// 1-norm |a|_1 (the vector norm convention used throughout).
inline double norm1(Vec2 a) { return a.norm1(); }
/// max-norm |a|_inf.
inline double norm_inf(Vec2 a) { return a.norm_inf(); }

/// 2x2 matrix, row-major.
struct Mat2 {
    double a00 = 0.0, a01 = 0.0;
    double a10 = 0.0, a11 = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    constexpr double det() const { return a00 * a11 - a01 * a10; }
    /// Max row-sum norm.
    double norm_inf() const {
        return std::max(std::abs(a00) + std::abs(a01), std::abs(a10) + std::abs(a11));
    }
};

constexpr Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.a00 * v.x0 + m.a01 * v.x1, m.a10 * v.x0 + m.a11 * v.x1};
}

constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
}

constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a00 - b.a00, a.a01 - b.a01, a.a10 - b.a10, a.a11 - b.a11};
}

inline double norm_inf(const Mat2& m) { return m.norm_inf(); }

} // namespace balaw
