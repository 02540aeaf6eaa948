#pragma once

// Initial-data families for the experiment harness. Each family produces the
// primitive fields (v0, u0) together with its reported size measures: the
// carried mass M = integral v0, the variation delta = TV(v0) + TV(u0), and
// the weighted size sigma^2 = integral (1+x^2)(v0^2 + (u0-1)^2). Closed
// forms are used wherever they exist; non-decaying families report an
// infinite sigma^2 rather than pretending otherwise.

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "balaw/errors.hpp"
#include "balaw/linalg.hpp"
#include "balaw/profile.hpp"

namespace balaw {

enum class DataFamily { rational_bump, derivative_bump, riemann_datum, custom_table };

inline const char* family_name(DataFamily f) {
    switch (f) {
        case DataFamily::rational_bump: return "rational_bump";
        case DataFamily::derivative_bump: return "derivative_bump";
        case DataFamily::riemann_datum: return "riemann_datum";
        case DataFamily::custom_table: return "custom_table";
    }
    return "?";
}

inline DataFamily parse_family(const std::string& s) {
    if (s == "rational_bump") return DataFamily::rational_bump;
    if (s == "derivative_bump") return DataFamily::derivative_bump;
    if (s == "riemann_datum") return DataFamily::riemann_datum;
    if (s == "custom_table") return DataFamily::custom_table;
    throw config_error("unknown initial-data family '" + s + "'");
}

struct TableRow {
    double x = 0.0; // state applies on [x, next x)
    double v = 0.0;
    double u = 1.0;
};

struct InitialDataSpec {
    DataFamily family = DataFamily::rational_bump;
    double amplitude = 0.05;  // bump amplitude a (rational) or b (derivative)
    double power = 4.0;       // rational decay power p; exponent r = 2p
    double mass_target = 0.0; // > 0: choose the amplitude to carry this mass
    double shift = 0.0;       // bump center
    // riemann_datum:
    double jump_at = 0.0;
    double left_v = 0.0, left_u = 1.0;
    double right_v = 0.0, right_u = 1.0;
    // custom_table (equilibrium (0,1) left of the first breakpoint):
    std::vector<TableRow> table;
};

struct InitialData {
    std::function<Vec2(double)> primitive; // x -> (v0(x), u0(x))
    double mass = 0.0;
    double delta = 0.0;
    double sigma2 = 0.0;
    double decay_exponent = 0.0; // r = 2p for the bump families, else 0
};

namespace detail {

/// integral over the line of (1+x^2)^(-q); finite for q > 1/2.
inline double inv_power_integral(double q) {
    if (!(q > 0.5)) throw config_error("inv_power_integral: diverges for q <= 1/2");
    const double sqrt_pi = std::sqrt(std::acos(-1.0));
    return sqrt_pi * std::tgamma(q - 0.5) / std::tgamma(q);
}

} // namespace detail

/// Shifted fields fed to the scheme: w1 = v0 - theta(., 0), w2 = u0 - 1.
inline std::function<Vec2(double)> shifted_data(const InitialData& data,
                                                const AsymptoticProfile& prof) {
    return [f = data.primitive, prof](double x) {
        const Vec2 vu = f(x);
        return Vec2{vu.x0 - prof.theta(x, 0.0), vu.x1 - 1.0};
    };
}

inline InitialData make_initial_data(const InitialDataSpec& spec) {
    InitialData out;
    const double inf = std::numeric_limits<double>::infinity();

    switch (spec.family) {
        case DataFamily::rational_bump: {
            const double p = spec.power;
            if (!(2.0 * p > 1.5))
                throw config_error("rational_bump: decay exponent r = 2p must exceed 3/2");
            const double C_p = detail::inv_power_integral(p);
            double a = spec.amplitude;
            if (spec.mass_target != 0.0) a = spec.mass_target / C_p;
            const double s = spec.shift;
            out.primitive = [a, p, s](double x) {
                const double y = x - s;
                return Vec2{a * std::pow(1.0 + y * y, -p), 1.0};
            };
            out.mass = a * C_p;
            out.delta = 2.0 * std::abs(a);
            // Even bump g: integral (1+x^2) g(x-s)^2 = sigma0^2 + s^2 integral g^2.
            out.sigma2 = a * a * detail::inv_power_integral(2.0 * p - 1.0) +
                         s * s * a * a * detail::inv_power_integral(2.0 * p);
            out.decay_exponent = 2.0 * p;
            return out;
        }
        case DataFamily::derivative_bump: {
            if (spec.mass_target != 0.0)
                throw config_error("derivative_bump: carries no mass, mass_target impossible");
            const double b = spec.amplitude;
            const double s = spec.shift;
            // u0 = 1 + b d/dx (1+x^2)^{-1} = 1 - 2 b x (1+x^2)^{-2}.
            out.primitive = [b, s](double x) {
                const double y = x - s;
                const double d = 1.0 + y * y;
                return Vec2{0.0, 1.0 - 2.0 * b * y / (d * d)};
            };
            out.mass = 0.0; // the derivative integrates to zero
            out.delta = 1.5 * std::sqrt(3.0) * std::abs(b);
            const double pi = std::acos(-1.0);
            // integral (1+x^2) f^2 = b^2 pi/2; integral f^2 = b^2 pi/4.
            out.sigma2 = b * b * pi / 2.0 + s * s * b * b * pi / 4.0;
            out.decay_exponent = 3.0; // f ~ x^{-3}
            return out;
        }
        case DataFamily::riemann_datum: {
            if (!(spec.left_u > 0.0) || !(spec.right_u > 0.0))
                throw config_error("riemann_datum: u must stay positive");
            const Vec2 L{spec.left_v, spec.left_u};
            const Vec2 R{spec.right_v, spec.right_u};
            const double at = spec.jump_at;
            out.primitive = [L, R, at](double x) { return x < at ? L : R; };
            out.delta = (R - L).norm1();
            const bool left_eq = L.x0 == 0.0 && L.x1 == 1.0;
            const bool right_eq = R.x0 == 0.0 && R.x1 == 1.0;
            out.mass = (L.x0 == 0.0 && R.x0 == 0.0) ? 0.0 : inf;
            out.sigma2 = (left_eq && right_eq) ? 0.0 : inf;
            return out;
        }
        case DataFamily::custom_table: {
            const auto& rows = spec.table;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!(rows[i].u > 0.0))
                    throw config_error("custom_table: u must stay positive (row " +
                                       std::to_string(i) + ")");
                if (i > 0 && !(rows[i].x > rows[i - 1].x))
                    throw config_error("custom_table: breakpoints must increase (row " +
                                       std::to_string(i) + ")");
            }
            out.primitive = [rows](double x) {
                Vec2 state{0.0, 1.0}; // equilibrium left of the table
                for (const TableRow& r : rows) {
                    if (x < r.x) break;
                    state = {r.v, r.u};
                }
                return state;
            };
            double prev_v = 0.0, prev_u = 1.0;
            for (const TableRow& r : rows) {
                out.delta += std::abs(r.v - prev_v) + std::abs(r.u - prev_u);
                prev_v = r.v;
                prev_u = r.u;
            }
            if (rows.empty()) {
                out.mass = 0.0;
                out.sigma2 = 0.0;
                return out;
            }
            // Segment integrals are exact for piecewise-constant states; the
            // last row extends to +infinity.
            double mass = 0.0, sigma2 = 0.0;
            for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
                const double lo = rows[i].x, hi = rows[i + 1].x;
                const double v = rows[i].v, ut = rows[i].u - 1.0;
                mass += v * (hi - lo);
                sigma2 += (v * v + ut * ut) *
                          ((hi - lo) + (hi * hi * hi - lo * lo * lo) / 3.0);
            }
            const TableRow& last = rows.back();
            if (last.v != 0.0) mass = inf;
            if (last.v != 0.0 || last.u != 1.0) sigma2 = inf;
            out.mass = mass;
            out.sigma2 = sigma2;
            return out;
        }
    }
    throw config_error("make_initial_data: unknown family");
}

} // namespace balaw
