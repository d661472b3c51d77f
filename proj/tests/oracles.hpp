#pragma once

// Reference computations that share no code path with the library.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

inline constexpr long double pi_ld = std::numbers::pi_v<long double>;

struct J0Y0 {
    long double j0;
    long double y0;
};

// Ascending series in long double, 200 terms.
inline J0Y0 bessel_series(long double x) {
    const long double q = -x * x / 4.0L;
    long double term = 1.0L, j0 = 1.0L, h = 0.0L, ysum = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        h += 1.0L / k;
        j0 += term;
        ysum += term * h;
    }
    constexpr long double euler = 0.57721566490153286060651209008240243L;
    const long double y0 = 2.0L / pi_ld * ((std::log(x / 2.0L) + euler) * j0 - ysum);
    return {j0, y0};
}

// First zero of J0 by bisection on the long-double series.
inline long double first_j0_zero() {
    long double lo = 2.0L, hi = 3.0L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (bessel_series(mid).j0 > 0.0L) lo = mid;
        else hi = mid;
    }
    return 0.5L * (lo + hi);
}

// Exhaustive double loop over rectangle modes.
inline std::vector<double> rectangle_modes(double a, double b, double emax) {
    std::vector<double> out;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    for (int m = 1; m < 2000; ++m) {
        for (int n = 1; n < 2000; ++n) {
            const double e = pi2 * (m * m / (a * a) + n * n / (b * b));
            if (e <= emax) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Rectangular-corner closed paths in imaginary time.
//
// Each leg runs for tau/2 with the free heat kernel; Q = (x, y) ranges over
// [0, S]^2 and the mediate point over the quadrant (the path without
// bounces, taken over the whole plane, is pure area). The trace has the
// exact form a/tau + b/sqrt(tau) + c up to exp(-S^2/tau) corrections, so
// three tau values determine a, b, c.

struct LedgerFit {
    double area_units;    // a * 4 pi / S^2
    double length_units;  // b * 8 sqrt(pi) / S
    double delta_units;   // c
};

// int_0^S dx int_lo^inf dx0 exp(-[(x s1 x0)^2 + (x0 s2 x)^2] / (2 tau)),
// s = +1 for '+', -1 for '-'.
inline double coordinate_factor(double s1, double s2, double side, double tau, bool whole_line) {
    using boost::math::quadrature::gauss_kronrod;
    auto outer = [&](double x) {
        auto inner = [&](double x0) {
            const double d1 = x + s1 * x0;
            const double d2 = x0 + s2 * x;
            return std::exp(-(d1 * d1 + d2 * d2) / (2.0 * tau));
        };
        // Beyond 40 sqrt(tau) from the centre the integrand is below exp(-800).
        const double reach = 40.0 * std::sqrt(tau);
        const double centre = std::max(0.0, x);
        const double lo = whole_line ? centre - reach : 0.0;
        return gauss_kronrod<double, 61>::integrate(inner, lo, centre, 15, 1e-14) +
               gauss_kronrod<double, 61>::integrate(inner, centre, centre + reach, 15, 1e-14);
    };
    return gauss_kronrod<double, 61>::integrate(outer, 0.0, side, 15, 1e-14);
}

inline double signature_trace(const std::array<bool, 4>& plus, double side, double tau) {
    const bool bulk = !plus[0] && !plus[1] && !plus[2] && !plus[3];
    const double sx1 = plus[0] ? 1.0 : -1.0, sy1 = plus[1] ? 1.0 : -1.0;
    const double sx2 = plus[2] ? 1.0 : -1.0, sy2 = plus[3] ? 1.0 : -1.0;
    const int bounces = plus[0] + plus[1] + plus[2] + plus[3];
    const double sign = bounces % 2 ? -1.0 : 1.0;
    const double pi = std::numbers::pi;
    const double pref = 1.0 / (4.0 * pi * pi * tau * tau);
    // Only five distinct factors occur per tau; cache them.
    static std::map<std::tuple<double, double, double, double, bool>, double> cache;
    auto factor = [&](double s1, double s2) {
        const auto key = std::make_tuple(s1, s2, side, tau, bulk);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, coordinate_factor(s1, s2, side, tau, bulk)).first;
        return it->second;
    };
    return sign * pref * factor(sx1, sx2) * factor(sy1, sy2);
}

inline LedgerFit fit_signature(const std::array<bool, 4>& plus) {
    constexpr double side = 2.0;
    const std::array<double, 3> taus = {0.02, 0.04, 0.08};
    // Solve [1/t, 1/sqrt(t), 1] (a, b, c) = Z by Cramer's rule.
    double m[3][3], z[3];
    for (int i = 0; i < 3; ++i) {
        m[i][0] = 1.0 / taus[i];
        m[i][1] = 1.0 / std::sqrt(taus[i]);
        m[i][2] = 1.0;
        z[i] = signature_trace(plus, side, taus[i]);
    }
    auto det3 = [](double a[3][3]) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    const double d = det3(m);
    double sol[3];
    for (int col = 0; col < 3; ++col) {
        double t[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t[i][j] = j == col ? z[i] : m[i][j];
        sol[col] = det3(t) / d;
    }
    const double pi = std::numbers::pi;
    return {sol[0] * 4.0 * pi / (side * side), sol[1] * 8.0 * std::sqrt(pi) / side, sol[2]};
}

} // namespace oracle
