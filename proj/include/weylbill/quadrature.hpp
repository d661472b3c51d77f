#pragma once

#include "weylbill/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace weylbill {

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::size_t max_intervals = 4000;
};

/// Result of a quadrature. `value` is real or complex depending on the
/// integrand; error_estimate is the summed Gauss-Kronrod discrepancy.
template <class T>
struct QuadResult {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

using QuadratureResult = QuadResult<Complex>;

namespace detail {

struct GK15 {
    static constexpr std::array<double, 8> nodes = {
        0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
        0.405845151377397166906606412076961, 0.586087235467691130294144845693013,
        0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
        0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
    static constexpr std::array<double, 8> kronrod = {
        0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
        0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
        0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
        0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
    // Gauss weights on the even-indexed Kronrod nodes (0, 2, 4, 6).
    static constexpr std::array<double, 4> gauss = {
        0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
        0.279705391489276667901467771423780, 0.129484966168869693270611432679082};
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Complex& v) { return std::abs(v); }

template <class T>
struct Panel {
    double a;
    double b;
    T value;
    double error;
};

template <class F>
auto gk15(const F& f, double a, double b) {
    using T = std::decay_t<decltype(f(a))>;
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(center);
    T kr = GK15::kronrod[0] * fc;
    T ga = GK15::gauss[0] * fc;
    for (std::size_t i = 1; i < 8; ++i) {
        const double dx = half * GK15::nodes[i];
        const T pair = f(center - dx) + f(center + dx);
        kr += GK15::kronrod[i] * pair;
        if (i % 2 == 0) ga += GK15::gauss[i / 2] * pair;
    }
    kr *= half;
    ga *= half;
    return Panel<T>{a, b, kr, magnitude(kr - ga)};
}

} // namespace detail

/// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b].
///
/// The panel with the largest error is bisected until the summed error
/// meets max(abs_tol, rel_tol * |value|). Panels are split and summed in a
/// fixed order, so identical inputs produce bit-identical results.
/// Endpoints are never evaluated, which admits integrable endpoint
/// singularities.
template <class F>
auto integrate(const F& f, double a, double b, const QuadOptions& opt = {}) {
    using T = std::decay_t<decltype(f(a))>;
    QuadResult<T> out;
    if (a == b) return out;
    std::vector<detail::Panel<T>> panels;
    panels.push_back(detail::gk15(f, a, b));
    out.evaluations = 15;
    auto total = [&] {
        T v{};
        double e = 0.0;
        for (const auto& p : panels) {
            v += p.value;
            e += p.error;
        }
        return std::pair<T, double>{v, e};
    };
    auto [value0, error0] = total();
    T value = value0;
    double error = error0;
    while (error > std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(value))) {
        if (panels.size() >= opt.max_intervals) {
            out.converged = false;
            break;
        }
        // Largest error first; ties resolved by position for determinism.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i) {
            if (panels[i].error > panels[worst].error) worst = i;
        }
        const auto p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            out.converged = false;
            break;
        }
        panels[worst] = detail::gk15(f, p.a, mid);
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, detail::gk15(f, mid, p.b));
        out.evaluations += 30;
        const auto updated = total();
        value = updated.first;
        error = updated.second;
    }
    out.value = value;
    out.error_estimate = error;
    return out;
}

/// Integrate over consecutive sub-intervals given by sorted breakpoints.
template <class F>
auto integrate_piecewise(const F& f, std::span<const double> breakpoints, const QuadOptions& opt = {}) {
    using T = std::decay_t<decltype(f(0.0))>;
    QuadResult<T> out;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i])) continue;
        const auto r = integrate(f, breakpoints[i], breakpoints[i + 1], opt);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    }
    return out;
}

/// Iterated 2-D integral: x over [ax, bx], y over [ylo(x), yhi(x)].
template <class F, class Lo, class Hi>
auto integrate_2d(const F& f, double ax, double bx, const Lo& ylo, const Hi& yhi, const QuadOptions& outer,
                  const QuadOptions& inner) {
    using T = std::decay_t<decltype(f(ax, ax))>;
    std::size_t evals = 0;
    bool ok = true;
    double inner_err = 0.0;
    auto g = [&](double x) -> T {
        auto r = integrate([&](double y) { return f(x, y); }, ylo(x), yhi(x), inner);
        evals += r.evaluations;
        ok = ok && r.converged;
        inner_err = std::max(inner_err, r.error_estimate);
        return r.value;
    };
    auto r = integrate(g, ax, bx, outer);
    r.evaluations = evals;
    r.converged = r.converged && ok;
    r.error_estimate += inner_err * std::abs(bx - ax);
    return r;
}

namespace detail {
template <class T>
T neville_at_zero(std::span<const double> h, std::span<const T> values) {
    std::vector<T> p(values.begin(), values.end());
    const std::size_t n = p.size();
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i) {
            p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
        }
    }
    return p[0];
}
} // namespace detail

/// Polynomial extrapolation to h = 0 (Neville). Returns the extrapolated
/// value and its distance from the estimate that drops the coarsest point.
template <class T>
std::pair<T, double> extrapolate_to_zero(std::span<const double> h, std::span<const T> values) {
    const T full = detail::neville_at_zero(h, values);
    if (values.size() < 2) return {full, 0.0};
    const T reduced = detail::neville_at_zero(h.subspan(1), values.subspan(1));
    return {full, detail::magnitude(full - reduced)};
}

/// Geometric ladder of damping parameters eps_j = eps0 * ratio^j.
struct DampingLadder {
    double eps0 = 0.2;
    double ratio = 0.5;
    int levels = 6;
};

/// Semi-infinite integral with caller-declared damping.
///
/// `f(z, eps)` must be the regulated integrand, analytic in eps at 0 and
/// decaying like exp(-eps * rate * z). Each rung is integrated on
/// [a, a + cutoff(eps)] (cutoff chosen by the caller so the discarded tail
/// is negligible) and the sequence is Richardson-extrapolated to eps = 0.
/// The error estimate adds the extrapolation spread to the largest rung
/// quadrature error.
QuadratureResult integrate_damped_ray(const std::function<Complex(double, double)>& f, double a,
                                      const std::function<double(double)>& cutoff, const DampingLadder& ladder,
                                      const QuadOptions& opt = {});

} // namespace weylbill
