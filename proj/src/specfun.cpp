#include "weylbill/specfun.hpp"

#include "weylbill/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace weylbill {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kSeriesLimit = 8.0;
constexpr double kAsymptoticLimit = 25.0;

void require_positive(double x, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(who) + ": argument must be finite and > 0, got " + std::to_string(x));
    }
}

// Start index for the backward recurrence: J_N(x) ~ (e x / 2N)^N must be
// negligible, so N has to exceed e x / 2 with some margin.
int miller_start(int nmax, double x) {
    const double base = std::max(static_cast<double>(nmax), 1.36 * x);
    int n = static_cast<int>(base + 40.0 + 4.0 * std::cbrt(std::max(x, 1.0)));
    return n + (n % 2);
}

} // namespace

namespace detail {

BesselJ0Y0 j0y0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double j0 = 1.0;
    double harmonic = 0.0;
    double ysum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        j0 += term;
        ysum -= harmonic * term;
        if (std::abs(term) * (1.0 + harmonic) < 1e-18 * std::max(1.0, std::abs(j0))) {
            break;
        }
    }
    const double y0 = (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j0 + ysum);
    return {j0, y0};
}

BesselJ0Y0 j0y0_miller(double x) {
    // The Neumann series for Y0 needs every even order, so keep the whole sweep.
    const int start = miller_start(0, x);
    auto all = bessel_jn_all(start - 1, x);
    double neumann = 0.0;
    for (std::size_t k = 1; 2 * k < all.size(); ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        neumann += sign * all[2 * k] / static_cast<double>(k);
    }
    const double j0 = all[0];
    const double y0 = (2.0 / kPi) * (std::log(0.5 * x) + kEulerGamma) * j0 - (4.0 / kPi) * neumann;
    return {j0, y0};
}

BesselJ0Y0 j0y0_asymptotic(double x) {
    // sum_k i^k a_k / x^k with a_k = (-1)^k (1^2 3^2 ... (2k-1)^2) / (k! 8^k)
    Complex sum{1.0, 0.0};
    Complex ik{1.0, 0.0};
    double a = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        a *= -odd * odd / (8.0 * k * x);
        ik *= kI;
        const double mag = std::abs(a);
        if (mag > last) break;
        sum += ik * a;
        last = mag;
        if (mag < 1e-18) break;
    }
    const double c = std::cos(x);
    const double s = std::sin(x);
    // exp(i (x - pi/4)) without forming x - pi/4.
    const Complex phase{(c + s) * std::numbers::sqrt2 * 0.5, (s - c) * std::numbers::sqrt2 * 0.5};
    const Complex h = std::sqrt(2.0 / (kPi * x)) * phase * sum;
    return {h.real(), h.imag()};
}

} // namespace detail

BesselJ0Y0 bessel_j0y0(double x) {
    require_positive(x, "bessel_j0y0");
    if (x <= kSeriesLimit) return detail::j0y0_series(x);
    if (x <= kAsymptoticLimit) return detail::j0y0_miller(x);
    return detail::j0y0_asymptotic(x);
}

Complex hankel1_0(double x) {
    const auto [j0, y0] = bessel_j0y0(x);
    return {j0, y0};
}

std::vector<double> bessel_jn_all(int nmax, double x) {
    if (nmax < 0) throw DomainError("bessel_jn_all: negative order");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_jn_all: argument must be finite and >= 0");
    std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const int start = miller_start(nmax, x);
    double next = 0.0;
    double cur = 1e-300;
    double norm = 0.0;
    for (int n = start; n >= 1; --n) {
        const double prev = 2.0 * n / x * cur - next;
        next = cur;
        cur = prev;
        // cur now holds J_{n-1} (unnormalized)
        const int idx = n - 1;
        if (idx % 2 == 0 && idx > 0) norm += 2.0 * cur;
        if (idx <= nmax) out[static_cast<std::size_t>(idx)] = cur;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            for (double& v : out) v *= 1e-250;
        }
    }
    norm += cur;
    for (double& v : out) v /= norm;
    return out;
}

double bessel_jn(int n, double x) {
    return bessel_jn_all(n, x).back();
}

double gamma_real(double x) {
    require_positive(x, "gamma_real");
    static constexpr std::array<double, 9> p = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        return kPi / (std::sin(kPi * x) * gamma_real(1.0 - x));
    }
    const double z = x - 1.0;
    double acc = p[0];
    for (std::size_t i = 1; i < p.size(); ++i) acc += p[i] / (z + static_cast<double>(i));
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

} // namespace weylbill
