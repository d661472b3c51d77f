#include "weylbill/spectra.hpp"

#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace weylbill {

std::size_t Spectrum::count_below(double energy) const {
    return static_cast<std::size_t>(std::upper_bound(eigenvalues.begin(), eigenvalues.end(), energy) -
                                    eigenvalues.begin());
}

Spectrum rectangle_spectrum(double a, double b, double emax) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("rectangle_spectrum: sides must be > 0");
    const double ground = kPi * kPi * (1.0 / (a * a) + 1.0 / (b * b));
    if (!(emax >= ground)) throw EmptySpectrum("rectangle_spectrum: emax is below the ground state");
    Spectrum sp;
    sp.shape = "rectangle";
    sp.emax = emax;
    for (std::int64_t m = 1;; ++m) {
        const double em = kPi * kPi * static_cast<double>(m * m) / (a * a);
        if (em + kPi * kPi / (b * b) > emax) break;
        for (std::int64_t n = 1;; ++n) {
            const double e = em + kPi * kPi * static_cast<double>(n * n) / (b * b);
            if (e > emax) break;
            sp.eigenvalues.push_back(e);
        }
    }
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
    return sp;
}

std::vector<double> bessel_zeros(int m, double xmax) {
    if (m < 0) throw DomainError("bessel_zeros: order must be >= 0");
    std::vector<double> zeros;
    // Consecutive zeros are more than pi apart, so a step of 1/2 cannot
    // skip a pair; J_m has no zeros below m.
    constexpr double step = 0.5;
    double x0 = std::max(static_cast<double>(m), step);
    double f0 = bessel_jn(m, x0);
    auto f = [m](double x) { return bessel_jn(m, x); };
    while (x0 < xmax) {
        const double x1 = std::min(x0 + step, xmax);
        const double f1 = bessel_jn(m, x1);
        if (f0 == 0.0) {
            zeros.push_back(x0);
        } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
            std::uintmax_t iterations = 200;
            const auto bracket = boost::math::tools::toms748_solve(f, x0, x1, f0, f1,
                                                                   boost::math::tools::eps_tolerance<double>(52),
                                                                   iterations);
            const double root = 0.5 * (bracket.first + bracket.second);
            if (!(root >= x0 && root <= x1) || iterations >= 200) {
                throw NumericalError("bessel_zeros: bracket refinement failed for J_" + std::to_string(m));
            }
            zeros.push_back(root);
        }
        x0 = x1;
        f0 = f1;
    }
    return zeros;
}

Spectrum disk_spectrum(double R, double emax) {
    if (!(R > 0.0)) throw DomainError("disk_spectrum: radius must be > 0");
    if (!(emax > 0.0)) throw DomainError("disk_spectrum: emax must be > 0");
    const double xmax = R * std::sqrt(emax);
    Spectrum sp;
    sp.shape = "disk";
    sp.emax = emax;
    // j_{m,1} > m bounds the range of orders.
    for (int m = 0; m < xmax; ++m) {
        const auto zeros = bessel_zeros(m, xmax);
        for (double j : zeros) {
            const double e = (j / R) * (j / R);
            if (e > emax) continue;
            sp.eigenvalues.push_back(e);
            if (m > 0) sp.eigenvalues.push_back(e);
        }
    }
    if (sp.eigenvalues.empty()) throw EmptySpectrum("disk_spectrum: emax is below the ground state");
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
    return sp;
}

StaircaseResidual staircase_residual(const Spectrum& sp, const SpectralExpansion& e, double e1, double e2,
                                     std::size_t grid_points, std::size_t blocks) {
    if (!(e1 > 0.0 && e2 > e1)) throw DomainError("staircase_residual: need 0 < E1 < E2");
    if (e2 > sp.emax) throw DomainError("staircase_residual: window extends beyond the spectrum's emax");
    if (blocks < 2 || grid_points < blocks) throw DomainError("staircase_residual: need grid_points >= blocks >= 2");
    StaircaseResidual out;
    out.eigenvalues_in_window = sp.count_below(e2) - sp.count_below(e1);
    if (out.eigenvalues_in_window < 100) {
        throw InsufficientData("staircase_residual: window holds " + std::to_string(out.eigenvalues_in_window) +
                               " eigenvalues, need at least 100");
    }
    out.grid_points = grid_points;
    const auto& ev = sp.eigenvalues;
    std::size_t idx = sp.count_below(e1);
    std::vector<double> block_sum(blocks, 0.0);
    std::vector<std::size_t> block_count(blocks, 0);
    double total = 0.0;
    const double h = (e2 - e1) / static_cast<double>(grid_points - 1);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double energy = e1 + h * static_cast<double>(i);
        while (idx < ev.size() && ev[idx] <= energy) ++idx;
        const double r = static_cast<double>(idx) - (e.const_coef * energy + 2.0 * e.inv_sqrt_coef * std::sqrt(energy));
        total += r;
        const std::size_t b = i * blocks / grid_points;
        block_sum[b] += r;
        ++block_count[b];
    }
    out.mean = total / static_cast<double>(grid_points);
    double var = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        const double d = block_sum[b] / static_cast<double>(block_count[b]) - out.mean;
        var += d * d;
    }
    var /= static_cast<double>(blocks - 1);
    out.stderr_ = std::sqrt(var / static_cast<double>(blocks));
    return out;
}

} // namespace weylbill
