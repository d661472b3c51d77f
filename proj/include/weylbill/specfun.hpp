#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace weylbill {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

struct BesselJ0Y0 {
    double j0;
    double y0;
};

/// J0(x) and Y0(x) for x > 0.
///
/// Three regimes: ascending series for x <= 8, Miller backward recurrence
/// with the Neumann series for Y0 on (8, 25], and the Hankel asymptotic
/// expansion beyond 25. Absolute error is ~1e-15 everywhere on
/// [1e-8, 1e6]. Throws DomainError for x <= 0 (branch point of Y0).
BesselJ0Y0 bessel_j0y0(double x);

/// Hankel function of the first kind, order zero: J0(x) + i Y0(x).
Complex hankel1_0(double x);

/// Integer-order J_n(x), n >= 0, x >= 0, by Miller backward recurrence.
double bessel_jn(int n, double x);

/// J_0(x) ... J_nmax(x) from a single backward sweep.
std::vector<double> bessel_jn_all(int nmax, double x);

/// Gamma function on x > 0 (Lanczos, g = 7). Throws DomainError for x <= 0.
double gamma_real(double x);

namespace detail {
// Exposed for cross-validation of the crossover points in tests.
BesselJ0Y0 j0y0_series(double x);
BesselJ0Y0 j0y0_miller(double x);
BesselJ0Y0 j0y0_asymptotic(double x);
} // namespace detail

} // namespace weylbill
