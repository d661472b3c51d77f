#pragma once

#include "weylbill/weyl.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace weylbill {

/// Dirichlet eigenvalues up to emax, ascending, degeneracies repeated.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::string shape;
    double emax = 0.0;

    /// N(E): number of eigenvalues <= E (right-continuous).
    std::size_t count_below(double energy) const;
};

/// pi^2 (m^2 / a^2 + n^2 / b^2) <= emax for m, n >= 1. Throws EmptySpectrum
/// when emax is below the ground state.
Spectrum rectangle_spectrum(double a, double b, double emax);

/// (j_{m,n} / R)^2 <= emax; m >= 1 zeros appear twice. Throws NumericalError
/// if a bracket fails to hold a sign change.
Spectrum disk_spectrum(double R, double emax);

/// Positive zeros of J_m below xmax, ascending.
std::vector<double> bessel_zeros(int m, double xmax);

struct StaircaseResidual {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t eigenvalues_in_window = 0;
    std::size_t grid_points = 0;
};

/// Mean over a uniform energy grid on [e1, e2] of
/// N(E) - (const_coef E + 2 inv_sqrt_coef sqrt(E)); the standard error is
/// taken from `blocks` contiguous batch means. Throws InsufficientData when
/// the window holds fewer than 100 eigenvalues.
StaircaseResidual staircase_residual(const Spectrum& sp, const SpectralExpansion& e, double e1, double e2,
                                     std::size_t grid_points = 200000, std::size_t blocks = 20);

} // namespace weylbill
