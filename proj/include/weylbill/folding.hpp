#pragma once

#include "weylbill/geometry.hpp"
#include "weylbill/quadrature.hpp"
#include "weylbill/weyl.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weylbill {

/// Exact rational number with a positive denominator in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a) { return {-a.num_, a.den_}; }
    friend Rational operator-(Rational a, Rational b) { return a + (-b); }
    friend Rational operator*(Rational a, Rational b);
    friend bool operator==(Rational a, Rational b) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// c0 + c1 / pi + c2 / pi^2 with rational coefficients.
struct PiSeries {
    Rational c0, c1, c2;

    double value() const;
    std::string str() const;

    friend PiSeries operator+(const PiSeries& a, const PiSeries& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend PiSeries operator-(const PiSeries& a) { return {-a.c0, -a.c1, -a.c2}; }
    friend bool operator==(const PiSeries&, const PiSeries&) = default;
};

/// Four signs of the length-square sum of a closed two-piece path at a
/// rectangular corner. sx1, sy1 belong to the leg Q -> Q', sx2, sy2 to the
/// return leg; true is '+', i.e. a bounce (x sign: side OB, y sign: side OA).
struct SignSignature {
    bool sx1 = false, sy1 = false, sx2 = false, sy2 = false;

    int bounce_count() const { return sx1 + sy1 + sx2 + sy2; }
    /// ASCII form such as "-+-+".
    std::string str() const;
    static SignSignature parse(const std::string& text);
    /// All 16 signatures, ordered by the binary value of (sx1 sy1 sx2 sy2).
    static std::array<SignSignature, 16> all();

    friend bool operator==(const SignSignature&, const SignSignature&) = default;
};

/// Contribution of one closed path. Units: area in A / (4 pi), length in
/// L / (8 pi sqrt(E)), delta as the coefficient of delta(E).
struct PathContribution {
    SignSignature signature;
    PiSeries area_units;
    PiSeries length_units;
    PiSeries delta_units;
};

struct SignatureLedger {
    BoundaryCondition bc = BoundaryCondition::dirichlet;
    std::vector<PathContribution> entries;
    PiSeries area_total;
    PiSeries length_total;
    PiSeries delta_total;
    /// Set for Neumann: entries follow from the reflection-parity rule only.
    bool derived_only = false;
};

/// Rectangular-corner ledger of all 16 two-piece closed paths. Neumann
/// flips the sign of every odd-bounce entry.
SignatureLedger signature_ledger(BoundaryCondition bc);

// ---------------------------------------------------------------------------
// Folding in imaginary time. Kernels are heat kernels K(a, b) at a fixed
// time; the composition integrates the intermediate point over a sector.

using Kernel = std::function<double(Vec2, Vec2)>;

/// Free heat kernel exp(-|a - b|^2 / (4 tau)) / (4 pi tau).
double free_heat_kernel(Vec2 a, Vec2 b, double tau);
Kernel free_kernel(double tau);

/// Polar sector {|p| <= extent, theta_lo <= arg p <= theta_hi} used as the
/// domain of the intermediate point.
struct FoldRegion {
    double theta_lo = 0.0;
    double theta_hi = 2.0 * kPi;
    double extent = 10.0;

    static FoldRegion plane(double extent) { return {0.0, 2.0 * kPi, extent}; }
    static FoldRegion half_plane(double extent) { return {0.0, kPi, extent}; }
    static FoldRegion wedge(double alpha, double extent) { return {0.0, alpha, extent}; }
};

/// int_region K1(a, p) K2(p, b) dp. Throws NonConvergence if the
/// quadrature does not meet its tolerance.
QuadResult<double> fold(const Kernel& k1, const Kernel& k2, Vec2 a, Vec2 b, const FoldRegion& region,
                        const QuadOptions& opt = {1e-13, 1e-9, 4000});

/// int_0^inf r exp(-A r^2 + 2 B r - C) dr for A > 0, stable for any sign of B.
double gaussian_radial_moment(double A, double B, double C);

/// Imaginary-time broken path from Q = (r, theta1) to its double image
/// Q2 = (r, 2 alpha + theta1) through a mediate point Q' = (r0, theta0),
/// each leg of duration tau:
///   int r0 dr0 dtheta0 (4 pi tau)^-2 exp(-(|Q - Q'|^2 + |Q' - Q2|^2) / (4 tau))
/// over 0 <= theta0 <= 3 alpha, |theta0 - theta1| <= pi, |theta0 - theta2| <= pi.
QuadResult<double> broken_path_propagator(double r, double theta1, double alpha, double tau,
                                          const QuadOptions& opt = {0.0, 1e-11, 4000});

/// Closed double-reflection kernel at total time T: exp(-(r sin alpha)^2 / T) / (4 pi T).
double corner_orbit_heat_kernel(double r, double alpha, double T);

/// Unconstrained Gaussian integral over the mediate point: the saddle-point
/// value of the broken path, equal to corner_orbit_heat_kernel(r, alpha, 2 tau).
double broken_path_stationary(double r, double alpha, double tau);

struct CornerConstantSample {
    double tau = 0.0;
    double constant = 0.0;
    double quadrature_error = 0.0;
};

struct CornerConstantResult {
    double alpha = 0.0;
    int grid = 0;
    double value = 0.0;
    double error_estimate = 0.0;
    std::vector<CornerConstantSample> samples;
    /// (pi/alpha - alpha/pi) / 24, for side-by-side comparison.
    double weyl_reference = 0.0;
};

/// Default imaginary-time ladder sin^2(alpha) / 40 * {1, 1/2, 1/4}.
std::vector<double> default_tau_ladder(double alpha);

/// delta(E) coefficient of a corner from two-piece paths built of direct
/// legs and up to two reflections per leg, evaluated in imaginary time over
/// the wedge, with the area and per-side length parts removed and the
/// remainder extrapolated to tau -> 0 in sqrt(tau).
///
/// `grid` sets the quadrature tolerance 10^-(3 + grid). Throws
/// NonConvergence if the error estimate exceeds `tol`.
CornerConstantResult obtuse_corner_constant(double alpha, int grid = 3, const std::vector<double>& tau_ladder = {},
                                            double tol = 1e-3);

} // namespace weylbill
