#pragma once

#include "weylbill/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylbill {

enum class BoundaryCondition { dirichlet, neumann };

const char* to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(const std::string& text);

/// Smooth mode density  rho(E) ~ const_coef + inv_sqrt_coef / sqrt(E) + delta_coef * delta(E).
///
/// delta(E) is never evaluated pointwise; delta_coef is the additive
/// constant of the smooth counting function.
struct SpectralExpansion {
    double const_coef = 0.0;
    double inv_sqrt_coef = 0.0;
    double delta_coef = 0.0;

    struct Breakdown {
        double curvature_part = 0.0;
        double corner_part = 0.0;
        std::vector<double> per_corner;
    } breakdown;

    /// Set for Neumann: the corner part reuses the Dirichlet formula and has
    /// no independent ground truth.
    bool corner_part_unverified = false;
};

SpectralExpansion weyl_expansion(const GeometricMeasures& m, BoundaryCondition bc);

/// Antiderivative of the expansion: const_coef E + 2 inv_sqrt_coef sqrt(E) + delta_coef.
double smooth_counting(const SpectralExpansion& e, double energy);

/// Corner coefficients of delta(E) for a single corner of interior angle alpha.
struct CornerCoefficients {
    double alpha = 0.0;
    double weyl = 0.0;
    // Present only when the double-reflection orbit family exists (alpha <= pi/2).
    std::optional<double> orbit;
    std::optional<double> edge_correction;
    std::optional<double> total_semiclassical;
    std::string absent_reason;
};

CornerCoefficients corner_coeffs(double alpha);

/// (pi/alpha - alpha/pi) / 24
double weyl_corner_term(double alpha);
/// alpha / (8 pi sin^2 alpha): closed double-reflection orbits.
double corner_orbit_term(double alpha);
/// 1 / (4 pi tan alpha): truncation of the single-reflection family by the corner.
double corner_edge_correction(double alpha);
/// (alpha / sin^2 alpha + 2 cot alpha) / (8 pi)
double corner_semiclassical_total(double alpha);

} // namespace weylbill
