#include "weylbill/weyl.hpp"

#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"

#include <cmath>

namespace weylbill {

const char* to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::dirichlet ? "dirichlet" : "neumann";
}

BoundaryCondition parse_boundary_condition(const std::string& text) {
    if (text == "dirichlet") return BoundaryCondition::dirichlet;
    if (text == "neumann") return BoundaryCondition::neumann;
    throw DomainError("unknown boundary condition '" + text + "'");
}

double weyl_corner_term(double alpha) {
    return (kPi / alpha - alpha / kPi) / 24.0;
}

double corner_orbit_term(double alpha) {
    const double s = std::sin(alpha);
    return alpha / (8.0 * kPi * s * s);
}

double corner_edge_correction(double alpha) {
    return std::cos(alpha) / (4.0 * kPi * std::sin(alpha));
}

double corner_semiclassical_total(double alpha) {
    const double s = std::sin(alpha);
    return (alpha / (s * s) + 2.0 * std::cos(alpha) / s) / (8.0 * kPi);
}

SpectralExpansion weyl_expansion(const GeometricMeasures& m, BoundaryCondition bc) {
    SpectralExpansion e;
    e.const_coef = m.area / (4.0 * kPi);
    const double length = m.perimeter / (8.0 * kPi);
    e.inv_sqrt_coef = bc == BoundaryCondition::dirichlet ? -length : length;
    e.breakdown.curvature_part = m.curvature_integral / (12.0 * kPi);
    for (const auto& c : m.corners) {
        const double term = weyl_corner_term(c.alpha);
        e.breakdown.per_corner.push_back(term);
        e.breakdown.corner_part += term;
    }
    e.delta_coef = e.breakdown.curvature_part + e.breakdown.corner_part;
    e.corner_part_unverified = bc == BoundaryCondition::neumann && !m.corners.empty();
    return e;
}

double smooth_counting(const SpectralExpansion& e, double energy) {
    if (!(energy > 0.0)) throw DomainError("smooth_counting: energy must be > 0");
    return e.const_coef * energy + 2.0 * e.inv_sqrt_coef * std::sqrt(energy) + e.delta_coef;
}

CornerCoefficients corner_coeffs(double alpha) {
    if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("corner_coeffs: alpha must lie in (0, pi)");
    CornerCoefficients c;
    c.alpha = alpha;
    c.weyl = weyl_corner_term(alpha);
    if (alpha <= 0.5 * kPi) {
        c.orbit = corner_orbit_term(alpha);
        c.edge_correction = corner_edge_correction(alpha);
        c.total_semiclassical = corner_semiclassical_total(alpha);
    } else {
        c.absent_reason = "ObtuseNoClosedOrbit";
    }
    return c;
}

} // namespace weylbill
