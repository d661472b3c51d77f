#pragma once

#include "weylbill/geometry.hpp"

#include <vector>

namespace weylbill {

/// Map from the half-plane v >= 0 onto the wedge of angle alpha.
struct FlattenMap {
    double alpha = 0.0;
    double gamma = 0.0;     // pi / alpha
    double gamma_bar = 0.0; // alpha / pi

    static FlattenMap from_alpha(double alpha);
    static FlattenMap from_gamma(double gamma);
};

/// r^2 = u^2 + gamma^2 v^2, phi = atan2(gamma v, u);
/// (x, y) = r (cos(gamma_bar phi), sin(gamma_bar phi)). Throws Singular at
/// the origin. The map has unit Jacobian.
Vec2 flatten(const FlattenMap& map, double u, double v);

/// Central-difference Jacobian determinant of flatten at (u, v).
double flatten_jacobian(const FlattenMap& map, double u, double v, double h = 1e-5);

struct CornerCoeffForms {
    double lhs = 0.0;  // (pi^2 - alpha^2) / (24 pi alpha)
    double rhs1 = 0.0; // (gamma - gamma_bar) / 24
    double rhs2 = 0.0; // (gamma^2 - 1) / (24 gamma)
};

CornerCoeffForms corner_coeff_identity(double alpha);

/// Difference between the Cartesian Laplacian of a fixed smooth test
/// function and the flat (u, v) Laplacian of its pull-back, at one point,
/// for a ladder of gamma values approaching 1.
struct LaplacianDefectScaling {
    std::vector<double> gammas;
    std::vector<double> defects;
    /// Least-squares slope of log|defect| against log|gamma^2 - 1|.
    double exponent = 0.0;
    /// defect / (gamma^2 - 1) at the ladder point closest to gamma = 1.
    double proportionality = 0.0;
};

LaplacianDefectScaling laplacian_defect_scaling(double u, double v, const std::vector<double>& gammas);

} // namespace weylbill
