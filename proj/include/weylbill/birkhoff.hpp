#pragma once

#include "weylbill/geometry.hpp"

#include <array>
#include <vector>

namespace weylbill {

/// 2x2 real matrix for transverse linearizations.
struct Mat2 {
    double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 diag(double a, double d) { return {a, 0.0, 0.0, d}; }
    /// [[1, b], [0, 1]]
    static Mat2 shear_upper(double b) { return {1.0, b, 0.0, 1.0}; }
    /// [[1, 0], [c, 1]]
    static Mat2 shear_lower(double c) { return {1.0, 0.0, c, 1.0}; }

    double det() const { return m11 * m22 - m12 * m21; }
    double trace() const { return m11 + m22; }
    Mat2 inverse() const;

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22, a.m21 * b.m11 + a.m22 * b.m21,
                a.m21 * b.m12 + a.m22 * b.m22};
    }
    friend Mat2 operator*(double s, const Mat2& a) { return {s * a.m11, s * a.m12, s * a.m21, s * a.m22}; }
};

/// Largest absolute entrywise difference.
double max_abs_diff(const Mat2& a, const Mat2& b);

/// Boundary arclength s and signed tangential velocity v (unit speed).
struct BirkhoffCoord {
    double s = 0.0;
    double v = 0.0;
    double v_perp() const;
};

/// Transverse displacement and velocity perturbation at a point of an orbit.
struct TransverseState {
    double xi = 0.0;
    double kappa = 0.0;
};

/// One bounce of an orbit: normal velocity component and wall curvature.
struct BounceData {
    double s = 0.0;
    double v_perp = 1.0;
    double curvature = 0.0;
};

/// Orbit from an interior start point through n bounces to an interior end
/// point. `lead_in` is the distance from the start to the first bounce,
/// `lead_out` from the last bounce to the end; chords[i] joins bounce i
/// and i + 1.
struct OrbitSpec {
    std::vector<BounceData> bounces;
    std::vector<double> chords;
    double lead_in = 0.0;
    double lead_out = 0.0;
    double k = 1.0;

    double total_length() const;
};

/// Linearized bounce-to-bounce map in Birkhoff coordinates, closed form.
/// Throws GrazingIncidence if either normal component is <= 0.
Mat2 linearized_bounce_map(double v1_perp, double v2_perp, double l12, double c1, double c2);

/// The same map assembled from its five unit-determinant factors.
Mat2 linearized_bounce_map_factored(double v1_perp, double v2_perp, double l12, double c1, double c2);

enum class Endpoint { start, finish };

struct TransverseJacobians {
    Mat2 s_from_xi;  // (ds, dv) from (xi, kappa)
    Mat2 xi_from_s;  // its inverse
};

/// Jacobians between boundary perturbations (ds, dv) and transverse
/// perturbations (xi, kappa) at a reference point a signed distance y along
/// the path from the bounce. `start` uses the velocity leaving the bounce,
/// `finish` the velocity arriving (v_perp -> -v_perp).
TransverseJacobians transverse_jacobians(double y, double c, double v_perp, Endpoint end);

/// Transverse monodromy matrix of an orbit: (xi_t, kappa_t) = M (xi_0, kappa_0).
/// For all-straight walls it equals (-1)^n [[1, L], [0, 1]].
Mat2 monodromy(const OrbitSpec& orbit);

/// d r_perp / d p'_perp = M12 / k.
double jacobian_r_p(const Mat2& monodromy, double k);

/// Result of tracing one chord of a billiard trajectory.
struct BounceStep {
    BirkhoffCoord next;
    double chord = 0.0;
    double v_perp_from = 0.0;
    double v_perp_to = 0.0;
    double curvature_from = 0.0;
    double curvature_to = 0.0;
};

/// Trace from a boundary point with inward velocity to the next wall hit and
/// reflect specularly. Throws RayEscape, CornerHit or GrazingIncidence.
BounceStep trace_bounce(const Boundary& b, const BirkhoffCoord& p);

/// Nonlinear billiard map (s, v) -> (s', v').
BirkhoffCoord bounce_map(const Boundary& b, const BirkhoffCoord& p);

/// Central-difference Jacobian of bounce_map with step h.
Mat2 bounce_map_jacobian_fd(const Boundary& b, const BirkhoffCoord& p, double h);

/// Linearized map at p from the traced chord data.
Mat2 bounce_map_jacobian(const Boundary& b, const BirkhoffCoord& p);

} // namespace weylbill
