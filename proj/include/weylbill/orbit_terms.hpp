#pragma once

#include "weylbill/birkhoff.hpp"
#include "weylbill/quadrature.hpp"
#include "weylbill/specfun.hpp"

#include <array>

namespace weylbill {

/// Semiclassical amplitude data of a closed orbit family member.
/// Units: 2m = hbar = 1, E = k^2.
struct ClosedOrbitAmplitude {
    double D = 0.0;       // density factor |d2S/dE2| |det C|
    double detC = 0.0;    // |det C| of the time-domain propagator
    double R = 0.0;       // Hamilton's principal function at time t
    double S = 0.0;       // action at energy E
    double t = 0.0;       // traversal time at energy E
    double length = 0.0;
    int bounce_count = 0;
    /// Phase index fixed by matching the Hankel asymptotics, in units of pi/2.
    int maslov = 0;
};

/// Orbit normal to the wall at height y, bouncing once on a wall of
/// curvature c. Throws CausticError when c y >= 1.
ClosedOrbitAmplitude single_reflection_factors(double y, double k, double c = 0.0);

/// |det C| and D from the transverse monodromy of a closed orbit of length L
/// traversed at momentum k: |det C| = k / (2 t |M12|), D = L / (4 k^3) |det C|.
ClosedOrbitAmplitude amplitude_from_monodromy(const Mat2& monodromy, double k, double length, int bounces);

/// Time-domain propagator along the single-reflection closed orbit:
/// -(1 / (4 i pi t)) exp(i y^2 / t).
Complex single_reflection_propagator(double y, double t);

/// Uniform Green's function of the single-reflection family: -(1/4i) H0(2 k y).
Complex single_reflection_green(double y, double k);

/// Stationary-phase Green's function: -(e^{-i pi/4} / (4 i sqrt(pi k y))) exp(2 i k y),
/// the large-argument limit of single_reflection_green.
Complex green_stationary(double y, double k);

/// Green's function from the time integral G = (1/i) int_0^inf K(t) exp(i E t) dt.
///
/// Regulated by y^2/t + E t -> (1 + i eps)(y^2/t + E t), i.e. the Hankel
/// argument 2ky -> 2ky(1 + i eps), and extrapolated over the damping ladder.
QuadratureResult green_time_integral(double y, double k, const DampingLadder& ladder = {},
                                     const QuadOptions& opt = {});

/// Closed form of the length contribution -L / (8 pi sqrt(E)).
double length_term_density(double L, double E);

/// The same density built from green_stationary instead of the Hankel form:
/// -(L/pi) Im int_0^inf G(y) dy with the y^{-1/2} integral done exactly.
double stationary_length_density(double L, double E);

struct LengthTermCheck {
    double closed_form = 0.0;
    double quadrature = 0.0;
    double error_estimate = 0.0;
    double relative_difference = 0.0;
};

/// Recompute the length term as -(L/pi) Im int_0^inf G_co(y) dy by damped
/// quadrature. Throws NonConvergence if the estimate exceeds `tol`.
LengthTermCheck length_term_density_verify(double L, double E, double tol = 1e-6);

/// Closed double-reflection orbit in an acute wedge with sides OA (angle 0)
/// and OB (angle alpha).
struct CornerOrbit {
    double alpha = 0.0;
    Vec2 source;                  // Q
    std::array<Vec2, 4> images{}; // Q1, Q2, Q-1, Q-2
    Vec2 bounce_on_ob;            // first bounce (side OB)
    Vec2 bounce_on_oa;            // second bounce (side OA)
    double length = 0.0;
};

/// Throws ObtuseNoClosedOrbit for alpha >= pi/2.
CornerOrbit acute_corner_orbit(double alpha, double r, double theta1);

/// +(1 / (4 i pi t)) exp(i (r sin alpha)^2 / t): two Dirichlet bounces.
Complex corner_orbit_propagator(double r, double alpha, double t);

/// delta(E) coefficient of the closed double-reflection orbits, from the
/// wedge integral E * alpha * int_0^inf r G_co2(r) dr evaluated by damped
/// quadrature (no closed form used).
QuadratureResult corner_orbit_delta_quadrature(double alpha, double k = 1.0);

/// delta(E) coefficient of the edge-truncation correction from the
/// triangle integral, also by damped quadrature.
QuadratureResult corner_edge_delta_quadrature(double alpha, double k = 1.0);

} // namespace weylbill
