#include "weylbill/orbit_terms.hpp"

#include "weylbill/errors.hpp"

#include <cmath>
#include <string>

namespace weylbill {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be finite and > 0");
}

Vec2 polar(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta)};
}

Vec2 reflect_across_line_through_origin(Vec2 p, double angle) {
    const double c = std::cos(2.0 * angle);
    const double s = std::sin(2.0 * angle);
    return {c * p.x + s * p.y, s * p.x - c * p.y};
}

// Point where segment a->b crosses the ray from the origin at angle phi.
Vec2 crossing_with_ray(Vec2 a, Vec2 b, double phi) {
    const Vec2 dir{std::cos(phi), std::sin(phi)};
    const Vec2 d = b - a;
    const double t = -cross(a, dir) / cross(d, dir);
    return a + t * d;
}

} // namespace

ClosedOrbitAmplitude single_reflection_factors(double y, double k, double c) {
    require_positive(y, "y");
    require_positive(k, "k");
    const double focus = 1.0 - c * y;
    if (!(focus > 0.0)) {
        throw CausticError("single_reflection_factors: c y = " + std::to_string(c * y) + " >= 1 (caustic)");
    }
    ClosedOrbitAmplitude a;
    a.length = 2.0 * y;
    a.t = y / k;
    a.R = y * y / a.t;
    a.S = 2.0 * k * y;
    a.D = 1.0 / (8.0 * k * y * focus);
    a.detC = 1.0 / (4.0 * a.t * a.t * focus);
    a.bounce_count = 1;
    a.maslov = 2;
    return a;
}

ClosedOrbitAmplitude amplitude_from_monodromy(const Mat2& monodromy, double k, double length, int bounces) {
    require_positive(k, "k");
    require_positive(length, "length");
    ClosedOrbitAmplitude a;
    a.length = length;
    a.t = length / (2.0 * k);
    a.R = length * length / (4.0 * a.t);
    a.S = k * length;
    // Longitudinal d r / d p = 2 t at fixed time; transverse d r / d p = M12 / k.
    a.detC = k / (2.0 * a.t * std::abs(monodromy.m12));
    a.D = length / (4.0 * k * k * k) * a.detC;
    a.bounce_count = bounces;
    a.maslov = 2 * bounces;
    return a;
}

Complex single_reflection_propagator(double y, double t) {
    require_positive(t, "t");
    return -std::exp(kI * (y * y / t)) / (4.0 * kI * kPi * t);
}

Complex single_reflection_green(double y, double k) {
    require_positive(y, "y");
    require_positive(k, "k");
    return -hankel1_0(2.0 * k * y) / (4.0 * kI);
}

Complex green_stationary(double y, double k) {
    require_positive(y, "y");
    require_positive(k, "k");
    // 2 pi / (2 pi i)^{3/2} sqrt(D) exp(i S - i mu pi / 2), mu = 2.
    const auto amp = single_reflection_factors(y, k, 0.0);
    const Complex prefactor = 2.0 * kPi / std::pow(2.0 * kPi * kI, 1.5);
    return prefactor * std::sqrt(amp.D) * std::exp(kI * (amp.S - amp.maslov * kPi / 2.0));
}

QuadratureResult green_time_integral(double y, double k, const DampingLadder& ladder, const QuadOptions& opt) {
    require_positive(y, "y");
    require_positive(k, "k");
    const double energy = k * k;
    // t = (y / k) e^u, so dt = t du and the two ends of the time axis map to
    // u -> -inf and u -> +inf symmetrically; fold onto u >= 0.
    auto integrand = [=](double u, double eps) -> Complex {
        Complex sum{};
        for (double sign : {1.0, -1.0}) {
            const double t = (y / k) * std::exp(sign * u);
            const double phase = y * y / t + energy * t;
            const Complex kernel = single_reflection_propagator(y, t) * std::exp(kI * energy * t);
            sum += kernel * t * std::exp(-eps * phase) / kI;
        }
        return sum;
    };
    auto cutoff = [=](double eps) { return std::acosh(std::max(1.0, 25.0 / (eps * k * y))); };
    return integrate_damped_ray(integrand, 0.0, cutoff, ladder, opt);
}

double length_term_density(double L, double E) {
    require_positive(L, "L");
    require_positive(E, "E");
    return -L / (8.0 * kPi * std::sqrt(E));
}

double stationary_length_density(double L, double E) {
    require_positive(L, "L");
    require_positive(E, "E");
    const double k = std::sqrt(E);
    // G(y) = g y^{-1/2} e^{2iky}; int_0^inf y^{-1/2} e^{2iky} dy = sqrt(pi / 2k) e^{i pi/4}.
    const Complex g = green_stationary(1.0, k) * std::exp(-2.0 * kI * k);
    const Complex integral = g * std::sqrt(kPi / (2.0 * k)) * std::exp(kI * (kPi / 4.0));
    return -(L / kPi) * integral.imag();
}

LengthTermCheck length_term_density_verify(double L, double E, double tol) {
    const double closed = length_term_density(L, E);
    const double k = std::sqrt(E);
    auto integrand = [=](double y, double eps) -> Complex {
        return single_reflection_green(y, k) * std::exp(-2.0 * k * eps * y);
    };
    auto cutoff = [=](double eps) { return 20.0 / (k * eps); };
    const auto r = integrate_damped_ray(integrand, 0.0, cutoff, DampingLadder{}, QuadOptions{1e-13, 1e-11, 20000});
    LengthTermCheck out;
    out.closed_form = closed;
    out.quadrature = -(L / kPi) * r.value.imag();
    out.error_estimate = (L / kPi) * r.error_estimate;
    out.relative_difference = std::abs(out.quadrature - closed) / std::abs(closed);
    if (out.error_estimate > tol * std::abs(closed) || !r.converged) {
        throw NonConvergence("length_term_density_verify: quadrature did not converge", out.quadrature,
                             out.error_estimate);
    }
    return out;
}

CornerOrbit acute_corner_orbit(double alpha, double r, double theta1) {
    if (!(alpha > 0.0)) throw DomainError("acute_corner_orbit: alpha must be > 0");
    if (alpha >= 0.5 * kPi) {
        throw ObtuseNoClosedOrbit("acute_corner_orbit: no closed double-reflection orbit for alpha >= pi/2");
    }
    require_positive(r, "r");
    if (!(theta1 > 0.0 && theta1 < alpha)) throw DomainError("acute_corner_orbit: theta1 must lie in (0, alpha)");

    CornerOrbit o;
    o.alpha = alpha;
    o.source = polar(r, theta1);
    o.images = {polar(r, 2.0 * alpha - theta1), polar(r, 2.0 * alpha + theta1), polar(r, -theta1),
                polar(r, -2.0 * alpha + theta1)};
    const Vec2 q2 = o.images[1];
    o.bounce_on_ob = crossing_with_ray(o.source, q2, alpha);
    // The second crossing lies on the image of OA across OB; fold it back.
    o.bounce_on_oa = reflect_across_line_through_origin(crossing_with_ray(o.source, q2, 2.0 * alpha), alpha);
    o.length = norm(q2 - o.source);
    return o;
}

Complex corner_orbit_propagator(double r, double alpha, double t) {
    require_positive(r, "r");
    require_positive(t, "t");
    const double h = r * std::sin(alpha);
    return std::exp(kI * (h * h / t)) / (4.0 * kI * kPi * t);
}

namespace {

// E * int_0^inf z * Green(z) dz with Green(z) = (1/4i) H0(a z), damped.
QuadratureResult delta_from_first_moment(double a, double E) {
    auto integrand = [=](double z, double eps) -> Complex {
        return z * hankel1_0(a * z) / (4.0 * kI) * std::exp(-eps * a * z);
    };
    auto cutoff = [=](double eps) { return 45.0 / (a * eps); };
    auto r = integrate_damped_ray(integrand, 0.0, cutoff, DampingLadder{}, QuadOptions{1e-13, 1e-11, 20000});
    r.value *= E;
    r.error_estimate *= E;
    return r;
}

} // namespace

QuadratureResult corner_orbit_delta_quadrature(double alpha, double k) {
    if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("corner_orbit_delta_quadrature: alpha must lie in (0, pi)");
    require_positive(k, "k");
    // Angular integration over the wedge is trivial: the orbit length does
    // not depend on the polar angle of Q.
    auto r = delta_from_first_moment(2.0 * k * std::sin(alpha), k * k);
    r.value *= alpha;
    r.error_estimate *= alpha;
    return r;
}

QuadratureResult corner_edge_delta_quadrature(double alpha, double k) {
    if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("corner_edge_delta_quadrature: alpha must lie in (0, pi)");
    require_positive(k, "k");
    // Single-reflection orbits are absent in the strip 0 < x < y cot(alpha)
    // next to each side; removing -(1/4i) H0 there adds +(1/4i) H0.
    auto r = delta_from_first_moment(2.0 * k, k * k);
    const double weight = 2.0 * std::cos(alpha) / std::sin(alpha);
    r.value *= weight;
    r.error_estimate *= std::abs(weight);
    return r;
}

} // namespace weylbill
