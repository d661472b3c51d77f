#include "weylbill/birkhoff.hpp"

#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace weylbill {

namespace {

void require_not_grazing(double v_perp, const char* who) {
    if (!(v_perp > 0.0)) {
        throw GrazingIncidence(std::string(who) + ": normal velocity component must be > 0, got " +
                               std::to_string(v_perp));
    }
}

} // namespace

Mat2 Mat2::inverse() const {
    const double d = det();
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
    return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12), std::abs(a.m21 - b.m21),
                     std::abs(a.m22 - b.m22)});
}

double BirkhoffCoord::v_perp() const {
    return std::sqrt(std::max(0.0, 1.0 - v * v));
}

double OrbitSpec::total_length() const {
    double l = lead_in + lead_out;
    for (double c : chords) l += c;
    return l;
}

Mat2 linearized_bounce_map(double v1, double v2, double l, double c1, double c2) {
    require_not_grazing(v1, "linearized_bounce_map");
    require_not_grazing(v2, "linearized_bounce_map");
    return {(l * c1 - v1) / v2, -l / (v1 * v2), c1 * v2 + c2 * v1 - l * c1 * c2, (l * c2 - v2) / v1};
}

Mat2 linearized_bounce_map_factored(double v1, double v2, double l, double c1, double c2) {
    require_not_grazing(v1, "linearized_bounce_map_factored");
    require_not_grazing(v2, "linearized_bounce_map_factored");
    const Mat2 chord{-1.0, -l, 0.0, -1.0};
    return Mat2::diag(1.0 / v2, v2) * Mat2::shear_lower(-c2 / v2) * chord * Mat2::shear_lower(-c1 / v1) *
           Mat2::diag(v1, 1.0 / v1);
}

TransverseJacobians transverse_jacobians(double y, double c, double v_perp, Endpoint end) {
    require_not_grazing(v_perp, "transverse_jacobians");
    if (end == Endpoint::start) {
        return {Mat2::diag(1.0 / v_perp, v_perp) * Mat2::shear_lower(c / v_perp) * Mat2::shear_upper(y),
                Mat2::shear_upper(-y) * Mat2::shear_lower(-c / v_perp) * Mat2::diag(v_perp, 1.0 / v_perp)};
    }
    // Arriving velocity: v_perp -> -v_perp in the start-point formulas.
    const double w = -v_perp;
    return {Mat2::diag(1.0 / w, w) * Mat2::shear_lower(c / w) * Mat2::shear_upper(y),
            Mat2::shear_upper(-y) * Mat2::shear_lower(-c / w) * Mat2::diag(w, 1.0 / w)};
}

Mat2 monodromy(const OrbitSpec& orbit) {
    const std::size_t n = orbit.bounces.size();
    if (n == 0) throw DomainError("monodromy: orbit needs at least one bounce");
    if (orbit.chords.size() + 1 != n) throw DomainError("monodromy: need exactly n - 1 chords for n bounces");
    for (double l : orbit.chords) {
        if (!(l > 0.0)) throw DomainError("monodromy: chord lengths must be > 0");
    }
    // The start point lies a distance lead_in before the first bounce, on
    // the arriving leg; the end point lies lead_out past the last bounce.
    const auto& first = orbit.bounces.front();
    const auto& last = orbit.bounces.back();
    Mat2 m = transverse_jacobians(orbit.lead_in, first.curvature, first.v_perp, Endpoint::finish).s_from_xi;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto& a = orbit.bounces[i];
        const auto& b = orbit.bounces[i + 1];
        m = linearized_bounce_map(a.v_perp, b.v_perp, orbit.chords[i], a.curvature, b.curvature) * m;
    }
    return transverse_jacobians(-orbit.lead_out, last.curvature, last.v_perp, Endpoint::start).xi_from_s * m;
}

double jacobian_r_p(const Mat2& monodromy, double k) {
    if (!(k > 0.0)) throw DomainError("jacobian_r_p: k must be > 0");
    return monodromy.m12 / k;
}

namespace {

struct Hit {
    double distance = std::numeric_limits<double>::infinity();
    std::size_t segment = 0;
    double local_s = 0.0;
};

void intersect(const Segment& seg, std::size_t index, Vec2 origin, Vec2 dir, double min_distance, Hit& best) {
    if (seg.kind() == SegmentKind::line) {
        const Vec2 edge = seg.to() - seg.from();
        const double denom = cross(dir, edge);
        if (std::abs(denom) < 1e-300) return;
        const Vec2 rel = seg.from() - origin;
        const double d = cross(rel, edge) / denom;
        const double t = cross(rel, dir) / denom;
        if (d > min_distance && d < best.distance && t >= -1e-12 && t <= 1.0 + 1e-12) {
            best = {d, index, std::clamp(t, 0.0, 1.0) * seg.length()};
        }
        return;
    }
    const Vec2 rel = origin - seg.center();
    const double b = dot(dir, rel);
    const double c = dot(rel, rel) - seg.radius() * seg.radius();
    const double disc = b * b - c;
    if (disc < 0.0) return;
    const double root = std::sqrt(disc);
    // Stable pair of roots of d^2 + 2 b d + c = 0.
    const double q = -b - std::copysign(root, b);
    double roots[2] = {q, q != 0.0 ? c / q : 0.0};
    for (double d : roots) {
        if (!(d > min_distance) || d >= best.distance) continue;
        const Vec2 p = origin + d * dir;
        const double phi = std::atan2(p.y - seg.center().y, p.x - seg.center().x);
        double local = (phi - seg.start_angle()) * (seg.sweep() > 0.0 ? 1.0 : -1.0);
        local = std::fmod(local, 2.0 * kPi);
        if (local < 0.0) local += 2.0 * kPi;
        const double extent = std::abs(seg.sweep());
        if (local > extent + 1e-12) {
            if (2.0 * kPi - local < 1e-12) local = 0.0;
            else continue;
        }
        best = {d, index, std::min(local, extent) * seg.radius()};
    }
}

} // namespace

BounceStep trace_bounce(const Boundary& b, const BirkhoffCoord& p) {
    if (!(std::abs(p.v) < 1.0)) throw GrazingIncidence("trace_bounce: |v| must be < 1");
    const Frame f = frame_at(b, p.s);
    const double vp = p.v_perp();
    const Vec2 dir = p.v * f.tangent + vp * f.inward_normal;
    const double min_distance = 1e-10 * std::max(1.0, b.perimeter());

    Hit best;
    for (std::size_t i = 0; i < b.segments().size(); ++i) {
        intersect(b.segments()[i], i, f.point, dir, min_distance, best);
    }
    if (!std::isfinite(best.distance)) throw RayEscape("trace_bounce: ray does not return to the boundary");

    const double s_hit = b.wrap(b.segment_offset(best.segment) + best.local_s);
    for (const auto& c : b.corners()) {
        double d = std::abs(s_hit - c.s);
        d = std::min(d, b.perimeter() - d);
        if (d < 1e-9) throw CornerHit("trace_bounce: trajectory lands on a corner");
    }
    const Frame g = frame_at(b, s_hit);
    const double arriving = dot(dir, g.inward_normal);
    if (!(arriving < 0.0)) throw RayEscape("trace_bounce: hit the boundary from outside (misoriented geometry?)");
    const Vec2 out = dir - (2.0 * arriving) * g.inward_normal;

    BounceStep step;
    step.next = {s_hit, dot(out, g.tangent)};
    step.chord = best.distance;
    step.v_perp_from = vp;
    step.v_perp_to = -arriving;
    step.curvature_from = f.curvature;
    step.curvature_to = g.curvature;
    if (!(step.v_perp_to > 0.0)) throw GrazingIncidence("trace_bounce: grazing hit");
    return step;
}

BirkhoffCoord bounce_map(const Boundary& b, const BirkhoffCoord& p) {
    return trace_bounce(b, p).next;
}

Mat2 bounce_map_jacobian(const Boundary& b, const BirkhoffCoord& p) {
    const auto st = trace_bounce(b, p);
    return linearized_bounce_map(st.v_perp_from, st.v_perp_to, st.chord, st.curvature_from, st.curvature_to);
}

Mat2 bounce_map_jacobian_fd(const Boundary& b, const BirkhoffCoord& p, double h) {
    const double per = b.perimeter();
    auto ds = [per](double a, double c) {
        double d = std::fmod(a - c, per);
        if (d > 0.5 * per) d -= per;
        if (d < -0.5 * per) d += per;
        return d;
    };
    const auto sp = bounce_map(b, {p.s + h, p.v});
    const auto sm = bounce_map(b, {p.s - h, p.v});
    const auto vp = bounce_map(b, {p.s, p.v + h});
    const auto vm = bounce_map(b, {p.s, p.v - h});
    return {ds(sp.s, sm.s) / (2.0 * h), ds(vp.s, vm.s) / (2.0 * h), (sp.v - sm.v) / (2.0 * h),
            (vp.v - vm.v) / (2.0 * h)};
}

} // namespace weylbill
