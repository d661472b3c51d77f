#include "weylbill/geometry.hpp"

#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace weylbill {

namespace {

constexpr double kMinSegmentLength = 1e-12;

double normalize_sweep(double delta) {
    // Map to (0, 2 pi]; an exact 2 pi stays a full turn.
    constexpr double two_pi = 2.0 * kPi;
    while (delta <= 0.0) delta += two_pi;
    while (delta > two_pi * (1.0 + 1e-15)) delta -= two_pi;
    return delta;
}

} // namespace

Segment Segment::line(Vec2 from, Vec2 to) {
    Segment s;
    s.kind_ = SegmentKind::line;
    s.from_ = from;
    s.to_ = to;
    if (norm(to - from) < kMinSegmentLength) throw ZeroLengthSegment("line segment has zero length");
    return s;
}

Segment Segment::arc(Vec2 center, double radius, double a0, double a1, bool ccw) {
    if (!(radius > 0.0)) throw DomainError("arc radius must be > 0");
    Segment s;
    s.kind_ = SegmentKind::arc;
    s.center_ = center;
    s.radius_ = radius;
    s.a0_ = a0;
    s.sweep_ = ccw ? normalize_sweep(a1 - a0) : -normalize_sweep(a0 - a1);
    if (std::abs(s.sweep_) * radius < kMinSegmentLength) throw ZeroLengthSegment("arc has zero length");
    return s;
}

double Segment::length() const {
    if (kind_ == SegmentKind::line) return norm(to_ - from_);
    return radius_ * std::abs(sweep_);
}

Vec2 Segment::point_at(double local_s) const {
    if (kind_ == SegmentKind::line) {
        const double t = local_s / length();
        return from_ + t * (to_ - from_);
    }
    const double phi = a0_ + std::copysign(local_s / radius_, sweep_);
    return center_ + radius_ * Vec2{std::cos(phi), std::sin(phi)};
}

Vec2 Segment::tangent_at(double local_s) const {
    if (kind_ == SegmentKind::line) {
        return (1.0 / length()) * (to_ - from_);
    }
    const double phi = a0_ + std::copysign(local_s / radius_, sweep_);
    const Vec2 radial{std::cos(phi), std::sin(phi)};
    return sweep_ > 0.0 ? perp(radial) : -perp(radial);
}

double Segment::curvature() const {
    if (kind_ == SegmentKind::line) return 0.0;
    return sweep_ > 0.0 ? 1.0 / radius_ : -1.0 / radius_;
}

Boundary::Boundary(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw OpenChainError("boundary has no segments");
    const std::size_t n = segments_.size();
    offsets_.assign(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 end = segments_[i].end();
        const Vec2 next = segments_[(i + 1) % n].start();
        if (norm(end - next) > kClosureTolerance) {
            throw OpenChainError("segment " + std::to_string(i) + " ends at (" + std::to_string(end.x) + ", " +
                                 std::to_string(end.y) + ") but segment " + std::to_string((i + 1) % n) +
                                 " starts elsewhere");
        }
        offsets_[i + 1] = offsets_[i] + segments_[i].length();
    }

    // Green's theorem: area = 1/2 closed integral of (x dy - y dx).
    for (const auto& seg : segments_) {
        if (seg.kind() == SegmentKind::line) {
            area_ += 0.5 * cross(seg.from(), seg.to());
        } else {
            const double r = seg.radius();
            const double phi0 = seg.start_angle();
            const double phi1 = phi0 + seg.sweep();
            const Vec2 c = seg.center();
            area_ += 0.5 * (r * r * seg.sweep() + r * c.x * (std::sin(phi1) - std::sin(phi0)) -
                            r * c.y * (std::cos(phi1) - std::cos(phi0)));
        }
    }
    if (!(area_ > 0.0)) {
        throw OrientationError("boundary is clockwise or degenerate (signed area " + std::to_string(area_) +
                               "); interior must lie on the left");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const Vec2 tin = segments_[i].tangent_at(segments_[i].length());
        const Vec2 tout = segments_[j].tangent_at(0.0);
        const double turn = std::atan2(cross(tin, tout), dot(tin, tout));
        if (std::abs(turn) < kCornerTolerance) continue;
        corners_.push_back(Corner{segments_[j].start(), kPi - turn, j == 0 ? 0.0 : offsets_[j], i, j});
    }
}

double Boundary::wrap(double s) const {
    const double p = perimeter();
    double w = std::fmod(s, p);
    if (w < 0.0) w += p;
    return w;
}

Boundary::Location Boundary::locate(double s) const {
    const double w = wrap(s);
    std::size_t i = 0;
    while (i + 1 < segments_.size() && w >= offsets_[i + 1]) ++i;
    return {i, w - offsets_[i]};
}

GeometricMeasures measures(const Boundary& b) {
    GeometricMeasures m;
    m.area = b.signed_area();
    m.perimeter = b.perimeter();
    for (const auto& seg : b.segments()) {
        if (seg.kind() == SegmentKind::arc) m.curvature_integral += seg.sweep();
    }
    m.corners = b.corners();
    return m;
}

Frame frame_at(const Boundary& b, double s) {
    const double w = b.wrap(s);
    for (const auto& c : b.corners()) {
        double d = std::abs(w - c.s);
        d = std::min(d, b.perimeter() - d);
        if (d < Boundary::kCornerTolerance) throw CornerPoint("frame undefined at a corner (s = " + std::to_string(s) + ")");
    }
    const auto loc = b.locate(w);
    const auto& seg = b.segments()[loc.segment];
    const Vec2 t = seg.tangent_at(loc.local_s);
    return Frame{seg.point_at(loc.local_s), t, perp(t), seg.curvature()};
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

double parse_number(const Token& tok, int line_no) {
    double v = 0.0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    if (!tok.text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw SyntaxError("expected a number, got '" + std::string(tok.text) + "'", line_no, tok.column);
    }
    return v;
}

} // namespace

Boundary parse_geometry(std::string_view text) {
    std::vector<Segment> segments;
    bool header_seen = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto tokens = split(line);
        if (tokens.empty() || tokens.front().text.front() == '#') continue;
        if (!header_seen) {
            if (tokens.size() != 2 || tokens[0].text != "billiard" || tokens[1].text != "v1") {
                throw SyntaxError("expected header 'billiard v1'", line_no, tokens.front().column);
            }
            header_seen = true;
            continue;
        }
        const auto& kw = tokens.front();
        auto expect = [&](std::size_t count) {
            if (tokens.size() != count) {
                const int col = tokens.size() > count ? tokens[count].column : static_cast<int>(line.size()) + 1;
                throw SyntaxError("'" + std::string(kw.text) + "' takes " + std::to_string(count - 1) + " fields",
                                  line_no, col);
            }
        };
        if (kw.text == "line") {
            expect(5);
            const Vec2 a{parse_number(tokens[1], line_no), parse_number(tokens[2], line_no)};
            const Vec2 b{parse_number(tokens[3], line_no), parse_number(tokens[4], line_no)};
            try {
                segments.push_back(Segment::line(a, b));
            } catch (const ZeroLengthSegment&) {
                throw ZeroLengthSegment("line " + std::to_string(line_no) + ": zero-length line segment");
            }
        } else if (kw.text == "arc") {
            expect(7);
            const Vec2 c{parse_number(tokens[1], line_no), parse_number(tokens[2], line_no)};
            const double r = parse_number(tokens[3], line_no);
            const double a0 = parse_number(tokens[4], line_no);
            const double a1 = parse_number(tokens[5], line_no);
            const auto& dir = tokens[6];
            if (dir.text != "ccw" && dir.text != "cw") {
                throw SyntaxError("arc direction must be 'ccw' or 'cw'", line_no, dir.column);
            }
            if (!(r > 0.0)) throw SyntaxError("arc radius must be > 0", line_no, tokens[3].column);
            try {
                segments.push_back(Segment::arc(c, r, a0, a1, dir.text == "ccw"));
            } catch (const ZeroLengthSegment&) {
                throw ZeroLengthSegment("line " + std::to_string(line_no) + ": zero-length arc");
            }
        } else {
            throw SyntaxError("unknown record '" + std::string(kw.text) + "'", line_no, kw.column);
        }
    }
    if (!header_seen) throw SyntaxError("missing header 'billiard v1'", 1, 1);
    return Boundary(std::move(segments));
}

std::string serialize(const Boundary& b) {
    std::ostringstream out;
    out << "billiard v1\n";
    char buf[256];
    for (const auto& seg : b.segments()) {
        if (seg.kind() == SegmentKind::line) {
            std::snprintf(buf, sizeof buf, "line %.17g %.17g %.17g %.17g\n", seg.from().x, seg.from().y, seg.to().x,
                          seg.to().y);
        } else {
            std::snprintf(buf, sizeof buf, "arc %.17g %.17g %.17g %.17g %.17g %s\n", seg.center().x, seg.center().y,
                          seg.radius(), seg.start_angle(), seg.start_angle() + seg.sweep(),
                          seg.sweep() > 0.0 ? "ccw" : "cw");
        }
        out << buf;
    }
    return out.str();
}

} // namespace weylbill
