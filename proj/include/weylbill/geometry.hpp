#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace weylbill {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
/// Counterclockwise rotation by pi/2.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

enum class SegmentKind { line, arc };

/// A straight segment or a circular arc, parameterized by arclength from
/// its start point.
class Segment {
public:
    static Segment line(Vec2 from, Vec2 to);
    /// Arc around `center` from angle a0 to a1; `ccw` selects the sweep
    /// direction. a1 == a0 + 2 pi (ccw) gives a full circle.
    static Segment arc(Vec2 center, double radius, double a0, double a1, bool ccw);

    SegmentKind kind() const { return kind_; }
    double length() const;
    Vec2 start() const { return point_at(0.0); }
    Vec2 end() const { return point_at(length()); }
    Vec2 point_at(double local_s) const;
    Vec2 tangent_at(double local_s) const;
    /// Signed curvature: +1/r when the center is on the interior (left) side.
    double curvature() const;

    // Line data.
    Vec2 from() const { return from_; }
    Vec2 to() const { return to_; }
    // Arc data; sweep is signed (positive = counterclockwise).
    Vec2 center() const { return center_; }
    double radius() const { return radius_; }
    double start_angle() const { return a0_; }
    double sweep() const { return sweep_; }

private:
    SegmentKind kind_ = SegmentKind::line;
    Vec2 from_{};
    Vec2 to_{};
    Vec2 center_{};
    double radius_ = 0.0;
    double a0_ = 0.0;
    double sweep_ = 0.0;
};

struct Corner {
    Vec2 position;
    double alpha;          // interior angle in (0, 2 pi)
    double s;              // arclength position of the vertex
    std::size_t incoming;  // segment ending at the vertex
    std::size_t outgoing;  // segment starting at the vertex
};

/// Closed, counterclockwise chain of segments (interior on the left).
class Boundary {
public:
    static constexpr double kClosureTolerance = 1e-9;
    static constexpr double kCornerTolerance = 1e-9;

    /// Validates closure, segment lengths and orientation; detects corners.
    explicit Boundary(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<Corner>& corners() const { return corners_; }
    double perimeter() const { return offsets_.back(); }
    /// Arclength at which segment i starts.
    double segment_offset(std::size_t i) const { return offsets_[i]; }
    double signed_area() const { return area_; }

    struct Location {
        std::size_t segment;
        double local_s;
    };
    /// Segment containing arclength s (wrapped into [0, perimeter)).
    Location locate(double s) const;
    double wrap(double s) const;

private:
    std::vector<Segment> segments_;
    std::vector<double> offsets_;
    std::vector<Corner> corners_;
    double area_ = 0.0;
};

struct GeometricMeasures {
    double area = 0.0;
    double perimeter = 0.0;
    double curvature_integral = 0.0;  // integral of c(s) ds over smooth parts
    std::vector<Corner> corners;
};

GeometricMeasures measures(const Boundary& b);

struct Frame {
    Vec2 point;
    Vec2 tangent;
    Vec2 inward_normal;
    double curvature;
};

/// Local frame at arclength s. Throws CornerPoint when s sits on a corner.
Frame frame_at(const Boundary& b, double s);

/// Parse the line-oriented `billiard v1` text format.
Boundary parse_geometry(std::string_view text);
std::string serialize(const Boundary& b);

} // namespace weylbill
