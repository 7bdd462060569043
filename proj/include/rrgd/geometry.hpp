#pragma once

// Planar primitives used by the crossing counter and the ray caster.
//
// All predicates work on doubles with relative tolerances: an orientation
// whose signed area is within 1e-12 * scale^2 of zero is reported as
// collinear, where scale is the extent of the operands.

#include <cmath>
#include <numbers>
#include <optional>

namespace rrgd {

struct Point {
    double x{0.0};
    double y{0.0};

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
constexpr Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
    Point a;
    Point b;
};

/// Direction in radians, always normalized to [0, 2pi).
class Angle {
public:
    constexpr Angle() = default;

    static Angle radians(double theta);

    constexpr double value() const { return theta_; }
    /// Unit vector; components below 1e-15 (rounding residue of pi/2
    /// multiples) are flushed to zero so axis directions are exact.
    Point unit() const;

    friend constexpr bool operator==(Angle, Angle) = default;

private:
    explicit constexpr Angle(double normalized) : theta_(normalized) {}
    double theta_{0.0};
};

/// Angle of the line through a segment (direction a -> b).
Angle segment_angle(const Segment& s);

/// Relative tolerance applied to signed areas.
inline constexpr double kOrientTolerance = 1e-12;

/// Sign of the signed area of (p, q, r): +1 counter-clockwise, -1 clockwise,
/// 0 when collinear within tolerance.
int orient(Point p, Point q, Point r);

/// True iff the segments meet in exactly one point interior to both.
/// Shared endpoints, touching and collinear overlap are not crossings.
bool segments_cross(const Segment& s1, const Segment& s2);

struct HalflineHit {
    Point point;
    double t{0.0};  // distance from origin along the unit direction
    double u{0.0};  // parameter on the segment, in [0, 1]
};

/// Intersection of the open half-line origin + t*dir (t > min_t) with s.
/// Parallel and collinear configurations yield no hit.
std::optional<HalflineHit> halfline_hit(Point origin, Angle dir, const Segment& s, double min_t);
/// Overload taking the unit direction vector directly.
std::optional<HalflineHit> halfline_hit(Point origin, Point unit_dir, const Segment& s,
                                        double min_t);

/// Same as halfline_hit, returning only the point. min_t defaults to
/// 1e-9 times the extent of the configuration.
std::optional<Point> halfline_segment_intersection(Point origin, Angle dir, const Segment& s);
std::optional<Point> halfline_segment_intersection(Point origin, Angle dir, const Segment& s,
                                                   double min_t);

/// Billiard reflection of a direction on a line of angle edge_angle.
Angle reflect_angle(Angle incoming, Angle edge_angle);

}  // namespace rrgd
