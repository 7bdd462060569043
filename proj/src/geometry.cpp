#include "rrgd/geometry.hpp"

#include <algorithm>

namespace rrgd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double extent(Point p, Point q, Point r) {
    const Point d1 = q - p;
    const Point d2 = r - p;
    return std::max({std::abs(d1.x), std::abs(d1.y), std::abs(d2.x), std::abs(d2.y)});
}

}  // namespace

Angle Angle::radians(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2pi
    if (t >= kTwoPi) t = 0.0;
    return Angle(t);
}

Point Angle::unit() const {
    auto flush = [](double c) { return std::abs(c) < 1e-15 ? 0.0 : c; };
    return {flush(std::cos(theta_)), flush(std::sin(theta_))};
}

Angle segment_angle(const Segment& s) {
    return Angle::radians(std::atan2(s.b.y - s.a.y, s.b.x - s.a.x));
}

int orient(Point p, Point q, Point r) {
    const double area = cross(q - p, r - p);
    const double scale = extent(p, q, r);
    if (std::abs(area) <= kOrientTolerance * scale * scale) return 0;
    return area > 0.0 ? 1 : -1;
}

bool segments_cross(const Segment& s1, const Segment& s2) {
    const int o1 = orient(s1.a, s1.b, s2.a);
    const int o2 = orient(s1.a, s1.b, s2.b);
    if (o1 * o2 >= 0) return false;
    const int o3 = orient(s2.a, s2.b, s1.a);
    const int o4 = orient(s2.a, s2.b, s1.b);
    return o3 * o4 < 0;
}

std::optional<HalflineHit> halfline_hit(Point origin, Angle dir, const Segment& s, double min_t) {
    return halfline_hit(origin, dir.unit(), s, min_t);
}

std::optional<HalflineHit> halfline_hit(Point origin, Point d, const Segment& s, double min_t) {
    const Point e = s.b - s.a;
    const double denom = cross(d, e);
    const double len = norm(e);
    // Parallel (or degenerate) segment: sin of the angle between them ~ 0.
    if (len == 0.0 || std::abs(denom) <= kOrientTolerance * len) return std::nullopt;

    const Point w = s.a - origin;
    const double t = cross(w, e) / denom;
    const double u = cross(w, d) / denom;
    if (!(t > min_t) || u < 0.0 || u > 1.0) return std::nullopt;
    return HalflineHit{s.a + u * e, t, u};
}

std::optional<Point> halfline_segment_intersection(Point origin, Angle dir, const Segment& s,
                                                   double min_t) {
    if (auto hit = halfline_hit(origin, dir, s, min_t)) return hit->point;
    return std::nullopt;
}

std::optional<Point> halfline_segment_intersection(Point origin, Angle dir, const Segment& s) {
    const double scale = std::max({distance(origin, s.a), distance(origin, s.b), 1e-300});
    return halfline_segment_intersection(origin, dir, s, 1e-9 * scale);
}

Angle reflect_angle(Angle incoming, Angle edge_angle) {
    return Angle::radians(2.0 * edge_angle.value() - incoming.value());
}

}  // namespace rrgd
