#include "rrgd/drawing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rrgd {

namespace {

struct Extent {
    Point lo;
    Point hi;
};

Extent tight_extent(std::span<const Point> points) {
    Extent ext{points.front(), points.front()};
    for (Point p : points) {
        ext.lo.x = std::min(ext.lo.x, p.x);
        ext.lo.y = std::min(ext.lo.y, p.y);
        ext.hi.x = std::max(ext.hi.x, p.x);
        ext.hi.y = std::max(ext.hi.y, p.y);
    }
    return ext;
}

}  // namespace

std::array<Point, 4> BoundingBox::corners() const {
    return {min, Point{max.x, min.y}, max, Point{min.x, max.y}};
}

Segment BoundingBox::side(std::size_t i) const {
    const auto c = corners();
    return {c[i % 4], c[(i + 1) % 4]};
}

BoundingBox BoundingBox::around(std::span<const Point> points, double margin) {
    if (points.empty()) throw std::invalid_argument("bounding box of an empty point set");
    if (!(margin > 0.0)) throw std::invalid_argument("bounding box margin must be positive");
    const Extent ext = tight_extent(points);
    return {ext.lo - Point{margin, margin}, ext.hi + Point{margin, margin}, margin};
}

double default_margin(std::span<const Point> points) {
    if (points.empty()) return 1.0;
    const Extent ext = tight_extent(points);
    const double span = std::max(ext.hi.x - ext.lo.x, ext.hi.y - ext.lo.y);
    return span > 0.0 ? 0.1 * span : 1.0;
}

Drawing::Drawing(std::vector<Point> positions, BoundingBox box)
    : positions_(std::move(positions)), box_(box) {
    if (!(box_.min.x < box_.max.x && box_.min.y < box_.max.y)) {
        throw std::invalid_argument("bounding box must have positive width and height");
    }
    for (std::size_t v = 0; v < positions_.size(); ++v) {
        const Point p = positions_[v];
        if (!is_finite(p)) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has a non-finite position");
        }
        if (!box_.contains(p)) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " lies outside the box");
        }
    }
}

Drawing Drawing::with_default_box(std::vector<Point> positions) {
    if (positions.empty()) {
        return Drawing({}, BoundingBox{{-1.0, -1.0}, {1.0, 1.0}, 1.0});
    }
    const double margin = default_margin(positions);
    const BoundingBox box = BoundingBox::around(positions, margin);
    return Drawing(std::move(positions), box);
}

void Drawing::set_position(VertexId v, Point p) {
    if (!is_finite(p) || !box_.contains(p)) {
        throw std::invalid_argument("position of vertex " + std::to_string(v) +
                                    " must be finite and inside the box");
    }
    positions_[v] = p;
}

}  // namespace rrgd
