#pragma once

#include <array>
#include <span>
#include <vector>

#include "rrgd/geometry.hpp"
#include "rrgd/graph.hpp"

namespace rrgd {

/// Expanded bounding box: the tight box of the initial drawing grown by a
/// margin on every side. Its four sides act as always-reflecting dummy edges
/// and never move during a run.
struct BoundingBox {
    Point min;
    Point max;
    double margin{0.0};

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    double diagonal() const { return std::hypot(width(), height()); }
    bool contains(Point p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }

    /// Corners counter-clockwise from min.
    std::array<Point, 4> corners() const;
    /// Side i joins corners()[i] and corners()[(i + 1) % 4].
    Segment side(std::size_t i) const;

    /// Tight box of the points grown by margin. Throws if margin <= 0 or the
    /// point set is empty.
    static BoundingBox around(std::span<const Point> points, double margin);

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// 0.1 * max(w, h) of the tight box, or 1 when the points span no area.
double default_margin(std::span<const Point> points);

/// Straight-line drawing: one point per vertex plus the fixed expanded box.
class Drawing {
public:
    Drawing() = default;
    /// Throws std::invalid_argument if a position is non-finite or outside box.
    Drawing(std::vector<Point> positions, BoundingBox box);

    /// Box built from the positions with default_margin.
    static Drawing with_default_box(std::vector<Point> positions);

    std::size_t size() const { return positions_.size(); }
    Point position(VertexId v) const { return positions_[v]; }
    std::span<const Point> positions() const { return positions_; }
    const BoundingBox& box() const { return box_; }

    void set_position(VertexId v, Point p);

    Segment segment(const Graph& g, EdgeId e) const {
        const Edge& ed = g.edge(e);
        return {positions_[ed.u], positions_[ed.v]};
    }

    friend bool operator==(const Drawing&, const Drawing&) = default;

private:
    std::vector<Point> positions_;
    BoundingBox box_;
};

}  // namespace rrgd
