#pragma once

// Test-only fixtures and brute-force oracles. Nothing here calls into the
// library's predicates, so the oracles stay independent of the code they check.

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "rrgd/drawing.hpp"
#include "rrgd/graph.hpp"

namespace rrgd::testing {

/// Proper crossing by solving p + t r = q + u s and requiring t, u in (0, 1).
inline bool parametric_cross(Point p1, Point p2, Point q1, Point q2) {
    const double rx = p2.x - p1.x, ry = p2.y - p1.y;
    const double sx = q2.x - q1.x, sy = q2.y - q1.y;
    const double denom = rx * sy - ry * sx;
    if (denom == 0.0) return false;
    const double wx = q1.x - p1.x, wy = q1.y - p1.y;
    const double t = (wx * sy - wy * sx) / denom;
    const double u = (wx * ry - wy * rx) / denom;
    return t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0;
}

/// Smallest |signed area| / scale^2 over the four orientation tests of a
/// segment pair; tiny values mean the pair is near-degenerate.
inline double degeneracy(Point p1, Point p2, Point q1, Point q2) {
    auto rel_area = [](Point a, Point b, Point c) {
        const double area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        const double s = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(c.x - a.x),
                                   std::abs(c.y - a.y)});
        return s == 0.0 ? 0.0 : std::abs(area) / (s * s);
    };
    return std::min({rel_area(p1, p2, q1), rel_area(p1, p2, q2), rel_area(q1, q2, p1),
                     rel_area(q1, q2, p2)});
}

/// All-pairs crossing count with the parametric oracle.
inline std::size_t brute_force_crossings(const Graph& g, const Drawing& d) {
    std::size_t count = 0;
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
        for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            if (ea.shares_vertex(eb)) continue;
            if (parametric_cross(d.position(ea.u), d.position(ea.v), d.position(eb.u),
                                 d.position(eb.v))) {
                ++count;
            }
        }
    }
    return count;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

inline Drawing random_drawing(std::size_t n, std::mt19937_64& rng, double size = 100.0) {
    std::uniform_real_distribution<double> u(0.0, size);
    std::vector<Point> pos(n);
    for (auto& p : pos) p = {u(rng), u(rng)};
    return Drawing::with_default_box(std::move(pos));
}

/// n points on a circle of radius r centred at the origin.
inline std::vector<Point> convex_positions(std::size_t n, double r = 10.0) {
    std::vector<Point> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.1;
        pos[i] = {r * std::cos(a), r * std::sin(a)};
    }
    return pos;
}

/// K4 on the unit square corners; edges 0-2 and 1-3 are the diagonals.
inline Graph k4_graph() { return complete_graph(4); }
inline Drawing k4_square() {
    return Drawing::with_default_box({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Five vertices in general position, a crossing pair of diagonals and two
// edges to an interior vertex.
inline Graph five_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {4, 1}, {4, 3}});
}
inline Drawing five_drawing() { return Drawing::with_default_box({{0, 0}, {10, 1}, {9, 9}, {1, 8}, {5, 4}}); }

// Straightforward re-derivation of the deterministic ray: after every hit the
// next one is searched from scratch, reflections use the vector form, and the
// opacity is recomputed with the parametric crossing test.
struct SimResult {
    std::vector<Point> points;
    bool degenerate{false};
};

inline SimResult simulate_ray(const Graph& g, const Drawing& d, VertexId v, double theta, std::size_t steps) {
    const BoundingBox& box = d.box();
    std::vector<Segment> segs;
    std::vector<bool> is_box;
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).has(v)) continue;
        segs.push_back(d.segment(g, e));
        is_box.push_back(false);
        ids.push_back(e);
    }
    const Point c[4] = {box.min, {box.max.x, box.min.y}, box.max, {box.min.x, box.max.y}};
    for (int i = 0; i < 4; ++i) {
        segs.push_back({c[i], c[(i + 1) % 4]});
        is_box.push_back(true);
    }
    const double diag = std::hypot(box.max.x - box.min.x, box.max.y - box.min.y);

    SimResult out;
    Point p = d.position(v);
    double dx = std::cos(theta), dy = std::sin(theta);
    std::size_t skip = segs.size();
    out.points.push_back(p);
    for (std::size_t step = 0; step < steps; ++step) {
        double best_t = INFINITY, second_t = INFINITY, best_u = 0;
        std::size_t best = segs.size();
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (s == skip) continue;
            const double ex = segs[s].b.x - segs[s].a.x, ey = segs[s].b.y - segs[s].a.y;
            const double den = dx * ey - dy * ex;
            if (den == 0.0) continue;
            const double wx = segs[s].a.x - p.x, wy = segs[s].a.y - p.y;
            const double t = (wx * ey - wy * ex) / den;
            const double u = (wx * dy - wy * dx) / den;
            if (t <= 1e-9 * diag || u < 0.0 || u > 1.0) continue;
            if (t < best_t) {
                second_t = best_t;
                best_t = t;
                best = s;
                best_u = u;
            } else if (t < second_t) {
                second_t = t;
            }
        }
        if (best == segs.size()) {
            out.degenerate = true;
            return out;
        }
        const Segment& s = segs[best];
        const double len = std::hypot(s.b.x - s.a.x, s.b.y - s.a.y);
        if (best_u * len < 1e-6 || (1 - best_u) * len < 1e-6 || second_t - best_t < 1e-6) {
            out.degenerate = true;
            return out;
        }
        const Point hit{p.x + best_t * dx, p.y + best_t * dy};
        out.points.push_back(hit);

        bool reflect = is_box[best];
        if (!reflect) {
            const Point eval{hit.x - 1e-6 * diag * dx, hit.y - 1e-6 * diag * dy};
            const Edge& target = g.edge(ids[best]);
            int sum = 0, count = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                const Edge& inc = g.edge(e);
                if (!inc.has(v) || inc.shares_vertex(target)) continue;
                const bool crosses = parametric_cross(eval, d.position(inc.other(v)),
                                                      d.position(target.u), d.position(target.v));
                sum += crosses ? -1 : 1;
                ++count;
            }
            reflect = count == 0 || sum >= 0;
        }
        if (reflect) {
            const double tx = (s.b.x - s.a.x) / len;
            const double ty = (s.b.y - s.a.y) / len;
            const double k = 2 * (dx * tx + dy * ty);
            dx = k * tx - dx;
            dy = k * ty - dy;
        }
        p = hit;
        skip = best;
    }
    return out;
}

}  // namespace rrgd::testing
