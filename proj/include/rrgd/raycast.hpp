#pragma once

// Ray casting from a vertex. A ray starts at the vertex position, travels
// straight until it meets an edge, and then either reflects on it (billiard
// law) or passes through it depending on the edge opacity. The box sides
// always reflect. After ray_size hits the midpoint of the last polyline
// segment is the candidate position for the vertex.

#include <cstddef>
#include <optional>
#include <vector>

#include "rrgd/drawing.hpp"
#include "rrgd/geometry.hpp"
#include "rrgd/graph.hpp"
#include "rrgd/rng.hpp"

namespace rrgd {

struct OpacityMode {
    enum class Kind { deterministic, randomized };

    Kind kind{Kind::deterministic};
    /// Half-width excess of the randomized threshold interval [-1-eps, 1+eps].
    double epsilon_rand{0.05};

    static OpacityMode deterministic() { return {Kind::deterministic, 0.05}; }
    /// Throws std::invalid_argument unless eps > 0.
    static OpacityMode randomized(double eps = 0.05);

    bool is_randomized() const { return kind == Kind::randomized; }
};

struct RayConfig {
    std::size_t ray_size{10};  // number of hits appended after the origin
    OpacityMode mode{};
    double eval_offset_rel{1e-6};  // opacity evaluated this far (x box diagonal) before a hit
    double forward_tol_rel{1e-9};  // hits closer than this (x box diagonal) are ignored
    double angle_jitter{1e-7};     // radians added per retry on a degenerate hit
    int max_retries{3};
};

/// Polyline p0..pr and the direction of its last segment.
struct Ray {
    std::vector<Point> points;
    Angle dir;

    /// Midpoint of the last segment.
    Point endpoint() const { return midpoint(points[points.size() - 2], points.back()); }
};

enum class RayAction { reflect, cross };

/// Weight of the incident edge (v, w) of v, with v evaluated at eval_pos,
/// against the hit edge: 0 if it shares a vertex with the hit edge, -1 if it
/// crosses it, +1 otherwise.
int edge_weight(const Graph& g, const Drawing& d, VertexId v, EdgeId incident, Point eval_pos,
                EdgeId hit);

/// Mean of the non-zero weights over the incident edges of v, or 1 when every
/// weight is zero (or v has no edges).
double opacity(const Graph& g, const Drawing& d, VertexId v, EdgeId hit, Point eval_pos);

/// Deterministic: reflect iff op >= 0. Randomized: draw chi uniform on
/// [-1-eps, 1+eps] and reflect iff chi < op.
RayAction decide_reflection(double op, const OpacityMode& mode, Rng& rng);

/// Full polyline of the ray cast from v at angle theta. Empty when every
/// attempt ran into a degenerate hit (vertex or crossing point) and the
/// retries were exhausted.
std::optional<Ray> trace_ray(const Graph& g, const Drawing& d, VertexId v, Angle theta,
                             const RayConfig& cfg, Rng& rng);

/// Candidate position produced by the ray, or empty on a failed cast.
std::optional<Point> cast_ray(const Graph& g, const Drawing& d, VertexId v, Angle theta,
                              const RayConfig& cfg, Rng& rng);

}  // namespace rrgd
