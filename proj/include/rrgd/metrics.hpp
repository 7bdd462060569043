#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "rrgd/drawing.hpp"
#include "rrgd/graph.hpp"

namespace rrgd {

/// Per-edge spring energy k * (length - L0)^2.
struct EnergyModel {
    double rest_length{1.0};
    double stiffness{1.0};

    double edge_energy(double length) const {
        const double d = length - rest_length;
        return stiffness * d * d;
    }
};

/// L0 = sqrt(w * h / |V|) of the box, k = 1.
EnergyModel default_energy_model(const BoundingBox& box, std::size_t vertex_count);

// Crossing numbers. Only real edges are counted; the box sides never are.

std::size_t cr_edge(const Graph& g, const Drawing& d, EdgeId e);
std::size_t cr_vertex(const Graph& g, const Drawing& d, VertexId v);
std::size_t cr_drawing(const Graph& g, const Drawing& d);

/// cr_edge for every edge in one all-pairs pass.
std::vector<std::size_t> edge_crossing_counts(const Graph& g, const Drawing& d);

/// cr_vertex for every vertex, derived from edge_crossing_counts.
std::vector<std::size_t> vertex_crossing_counts(const Graph& g, const Drawing& d);

/// cr(v) if v were placed at p, everything else fixed.
std::size_t cr_vertex_at(const Graph& g, const Drawing& d, VertexId v, Point p);

double energy_edge(const Graph& g, const Drawing& d, EdgeId e, const EnergyModel& m);
double energy_vertex(const Graph& g, const Drawing& d, VertexId v, const EnergyModel& m);
double energy_vertex_at(const Graph& g, const Drawing& d, VertexId v, Point p,
                        const EnergyModel& m);
double energy_drawing(const Graph& g, const Drawing& d, const EnergyModel& m);

/// Upper bound on energy_drawing for any drawing confined to d0's box:
/// |E| * k * max(L0^2, (diag - L0)^2).
double energy_max(const Graph& g, const Drawing& d0, const EnergyModel& m);

/// (crossings, local energy) pair ordered lexicographically; this is the
/// vertex order used for sorting and for picking among candidate positions.
struct VertexScore {
    std::size_t crossings{0};
    double energy{0.0};

    friend std::partial_ordering operator<=>(const VertexScore& a, const VertexScore& b) {
        if (auto c = a.crossings <=> b.crossings; c != 0) return c;
        return a.energy <=> b.energy;
    }
    friend bool operator==(const VertexScore&, const VertexScore&) = default;
};

VertexScore vertex_score(const Graph& g, const Drawing& d, VertexId v, const EnergyModel& m);
VertexScore vertex_score_at(const Graph& g, const Drawing& d, VertexId v, Point p,
                            const EnergyModel& m);

/// less: u strictly before v; equivalent: same crossings and energy.
std::partial_ordering compare_vertices(const Graph& g, const Drawing& d, VertexId u, VertexId v,
                                       const EnergyModel& m);

/// Faces of the planarized drawing, outer face included:
/// |E| - |V| + 2 + cr. Requires a connected graph (throws GraphError otherwise).
std::size_t facet_count(const Graph& g, const Drawing& d);

}  // namespace rrgd
