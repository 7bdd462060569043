#include "rrgd/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace rrgd {

namespace {

// Crossings between the incident edges of v (with v at p) and every edge not
// incident to v. Incident edges share v and can never cross each other.
std::size_t incident_crossings(const Graph& g, const Drawing& d, VertexId v, Point p) {
    std::size_t count = 0;
    for (EdgeId ei : g.incident(v)) {
        const Segment moved{p, d.position(g.edge(ei).other(v))};
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).has(v)) continue;
            if (segments_cross(moved, d.segment(g, e))) ++count;
        }
    }
    return count;
}

}  // namespace

EnergyModel default_energy_model(const BoundingBox& box, std::size_t vertex_count) {
    const double n = static_cast<double>(std::max<std::size_t>(vertex_count, 1));
    return {std::sqrt(box.width() * box.height() / n), 1.0};
}

std::size_t cr_edge(const Graph& g, const Drawing& d, EdgeId e) {
    const Segment s = d.segment(g, e);
    std::size_t count = 0;
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f != e && segments_cross(s, d.segment(g, f))) ++count;
    }
    return count;
}

std::size_t cr_vertex(const Graph& g, const Drawing& d, VertexId v) {
    std::size_t total = 0;
    for (EdgeId e : g.incident(v)) total += cr_edge(g, d, e);
    return total;
}

std::vector<std::size_t> edge_crossing_counts(const Graph& g, const Drawing& d) {
    const std::size_t m = g.edge_count();
    std::vector<Segment> segs;
    segs.reserve(m);
    for (EdgeId e = 0; e < m; ++e) segs.push_back(d.segment(g, e));

    std::vector<std::size_t> counts(m, 0);
    for (EdgeId a = 0; a < m; ++a) {
        for (EdgeId b = a + 1; b < m; ++b) {
            if (segments_cross(segs[a], segs[b])) {
                ++counts[a];
                ++counts[b];
            }
        }
    }
    return counts;
}

std::vector<std::size_t> vertex_crossing_counts(const Graph& g, const Drawing& d) {
    const auto per_edge = edge_crossing_counts(g, d);
    std::vector<std::size_t> counts(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        counts[g.edge(e).u] += per_edge[e];
        counts[g.edge(e).v] += per_edge[e];
    }
    return counts;
}

std::size_t cr_drawing(const Graph& g, const Drawing& d) {
    const auto per_edge = edge_crossing_counts(g, d);
    std::size_t twice = 0;
    for (std::size_t c : per_edge) twice += c;
    return twice / 2;
}

std::size_t cr_vertex_at(const Graph& g, const Drawing& d, VertexId v, Point p) {
    return incident_crossings(g, d, v, p);
}

double energy_edge(const Graph& g, const Drawing& d, EdgeId e, const EnergyModel& m) {
    const Segment s = d.segment(g, e);
    return m.edge_energy(distance(s.a, s.b));
}

double energy_vertex(const Graph& g, const Drawing& d, VertexId v, const EnergyModel& m) {
    return energy_vertex_at(g, d, v, d.position(v), m);
}

double energy_vertex_at(const Graph& g, const Drawing& d, VertexId v, Point p,
                        const EnergyModel& m) {
    double total = 0.0;
    for (EdgeId e : g.incident(v)) {
        total += m.edge_energy(distance(p, d.position(g.edge(e).other(v))));
    }
    return total;
}

double energy_drawing(const Graph& g, const Drawing& d, const EnergyModel& m) {
    double total = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) total += energy_edge(g, d, e, m);
    return total;
}

double energy_max(const Graph& g, const Drawing& d0, const EnergyModel& m) {
    const double diag = d0.box().diagonal();
    const double l0 = m.rest_length;
    const double worst = std::max(l0 * l0, (diag - l0) * (diag - l0));
    return static_cast<double>(g.edge_count()) * m.stiffness * worst;
}

VertexScore vertex_score(const Graph& g, const Drawing& d, VertexId v, const EnergyModel& m) {
    return vertex_score_at(g, d, v, d.position(v), m);
}

VertexScore vertex_score_at(const Graph& g, const Drawing& d, VertexId v, Point p,
                            const EnergyModel& m) {
    return {incident_crossings(g, d, v, p), energy_vertex_at(g, d, v, p, m)};
}

std::partial_ordering compare_vertices(const Graph& g, const Drawing& d, VertexId u, VertexId v,
                                       const EnergyModel& m) {
    return vertex_score(g, d, u, m) <=> vertex_score(g, d, v, m);
}

std::size_t facet_count(const Graph& g, const Drawing& d) {
    if (!g.is_connected()) throw GraphError("facet_count requires a connected graph");
    if (g.vertex_count() == 0) return 1;
    return g.edge_count() + 2 + cr_drawing(g, d) - g.vertex_count();
}

}  // namespace rrgd
