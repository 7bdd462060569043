#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rrgd {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId u{0};
    VertexId v{0};

    bool has(VertexId w) const { return u == w || v == w; }
    bool shares_vertex(const Edge& o) const { return has(o.u) || has(o.v); }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph with a per-vertex incidence index.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicate edges or out-of-range ids.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return incident_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
    std::size_t degree(VertexId v) const { return incident_[v].size(); }

    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// Complete graph on n vertices, edges in lexicographic order.
Graph complete_graph(std::size_t n);

}  // namespace rrgd
