#include "rrgd/graph.hpp"

#include <set>
#include <string>

namespace rrgd {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), incident_(vertex_count) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw GraphError("edge " + std::to_string(id) + " references a vertex out of range");
        }
        if (e.u == e.v) {
            throw GraphError("self-loop on vertex " + std::to_string(e.u));
        }
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert({key.first, key.second}).second) {
            throw GraphError("duplicate edge " + std::to_string(key.first) + "-" +
                             std::to_string(key.second));
        }
        incident_[e.u].push_back(id);
        incident_[e.v].push_back(id);
    }
}

bool Graph::is_connected() const {
    const std::size_t n = vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : incident_[v]) {
            const VertexId w = edges_[e].other(v);
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Graph(n, std::move(edges));
}

}  // namespace rrgd
