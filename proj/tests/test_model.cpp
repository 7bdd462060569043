#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "rrgd/metrics.hpp"

using namespace rrgd;
using namespace rrgd::testing;

namespace {

Drawing transformed(const Drawing& d, double angle, double scale, Point shift) {
    std::vector<Point> pos;
    for (Point p : d.positions()) {
        const double c = std::cos(angle), s = std::sin(angle);
        pos.push_back(Point{scale * (c * p.x - s * p.y), scale * (s * p.x + c * p.y)} + shift);
    }
    return Drawing::with_default_box(std::move(pos));
}

}  // namespace

TEST(GraphModel, RejectsSelfLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph(2, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
    const Graph g(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_EQ(g.incident(1)[0], 0u);
    EXPECT_EQ(g.incident(1)[1], 1u);
}

TEST(DrawingModel, BoxInvariants) {
    const Drawing d = Drawing::with_default_box({{0, 0}, {10, 5}});
    EXPECT_DOUBLE_EQ(d.box().margin, 1.0);
    EXPECT_EQ(d.box().min, (Point{-1, -1}));
    EXPECT_EQ(d.box().max, (Point{11, 6}));
    EXPECT_THROW(Drawing({{20, 0}}, d.box()), std::invalid_argument);
    EXPECT_THROW(Drawing({{std::nan(""), 0}}, d.box()), std::invalid_argument);
    Drawing m = d;
    EXPECT_THROW(m.set_position(0, {100, 0}), std::invalid_argument);

    // single vertex: tight box is a point, margin falls back to 1
    const Drawing one = Drawing::with_default_box({{3, 3}});
    EXPECT_LT(one.box().min.x, one.box().max.x);
    EXPECT_TRUE(one.box().contains({3, 3}));
}

TEST(CrossingNumber, EdgeExamples) {
    const Graph k4 = k4_graph();
    const Drawing sq = k4_square();
    // edges of complete_graph(4): 01 02 03 12 13 23; 02 and 13 are diagonals
    EXPECT_EQ(cr_edge(k4, sq, 1), 1u);
    EXPECT_EQ(cr_edge(k4, sq, 4), 1u);
    EXPECT_EQ(cr_edge(k4, sq, 0), 0u);

    const Graph tri = complete_graph(3);
    const Drawing td = Drawing::with_default_box({{0, 0}, {1, 0}, {0, 1}});
    for (EdgeId e = 0; e < 3; ++e) EXPECT_EQ(cr_edge(tri, td, e), 0u);
}

TEST(CrossingNumber, VertexAndDrawingExamples) {
    const Graph k4 = k4_graph();
    const Drawing sq = k4_square();
    for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(cr_vertex(k4, sq, v), 1u);
    EXPECT_EQ(cr_drawing(k4, sq), 1u);

    const Graph iso(3, {{0, 1}});
    const Drawing d = Drawing::with_default_box({{0, 0}, {1, 1}, {2, 0}});
    EXPECT_EQ(cr_vertex(iso, d, 2), 0u);

    std::mt19937_64 rng(5);
    std::vector<Edge> star;
    for (VertexId i = 1; i < 9; ++i) star.push_back({0, i});
    EXPECT_EQ(cr_drawing(Graph(9, star), random_drawing(9, rng)), 0u);
}

TEST(CrossingNumber, ConvexK5HasFiveCrossings) {
    const Graph k5 = complete_graph(5);
    const Drawing d = Drawing::with_default_box(convex_positions(5));
    // oracle: every 4 points in convex position contribute one diagonal pair
    ASSERT_EQ(brute_force_crossings(k5, d), 5u);
    EXPECT_EQ(cr_drawing(k5, d), 5u);
}

TEST(CrossingNumber, RandomDrawingsMatchBruteForce) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(8, 0.5, rng);
        const Drawing d = random_drawing(8, rng);
        const auto per_edge = edge_crossing_counts(g, d);
        std::size_t sum = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            std::size_t oracle = 0;
            for (EdgeId f = 0; f < g.edge_count(); ++f) {
                if (f == e || g.edge(e).shares_vertex(g.edge(f))) continue;
                const Segment a = d.segment(g, e), b = d.segment(g, f);
                oracle += parametric_cross(a.a, a.b, b.a, b.b);
            }
            EXPECT_EQ(cr_edge(g, d, e), oracle);
            EXPECT_EQ(per_edge[e], oracle);
            sum += oracle;
        }
        EXPECT_EQ(2 * cr_drawing(g, d), sum);
        EXPECT_EQ(cr_drawing(g, d), brute_force_crossings(g, d));
        for (VertexId v = 0; v < 8; ++v) {
            std::size_t expect = 0;
            for (EdgeId e : g.incident(v)) expect += per_edge[e];
            EXPECT_EQ(cr_vertex(g, d, v), expect);
            EXPECT_EQ(cr_vertex_at(g, d, v, d.position(v)), expect);
        }
    }
}

TEST(CrossingNumber, InvariantUnderSimilarityTransforms) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(10, 0.4, rng);
        const Drawing d = random_drawing(10, rng);
        const std::size_t base = cr_drawing(g, d);
        EXPECT_EQ(cr_drawing(g, transformed(d, 0.0, 1.0, {1e3, -5e2})), base);
        EXPECT_EQ(cr_drawing(g, transformed(d, 1.1, 1.0, {0, 0})), base);
        EXPECT_EQ(cr_drawing(g, transformed(d, 0.0, 1e-4, {0, 0})), base);
        EXPECT_EQ(cr_drawing(g, transformed(d, 2.5, 1e5, {3, 3})), base);
    }
}

TEST(Energy, Examples) {
    const Graph g(2, {{0, 1}});
    const EnergyModel m{1.0, 1.0};
    EXPECT_DOUBLE_EQ(energy_edge(g, Drawing::with_default_box({{0, 0}, {1, 0}}), 0, m), 0.0);
    EXPECT_DOUBLE_EQ(energy_edge(g, Drawing::with_default_box({{0, 0}, {3, 0}}), 0, m), 4.0);
}

TEST(Energy, DecompositionIdentity) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(9, 0.4, rng);
        const Drawing d = random_drawing(9, rng);
        const EnergyModel m{17.0, 1.5};
        const double total = energy_drawing(g, d, m);
        for (VertexId v = 0; v < 9; ++v) {
            double rest = 0.0;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (!g.edge(e).has(v)) rest += energy_edge(g, d, e, m);
            }
            EXPECT_NEAR(energy_vertex(g, d, v, m) + rest, total, 1e-9 * (1.0 + total));
        }
    }
}

TEST(Energy, MaxBound) {
    const EnergyModel m{1.0, 1.0};
    // diagonal 3: box from (0,0) to (3/sqrt2, 3/sqrt2)
    const double s = 3.0 / std::sqrt(2.0);
    const Drawing d({{0.5, 0.5}, {1, 1}}, BoundingBox{{0, 0}, {s, s}, 0.1});
    EXPECT_NEAR(energy_max(Graph(2, {{0, 1}}), d, m), 4.0, 1e-12);
    EXPECT_DOUBLE_EQ(energy_max(Graph(2, {}), d, m), 0.0);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(10, 0.5, rng);
        const Drawing d0 = random_drawing(10, rng);
        const EnergyModel dm = default_energy_model(d0.box(), 10);
        EXPECT_LE(energy_drawing(g, d0, dm), energy_max(g, d0, dm));
    }
}

TEST(CompareVertices, CrossingsFirstThenEnergy) {
    EXPECT_TRUE((VertexScore{2, 100.0} < VertexScore{3, 0.0}));
    EXPECT_TRUE((VertexScore{2, 3.0} < VertexScore{2, 5.0}));
    EXPECT_FALSE((VertexScore{2, 5.0} < VertexScore{2, 3.0}));

    const Graph k4 = k4_graph();
    const Drawing d = Drawing::with_default_box({{0, 0}, {4, 0}, {1, 1}, {0, 3}});
    const EnergyModel m{1.0, 1.0};
    for (VertexId v = 0; v < 4; ++v) {
        EXPECT_EQ(compare_vertices(k4, d, v, v, m), std::partial_ordering::equivalent);
    }
    for (VertexId u = 0; u < 4; ++u) {
        for (VertexId v = 0; v < 4; ++v) {
            const auto su = vertex_score(k4, d, u, m);
            const auto sv = vertex_score(k4, d, v, m);
            const bool before = su.crossings < sv.crossings ||
                                (su.crossings == sv.crossings && su.energy <= sv.energy);
            EXPECT_EQ(before, compare_vertices(k4, d, u, v, m) <= 0);
        }
    }
}

TEST(Facets, Examples) {
    const Drawing tri = Drawing::with_default_box({{0, 0}, {1, 0}, {0, 1}});
    EXPECT_EQ(facet_count(complete_graph(3), tri), 2u);
    EXPECT_EQ(facet_count(k4_graph(), k4_square()), 5u);
    // Euler on the planarization: V' = 5 + 5, E' = 10 + 2*5, F = E' - V' + 2
    EXPECT_EQ(facet_count(complete_graph(5), Drawing::with_default_box(convex_positions(5))), 12u);
    EXPECT_THROW(facet_count(Graph(3, {{0, 1}}), tri), GraphError);
}

TEST(Facets, PlanarDrawingsFollowEuler) {
    // a convex polygon with a fan triangulation is planar
    for (std::size_t n = 3; n < 12; ++n) {
        std::vector<Edge> edges;
        for (VertexId i = 0; i < n; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
        for (VertexId i = 2; i + 1 < n; ++i) edges.push_back({0, i});
        const Graph g(n, edges);
        const Drawing d = Drawing::with_default_box(convex_positions(n));
        ASSERT_EQ(cr_drawing(g, d), 0u);
        EXPECT_EQ(facet_count(g, d), g.edge_count() - n + 2);
    }
}
