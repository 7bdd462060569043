#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "fixtures.hpp"
#include "rrgd/init_layout.hpp"
#include "rrgd/metrics.hpp"

using namespace rrgd;
using namespace rrgd::testing;

namespace {

// One-sample Kolmogorov-Smirnov statistic against U[0, 1].
double ks_uniform(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        d = std::max({d, (i + 1) / n - xs[i], xs[i] - i / n});
    }
    return d;
}

bool strictly_inside(const Drawing& d) {
    const BoundingBox& b = d.box();
    return std::all_of(d.positions().begin(), d.positions().end(), [&](Point p) {
        return p.x > b.min.x && p.x < b.max.x && p.y > b.min.y && p.y < b.max.y;
    });
}

}  // namespace

TEST(InitKind, ParseAndPrint) {
    for (auto k : {InitKind::random, InitKind::circle, InitKind::force}) {
        EXPECT_EQ(parse_init_kind(to_string(k)), k);
    }
    EXPECT_THROW(parse_init_kind("spiral"), std::invalid_argument);
}

TEST(InitRandom, SingleVertexAndReproducible) {
    Rng rng(3);
    const Drawing one = init_random(Graph(1, {}), 100, 50, rng);
    EXPECT_GE(one.position(0).x, 0.0);
    EXPECT_LE(one.position(0).x, 100.0);
    EXPECT_GE(one.position(0).y, 0.0);
    EXPECT_LE(one.position(0).y, 50.0);

    const Graph g = complete_graph(6);
    Rng a(99), b(99);
    EXPECT_EQ(init_random(g, 10, 10, a), init_random(g, 10, 10, b));
}

TEST(InitRandom, MarginalsAreUniform) {
    Rng rng(2024);
    const Drawing d = init_random(Graph(10000, {}), 1000, 500, rng);
    std::vector<double> xs, ys;
    for (Point p : d.positions()) {
        xs.push_back(p.x / 1000);
        ys.push_back(p.y / 500);
    }
    // asymptotic 1% critical value 1.628 / sqrt(n)
    const double critical = 1.628 / std::sqrt(10000.0);
    EXPECT_LT(ks_uniform(xs), critical);
    EXPECT_LT(ks_uniform(ys), critical);
}

TEST(InitCircle, FourVerticesMakeASquare) {
    const Drawing d = init_circle(Graph(4, {}), 5.0);
    const std::vector<Point> expect{{10, 5}, {5, 10}, {0, 5}, {5, 0}};
    for (VertexId i = 0; i < 4; ++i) {
        EXPECT_NEAR(d.position(i).x, expect[i].x, 1e-12);
        EXPECT_NEAR(d.position(i).y, expect[i].y, 1e-12);
    }
}

TEST(InitCircle, EvenSpacing) {
    const std::size_t n = 11;
    const Drawing d = init_circle(Graph(n, {}), 7.0);
    const double side = distance(d.position(0), d.position(1));
    for (VertexId i = 0; i < n; ++i) {
        EXPECT_NEAR(distance(d.position(i), d.position((i + 1) % n)), side, 1e-12);
        EXPECT_NEAR(distance(d.position(i), Point{7, 7}), 7.0, 1e-12);
    }
}

TEST(InitCircle, K4HasOneCrossing) {
    const Graph k4 = k4_graph();
    const Drawing d = init_circle(k4, 10.0);
    EXPECT_EQ(brute_force_crossings(k4, d), 1u);
    EXPECT_EQ(cr_drawing(k4, d), 1u);
}

TEST(InitForce, ZeroIterationsIsRandom) {
    const Graph g = complete_graph(7);
    Rng a(5), b(5);
    EXPECT_EQ(init_force(g, 300, 200, a, {0, 0.05}), init_random(g, 300, 200, b));
}

TEST(InitForce, EdgeSettlesAtRestLength) {
    const Graph g(2, {{0, 1}});
    const double rest = std::sqrt(1000.0 * 1000.0 / 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const Drawing d = init_force(g, 1000, 1000, rng, {400, 0.05});
        EXPECT_NEAR(distance(d.position(0), d.position(1)), rest, 0.05 * rest) << seed;
    }
}

TEST(InitForce, StaysInsideTheWindow) {
    std::mt19937_64 gen(1);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(25, 0.2, gen);
        Rng rng(trial);
        const Drawing d = init_force(g, 400, 300, rng);
        for (Point p : d.positions()) {
            EXPECT_GE(p.x, 0.0);
            EXPECT_LE(p.x, 400.0);
            EXPECT_GE(p.y, 0.0);
            EXPECT_LE(p.y, 300.0);
        }
    }
}

TEST(InitLayout, AllKindsStrictlyInsideTheBox) {
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(15, 0.3, gen);
        for (auto k : {InitKind::random, InitKind::circle, InitKind::force}) {
            Rng rng(trial);
            const Drawing d = init_layout(g, k, rng);
            EXPECT_EQ(d.size(), 15u);
            EXPECT_TRUE(strictly_inside(d)) << to_string(k);
        }
    }
}
