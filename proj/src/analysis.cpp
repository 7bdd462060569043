#include "rrgd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace rrgd {

namespace {

bool random_ray_crosses(const Segment& s, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const Point origin{unit(rng), unit(rng)};
    const Angle dir = Angle::radians(angle(rng));
    return halfline_hit(origin, dir, s, 0.0).has_value();
}

}  // namespace

double ray_edge_probability_mc(std::size_t samples, Rng& rng) {
    if (samples == 0) throw std::invalid_argument("Monte Carlo estimate needs samples > 0");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Segment s{{unit(rng), unit(rng)}, {unit(rng), unit(rng)}};
        if (random_ray_crosses(s, rng)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

double ray_fixed_segment_probability_mc(const Segment& s, std::size_t samples, Rng& rng) {
    if (samples == 0) throw std::invalid_argument("Monte Carlo estimate needs samples > 0");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        if (random_ray_crosses(s, rng)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

double facet_hit_probability(std::size_t nv, std::size_t ne, std::size_t cr, std::size_t rays) {
    if (nv + cr <= 2) throw std::invalid_argument("facet probability needs |V| + cr > 2");
    if (rays == 0) return 0.0;
    const double x = static_cast<double>(ne) / (36.0 * static_cast<double>(nv + cr - 2));
    const double base = 1.0 - x;
    if (base <= 0.0) return 1.0;
    const double p = 1.0 - std::pow(base, 3.0 * static_cast<double>(rays));
    return std::clamp(p, 0.0, 1.0);
}

double q_binomial_sum(double facets_per_edge) {
    constexpr double choose3[4] = {1.0, 3.0, 3.0, 1.0};
    const double miss = 1.0 - 1.0 / facets_per_edge;
    double q = 0.0;
    for (int k = 0; k <= 3; ++k) {
        q += choose3[k] * std::pow(1.0 / 6.0, k) * std::pow(5.0 / 6.0, 3 - k) *
             (1.0 - std::pow(miss, k));
    }
    return q;
}

double q_closed_form(double facets_per_edge) {
    return 1.0 - std::pow(1.0 - 1.0 / (6.0 * facets_per_edge), 3);
}

std::size_t rays_needed(double q, std::size_t nv, std::size_t ne, std::size_t cr) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("target probability must be in (0, 1)");
    if (ne == 0) throw std::invalid_argument("no ray reaches a facet of an edgeless drawing");
    if (nv + cr <= 2) throw std::invalid_argument("facet probability needs |V| + cr > 2");
    const double x = static_cast<double>(ne) / (36.0 * static_cast<double>(nv + cr - 2));
    if (x >= 1.0) return 1;

    const double estimate = std::ceil(std::log1p(-q) / (3.0 * std::log1p(-x)));
    std::size_t r = static_cast<std::size_t>(std::max(1.0, estimate));
    // The closed form can be off by one after rounding; settle on the exact
    // defining property.
    while (facet_hit_probability(nv, ne, cr, r) < q) ++r;
    while (r > 1 && facet_hit_probability(nv, ne, cr, r - 1) >= q) --r;
    return r;
}

Graph expand_k4(std::size_t steps, Rng& rng) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 4; ++i) {
        for (VertexId j = i + 1; j < 4; ++j) edges.push_back({i, j});
    }
    VertexId n = 4;
    for (std::size_t s = 0; s < steps; ++s) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const std::size_t i1 = pick(rng);
        std::size_t i2 = pick(rng);
        while (i2 == i1) i2 = pick(rng);

        const VertexId m1 = n++;
        const VertexId m2 = n++;
        const Edge e1 = edges[i1];
        const Edge e2 = edges[i2];
        edges[i1] = {e1.u, m1};
        edges[i2] = {e2.u, m2};
        edges.push_back({m1, e1.v});
        edges.push_back({m2, e2.v});
        edges.push_back({m1, m2});
    }
    return Graph(n, std::move(edges));
}

Graph gen_3connected(std::size_t target_vertices, Rng& rng) {
    if (target_vertices < 4) throw std::invalid_argument("3-connected generator needs >= 4 vertices");
    return expand_k4((target_vertices - 4) / 2, rng);
}

double mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::vector<double> three_sigma_filter(std::span<const double> values) {
    const double m = mean(values);
    const double sd = sample_sd(values);
    if (sd == 0.0) return {values.begin(), values.end()};
    std::vector<double> kept;
    kept.reserve(values.size());
    for (double v : values) {
        if (std::abs(v - m) <= 3.0 * sd) kept.push_back(v);
    }
    return kept;
}

double welch_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("Welch t-test needs at least two values per sample");
    }
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double va = std::pow(sample_sd(a), 2) / na;
    const double vb = std::pow(sample_sd(b), 2) / nb;
    const double diff = mean(a) - mean(b);
    const double se2 = va + vb;
    if (se2 == 0.0) return diff == 0.0 ? 1.0 : 0.0;

    const double t = diff / std::sqrt(se2);
    const double df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    const boost::math::students_t dist(df);
    return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t))));
}

}  // namespace rrgd
