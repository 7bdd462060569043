#pragma once

// Probabilistic estimates for how many rays are needed to reach the facets of
// a drawing, and the statistics used by the benchmark harness.

#include <cstddef>
#include <span>
#include <vector>

#include "rrgd/geometry.hpp"
#include "rrgd/graph.hpp"
#include "rrgd/rng.hpp"

namespace rrgd {

/// Fraction of random half-lines (uniform origin in the unit square, uniform
/// direction) that cross a random segment of the unit square. Converges to 1/6.
/// Throws std::invalid_argument when samples == 0.
double ray_edge_probability_mc(std::size_t samples, Rng& rng);

/// Same estimator with the segment fixed and only origin and direction drawn.
double ray_fixed_segment_probability_mc(const Segment& s, std::size_t samples, Rng& rng);

/// Probability that at least one of R random rays reaches a given facet:
/// 1 - (1 - ne / (36 (nv + cr - 2)))^(3R), clamped to [0, 1].
/// Requires nv + cr > 2.
double facet_hit_probability(std::size_t nv, std::size_t ne, std::size_t cr, std::size_t rays);

/// Per-ray facet probability Q as the explicit binomial sum over k = 0..3
/// crossed facet edges, with F the mean number of facets per edge.
double q_binomial_sum(double facets_per_edge);

/// Closed form 1 - (1 - 1/(6F))^3 of the same quantity.
double q_closed_form(double facets_per_edge);

/// Smallest R >= 1 with facet_hit_probability(nv, ne, cr, R) >= q.
/// Throws std::invalid_argument if q is outside (0, 1) or ne == 0.
std::size_t rays_needed(double q, std::size_t nv, std::size_t ne, std::size_t cr);

/// 3-connected graph grown from K4: each step picks two distinct edges,
/// subdivides each with a new vertex and joins the two new vertices.
Graph expand_k4(std::size_t steps, Rng& rng);

/// expand_k4 with (target - 4) / 2 steps; target must be >= 4.
Graph gen_3connected(std::size_t target_vertices, Rng& rng);

double mean(std::span<const double> values);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double sample_sd(std::span<const double> values);

/// Drops the values farther than three sample standard deviations from the
/// sample mean. Order of the kept values is preserved.
std::vector<double> three_sigma_filter(std::span<const double> values);

/// Two-sided p-value of Welch's unequal-variance t-test.
/// Throws std::invalid_argument if either sample has fewer than 2 values.
double welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace rrgd
