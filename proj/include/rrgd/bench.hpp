#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrgd/graph.hpp"
#include "rrgd/init_layout.hpp"
#include "rrgd/optimizer.hpp"

namespace rrgd {

struct BenchCase {
    std::string name;
    Graph graph;
};

/// Cartesian grid of run configurations. Every combination is run
/// runs_per_config times on every corpus graph with its own seed.
struct BenchGrid {
    std::vector<InitKind> inits{InitKind::random};
    std::vector<OpacityMode> modes{OpacityMode::deterministic()};
    /// delta_e = factor * k * L0^2 for each factor.
    std::vector<double> delta_e_factors{1e-3};
    std::vector<double> prohibition_ratios{0.1};
    std::size_t rays{10};
    std::size_t ray_size{10};
    std::size_t runs_per_config{5};
    std::uint64_t seed{0};
    unsigned threads{1};
};

struct BenchConfigKey {
    InitKind init{InitKind::random};
    OpacityMode mode{};
    double delta_e_factor{0.0};
    double prohibition_ratio{0.0};
};

struct BenchRun {
    std::string graph_name;
    std::size_t vertices{0};
    std::size_t edges{0};
    BenchConfigKey config;
    std::size_t run_index{0};
    std::uint64_t seed{0};
    std::size_t initial_crossings{0};
    std::size_t final_crossings{0};
    std::size_t moves{0};
    std::size_t outer_iterations{0};
    double wall_seconds{0.0};
    Termination termination{Termination::converged};
};

struct BenchSummary {
    std::string graph_name;
    BenchConfigKey config;
    std::size_t runs{0};
    std::size_t kept{0};  // after the three-sigma filter on final crossings
    double mean_crossings{0.0};
    double sd_crossings{0.0};
    double mean_seconds{0.0};
    double mean_iterations{0.0};
};

struct BenchReport {
    std::vector<BenchRun> runs;  // ordered by (graph, config, run index)
    std::vector<BenchSummary> summaries;
};

/// Runs every (graph, configuration, repetition) and aggregates. Runs are
/// independent and seeded from (seed, graph index, config index, run index),
/// so the report does not depend on threads.
BenchReport run_benchmark(const std::vector<BenchCase>& corpus, const BenchGrid& grid);

/// One JSON object per run, newline separated.
std::string bench_runs_jsonl(const BenchReport& report);
/// Fixed-width text table of the summaries.
std::string bench_summary_table(const BenchReport& report);

}  // namespace rrgd
