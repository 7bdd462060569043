#include "rrgd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rrgd/analysis.hpp"

namespace rrgd {

namespace {

struct Job {
    std::size_t graph;
    std::size_t config;
    std::size_t run;
};

std::vector<BenchConfigKey> expand_grid(const BenchGrid& grid) {
    std::vector<BenchConfigKey> keys;
    for (InitKind init : grid.inits) {
        for (const OpacityMode& mode : grid.modes) {
            for (double de : grid.delta_e_factors) {
                for (double pw : grid.prohibition_ratios) keys.push_back({init, mode, de, pw});
            }
        }
    }
    return keys;
}

BenchRun run_one(const BenchCase& bc, const BenchConfigKey& key, const BenchGrid& grid,
                 const Job& job) {
    const std::uint64_t seed = derive_seed(grid.seed, {job.graph, job.config, job.run});
    Rng init_rng(derive_seed(seed, {0}));
    const Drawing d0 = init_layout(bc.graph, key.init, init_rng);

    EngineConfig cfg;
    cfg.rays = grid.rays;
    cfg.ray.ray_size = grid.ray_size;
    cfg.ray.mode = key.mode;
    cfg.prohibition_ratio = key.prohibition_ratio;
    cfg.seed = seed;
    const EnergyModel energy = default_energy_model(d0.box(), bc.graph.vertex_count());
    cfg.delta_e = key.delta_e_factor * energy.stiffness * energy.rest_length * energy.rest_length;

    const RunResult res = rrgd(bc.graph, d0, cfg);
    BenchRun run;
    run.graph_name = bc.name;
    run.vertices = bc.graph.vertex_count();
    run.edges = bc.graph.edge_count();
    run.config = key;
    run.run_index = job.run;
    run.seed = seed;
    run.initial_crossings = res.stats.initial_crossings();
    run.final_crossings = res.stats.final_crossings();
    run.moves = res.stats.moves();
    run.outer_iterations = res.stats.outer_iterations;
    run.wall_seconds = res.stats.wall_seconds;
    run.termination = res.stats.termination;
    return run;
}

std::string mode_name(const OpacityMode& mode) { return mode.is_randomized() ? "rand" : "det"; }

}  // namespace

BenchReport run_benchmark(const std::vector<BenchCase>& corpus, const BenchGrid& grid) {
    const auto keys = expand_grid(grid);
    std::vector<Job> jobs;
    for (std::size_t g = 0; g < corpus.size(); ++g) {
        for (std::size_t c = 0; c < keys.size(); ++c) {
            for (std::size_t r = 0; r < grid.runs_per_config; ++r) jobs.push_back({g, c, r});
        }
    }

    BenchReport report;
    report.runs.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job& job = jobs[i];
            report.runs[i] = run_one(corpus[job.graph], keys[job.config], grid, job);
        }
    };
    const unsigned threads = std::max(1u, grid.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (std::size_t g = 0; g < corpus.size(); ++g) {
        for (std::size_t c = 0; c < keys.size(); ++c) {
            std::vector<double> crossings;
            double seconds = 0.0;
            double iterations = 0.0;
            const std::size_t base = (g * keys.size() + c) * grid.runs_per_config;
            for (std::size_t r = 0; r < grid.runs_per_config; ++r) {
                const BenchRun& run = report.runs[base + r];
                crossings.push_back(static_cast<double>(run.final_crossings));
                seconds += run.wall_seconds;
                iterations += static_cast<double>(run.outer_iterations);
            }
            const auto kept = three_sigma_filter(crossings);
            BenchSummary s;
            s.graph_name = corpus[g].name;
            s.config = keys[c];
            s.runs = crossings.size();
            s.kept = kept.size();
            s.mean_crossings = mean(kept);
            s.sd_crossings = sample_sd(kept);
            const double n = std::max<double>(1.0, static_cast<double>(crossings.size()));
            s.mean_seconds = seconds / n;
            s.mean_iterations = iterations / n;
            report.summaries.push_back(s);
        }
    }
    return report;
}

std::string bench_runs_jsonl(const BenchReport& report) {
    std::ostringstream out;
    for (const BenchRun& run : report.runs) {
        nlohmann::ordered_json j;
        j["graph"] = run.graph_name;
        j["vertices"] = run.vertices;
        j["edges"] = run.edges;
        j["init"] = std::string(to_string(run.config.init));
        j["mode"] = mode_name(run.config.mode);
        j["delta_e_factor"] = run.config.delta_e_factor;
        j["pw_ratio"] = run.config.prohibition_ratio;
        j["run"] = run.run_index;
        j["seed"] = run.seed;
        j["initial_cr"] = run.initial_crossings;
        j["final_cr"] = run.final_crossings;
        j["moves"] = run.moves;
        j["outer_iterations"] = run.outer_iterations;
        j["wall_seconds"] = run.wall_seconds;
        j["converged"] = run.termination == Termination::converged;
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string bench_summary_table(const BenchReport& report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-24s %-7s %-5s %10s %6s %5s %5s %10s %8s %10s %10s\n",
                  "graph", "init", "mode", "dE_factor", "pw", "runs", "kept", "mean_cr", "sd_cr",
                  "mean_iter", "mean_s");
    out << line;
    for (const BenchSummary& s : report.summaries) {
        std::snprintf(line, sizeof line,
                      "%-24s %-7s %-5s %10.3g %6.3g %5zu %5zu %10.3f %8.3f %10.1f %10.4f\n",
                      s.graph_name.c_str(), std::string(to_string(s.config.init)).c_str(),
                      mode_name(s.config.mode).c_str(), s.config.delta_e_factor,
                      s.config.prohibition_ratio, s.runs, s.kept, s.mean_crossings,
                      s.sd_crossings, s.mean_iterations, s.mean_seconds);
        out << line;
    }
    return out.str();
}

}  // namespace rrgd
