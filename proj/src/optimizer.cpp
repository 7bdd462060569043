#include "rrgd/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rrgd {

namespace {

constexpr std::size_t kPlateauTruncation = 1'000'000;
constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > kUnbounded / a) return kUnbounded;
    return a * b;
}

struct CrossingState {
    std::vector<std::size_t> per_vertex;
    std::size_t total{0};
};

CrossingState crossing_state(const Graph& g, const Drawing& d) {
    const auto per_edge = edge_crossing_counts(g, d);
    CrossingState s;
    s.per_vertex.assign(g.vertex_count(), 0);
    std::size_t twice = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        s.per_vertex[g.edge(e).u] += per_edge[e];
        s.per_vertex[g.edge(e).v] += per_edge[e];
        twice += per_edge[e];
    }
    s.total = twice / 2;
    return s;
}

// Vertices worst first: descending (crossings, energy), ties by id.
std::vector<VertexId> scan_order(const Graph& g, const Drawing& d, const CrossingState& cs,
                                 const EnergyModel& energy) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexScore> scores(n);
    for (VertexId v = 0; v < n; ++v) {
        scores[v] = {cs.per_vertex[v], energy_vertex(g, d, v, energy)};
    }
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return scores[b] < scores[a]; });
    return order;
}

}  // namespace

void EngineConfig::validate() const {
    if (rays < 1) throw std::invalid_argument("ray count R must be at least 1");
    if (ray.ray_size < 1) throw std::invalid_argument("ray size n_r must be at least 1");
    if (delta_e && !(*delta_e >= 0.0)) throw std::invalid_argument("delta_e must be >= 0");
    if (!(prohibition_ratio >= 0.0 && prohibition_ratio < 1.0)) {
        throw std::invalid_argument("prohibition ratio must lie in [0, 1)");
    }
    if (energy && !(energy->rest_length > 0.0 && energy->stiffness > 0.0)) {
        throw std::invalid_argument("energy model needs positive rest length and stiffness");
    }
    if (ray.mode.is_randomized() && !(ray.mode.epsilon_rand > 0.0)) {
        throw std::invalid_argument("randomized opacity needs epsilon > 0");
    }
}

std::size_t plateau_bound(double e_max, double delta_e) {
    if (!(delta_e > 0.0)) return kUnbounded;
    if (delta_e >= e_max) return 1;
    const double steps = std::ceil(e_max / delta_e);
    if (steps >= static_cast<double>(kUnbounded)) return kUnbounded;
    return static_cast<std::size_t>(steps);
}

ResolvedConfig resolve(const EngineConfig& cfg, const Graph& g, const Drawing& d0) {
    cfg.validate();
    ResolvedConfig r;
    r.energy = cfg.energy.value_or(default_energy_model(d0.box(), g.vertex_count()));
    r.delta_e = cfg.delta_e.value_or(1e-3 * r.energy.stiffness * r.energy.rest_length *
                                     r.energy.rest_length);
    r.window = static_cast<std::size_t>(
        std::llround(cfg.prohibition_ratio * static_cast<double>(g.vertex_count())));
    r.energy_max = energy_max(g, d0, r.energy);
    r.plateau_bound = plateau_bound(r.energy_max, r.delta_e);
    if (cfg.max_outer_iterations > 0) {
        r.safety_cap = cfg.max_outer_iterations;
    } else {
        const std::size_t n = std::max<std::size_t>(g.vertex_count(), 1);
        r.safety_cap =
            saturating_mul(10 * n, std::min(r.plateau_bound, kPlateauTruncation));
    }
    return r;
}

std::size_t plateau_bound(const EngineConfig& cfg, const Graph& g, const Drawing& d0) {
    return resolve(cfg, g, d0).plateau_bound;
}

MoveResult move_vertex(const Graph& g, const Drawing& d, VertexId v, const EngineConfig& cfg,
                       const EnergyModel& energy, std::uint64_t move_seed) {
    MoveResult best{d.position(v), vertex_score(g, d, v, energy), std::nullopt, 0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(cfg.rays);
    for (std::size_t i = 1; i <= cfg.rays; ++i) {
        const Angle theta = Angle::radians(cfg.theta0.value() + static_cast<double>(i) * step);
        Rng rng(derive_seed(move_seed, {i}));
        const auto candidate = cast_ray(g, d, v, theta, cfg.ray, rng);
        if (!candidate) {
            ++best.rays_failed;
            continue;
        }
        const VertexScore score = vertex_score_at(g, d, v, *candidate, energy);
        if (score < best.score) {
            best.position = *candidate;
            best.score = score;
            best.ray_index = i;
        }
    }
    return best;
}

bool accept_move(const Graph& g, const Drawing& d, VertexId v, Point candidate, double delta_e,
                 const EnergyModel& energy) {
    const Point current = d.position(v);
    if (candidate == current) return false;
    const VertexScore before = vertex_score(g, d, v, energy);
    const VertexScore after = vertex_score_at(g, d, v, candidate, energy);
    if (after.crossings != before.crossings) return after.crossings < before.crossings;
    return before.energy - after.energy >= delta_e;
}

RunResult rrgd(const Graph& g, const Drawing& d0, const EngineConfig& cfg) {
    if (d0.size() != g.vertex_count()) {
        throw std::invalid_argument("drawing does not match the graph's vertex count");
    }
    const auto started = std::chrono::steady_clock::now();
    const ResolvedConfig rc = resolve(cfg, g, d0);

    RunResult result{d0, {}};
    Drawing& d = result.drawing;
    RunStats& stats = result.stats;
    stats.resolved = rc;

    CrossingState cs = crossing_state(g, d);
    stats.records.push_back({0, std::nullopt, cs.total, energy_drawing(g, d, rc.energy)});

    std::vector<std::size_t> prohibited(g.vertex_count(), 0);
    std::size_t plateau = 0;
    std::size_t accepted_moves = 0;

    while (true) {
        if (accepted_moves >= rc.safety_cap) {
            stats.termination = Termination::safety_cap;
            break;
        }
        ++stats.outer_iterations;
        bool moved = false;
        for (VertexId v : scan_order(g, d, cs, rc.energy)) {
            if (prohibited[v] > 0) continue;
            const std::uint64_t move_seed = derive_seed(cfg.seed, {stats.outer_iterations, v});
            const MoveResult mv = move_vertex(g, d, v, cfg, rc.energy, move_seed);
            stats.rays_cast += cfg.rays;
            stats.rays_failed += mv.rays_failed;
            if (!accept_move(g, d, v, mv.position, rc.delta_e, rc.energy)) continue;

            d.set_position(v, mv.position);
            prohibited[v] = rc.window;
            for (auto& c : prohibited) {
                if (c > 0) --c;
            }
            const std::size_t before = cs.total;
            cs = crossing_state(g, d);
            plateau = cs.total < before ? 0 : plateau + 1;
            stats.longest_plateau = std::max(stats.longest_plateau, plateau);
            ++accepted_moves;
            stats.records.push_back(
                {accepted_moves, v, cs.total, energy_drawing(g, d, rc.energy)});
            moved = true;
            break;
        }
        if (!moved) {
            stats.termination = Termination::converged;
            break;
        }
    }

    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace rrgd
