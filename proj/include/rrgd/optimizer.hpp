#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rrgd/drawing.hpp"
#include "rrgd/graph.hpp"
#include "rrgd/metrics.hpp"
#include "rrgd/raycast.hpp"

namespace rrgd {

struct EngineConfig {
    std::size_t rays{10};  // R, rays cast per move
    RayConfig ray{};       // ray size n_r, opacity mode, tolerances
    /// Minimum local energy gain for a move that keeps the crossing count.
    /// Unset: 1e-3 * k * L0^2.
    std::optional<double> delta_e;
    /// Prohibition window as a fraction of |V|: w_p = round(ratio * |V|).
    double prohibition_ratio{0.1};
    /// Base angle; ray i of a move leaves at theta0 + i * 2pi / R.
    Angle theta0{Angle::radians(1.0)};
    /// Unset: default_energy_model of the initial box.
    std::optional<EnergyModel> energy;
    std::uint64_t seed{0};
    /// Accepted-move cap. 0 selects 10 * |V| * min(plateau bound, 1e6).
    std::size_t max_outer_iterations{0};

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

/// Concrete run parameters once the defaults are filled in from (G, Gamma0).
struct ResolvedConfig {
    EnergyModel energy;
    double delta_e{0.0};
    std::size_t window{0};
    double energy_max{0.0};
    std::size_t plateau_bound{0};
    std::size_t safety_cap{0};
};

ResolvedConfig resolve(const EngineConfig& cfg, const Graph& g, const Drawing& d0);

/// ceil(e_max / delta_e), at least 1; SIZE_MAX when delta_e == 0.
std::size_t plateau_bound(double e_max, double delta_e);
std::size_t plateau_bound(const EngineConfig& cfg, const Graph& g, const Drawing& d0);

struct MoveResult {
    Point position;
    VertexScore score;
    std::optional<std::size_t> ray_index;  // empty: the current position won
    std::size_t rays_failed{0};
};

/// Best of the current position and the R ray candidates under the
/// (crossings, energy) order. Ties keep the current position, then the lowest
/// ray index. Ray i draws from the stream derive_seed(move_seed, {i}).
MoveResult move_vertex(const Graph& g, const Drawing& d, VertexId v, const EngineConfig& cfg,
                       const EnergyModel& energy, std::uint64_t move_seed);

/// Accept iff the candidate differs from the current position and either
/// lowers cr(v) or keeps it while lowering the local energy by at least delta_e.
bool accept_move(const Graph& g, const Drawing& d, VertexId v, Point candidate, double delta_e,
                 const EnergyModel& energy);

struct IterationRecord {
    std::size_t iteration{0};
    std::optional<VertexId> moved;  // empty for the initial state
    std::size_t crossings{0};
    double energy{0.0};
};

enum class Termination { converged, safety_cap };

struct RunStats {
    std::vector<IterationRecord> records;  // initial state, then one per accepted move
    std::size_t outer_iterations{0};
    std::size_t rays_cast{0};
    std::size_t rays_failed{0};
    std::size_t longest_plateau{0};  // consecutive accepted moves without a crossing decrease
    double wall_seconds{0.0};
    Termination termination{Termination::converged};
    ResolvedConfig resolved;

    std::size_t initial_crossings() const { return records.front().crossings; }
    std::size_t final_crossings() const { return records.back().crossings; }
    double final_energy() const { return records.back().energy; }
    std::size_t moves() const { return records.size() - 1; }
};

struct RunResult {
    Drawing drawing;
    RunStats stats;
};

/// Runs the ray-based crossing minimization from d0 until no vertex move is
/// accepted during a full scan, or the safety cap is reached.
RunResult rrgd(const Graph& g, const Drawing& d0, const EngineConfig& cfg);

}  // namespace rrgd
