#include "rrgd/init_layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrgd {

InitKind parse_init_kind(std::string_view name) {
    if (name == "random") return InitKind::random;
    if (name == "circle") return InitKind::circle;
    if (name == "force") return InitKind::force;
    throw std::invalid_argument("unknown init layout '" + std::string(name) + "'");
}

std::string_view to_string(InitKind kind) {
    switch (kind) {
        case InitKind::random: return "random";
        case InitKind::circle: return "circle";
        case InitKind::force: return "force";
    }
    return "?";
}

namespace {

std::vector<Point> random_positions(std::size_t n, double width, double height, Rng& rng) {
    if (!(width > 0.0 && height > 0.0)) throw std::invalid_argument("window must be non-empty");
    std::uniform_real_distribution<double> ux(0.0, width);
    std::uniform_real_distribution<double> uy(0.0, height);
    std::vector<Point> pos(n);
    for (auto& p : pos) {
        p.x = ux(rng);
        p.y = uy(rng);
    }
    return pos;
}

}  // namespace

Drawing init_random(const Graph& g, double width, double height, Rng& rng) {
    return Drawing::with_default_box(random_positions(g.vertex_count(), width, height, rng));
}

Drawing init_circle(const Graph& g, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
    const std::size_t n = g.vertex_count();
    std::vector<Point> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        pos[i] = {radius + radius * std::cos(a), radius + radius * std::sin(a)};
    }
    return Drawing::with_default_box(std::move(pos));
}

Drawing init_force(const Graph& g, double width, double height, Rng& rng, ForceParams params) {
    const std::size_t n = g.vertex_count();
    std::vector<Point> pos = random_positions(n, width, height, rng);
    if (n == 0 || params.iterations == 0) return Drawing::with_default_box(std::move(pos));

    const double rest = std::sqrt(width * height / static_cast<double>(n));
    const double repulsion = rest * rest;
    // Neighbours are held by their spring alone; repulsion acts on the other pairs.
    std::vector<bool> adjacent(n * n, false);
    for (const Edge& e : g.edges()) {
        adjacent[e.u * n + e.v] = true;
        adjacent[e.v * n + e.u] = true;
    }
    std::vector<Point> force(n);

    for (std::size_t it = 0; it < params.iterations; ++it) {
        std::fill(force.begin(), force.end(), Point{});
        for (const Edge& e : g.edges()) {
            const Point delta = pos[e.v] - pos[e.u];
            const double len = norm(delta);
            if (len == 0.0) continue;
            const Point f = ((len - rest) / len) * delta;
            force[e.u] = force[e.u] + f;
            force[e.v] = force[e.v] - f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (adjacent[i * n + j]) continue;
                const Point delta = pos[j] - pos[i];
                const double len = norm(delta);
                if (len < 1e-9) continue;
                const Point f = (repulsion / (len * len * len)) * delta;
                force[i] = force[i] - f;
                force[j] = force[j] + f;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Point p = pos[i] + params.step * force[i];
            pos[i] = {std::clamp(p.x, 0.0, width), std::clamp(p.y, 0.0, height)};
        }
    }
    return Drawing::with_default_box(std::move(pos));
}

Drawing init_layout(const Graph& g, InitKind kind, Rng& rng, double width, double height) {
    switch (kind) {
        case InitKind::random: return init_random(g, width, height, rng);
        case InitKind::circle: return init_circle(g, std::min(width, height) / 2.0);
        case InitKind::force: return init_force(g, width, height, rng);
    }
    throw std::invalid_argument("unknown init layout");
}

}  // namespace rrgd
