#pragma once

#include <cstddef>
#include <string_view>

#include "rrgd/drawing.hpp"
#include "rrgd/graph.hpp"
#include "rrgd/rng.hpp"

namespace rrgd {

inline constexpr double kDefaultWindow = 1000.0;

enum class InitKind { random, circle, force };

/// "random", "circle" or "force"; throws std::invalid_argument otherwise.
InitKind parse_init_kind(std::string_view name);
std::string_view to_string(InitKind kind);

/// Positions uniform in [0, width] x [0, height].
Drawing init_random(const Graph& g, double width, double height, Rng& rng);

/// Vertex i at angle 2*pi*i/|V| on a circle centred at (radius, radius).
Drawing init_circle(const Graph& g, double radius);

struct ForceParams {
    std::size_t iterations{30};
    double step{0.05};
};

/// init_random followed by a few explicit Euler steps of Hooke springs
/// (rest length sqrt(w*h/|V|)) and inverse-square repulsion with constant
/// L0^2 between non-adjacent pairs, clamped to the window.
Drawing init_force(const Graph& g, double width, double height, Rng& rng, ForceParams params = {});

/// Dispatch on kind with the default window (circle radius = window / 2).
Drawing init_layout(const Graph& g, InitKind kind, Rng& rng, double width = kDefaultWindow,
                    double height = kDefaultWindow);

}  // namespace rrgd
