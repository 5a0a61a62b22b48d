#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectral_chroma/graph.hpp"

namespace spectral_chroma {

/// Vertex coloring with color indices in [0, c). Not every index need be used.
struct Coloring {
    std::vector<std::uint32_t> colors;
    std::uint32_t c = 0;

    std::uint32_t colors_used() const;
};

/// First edge whose endpoints share a color, if any.
std::optional<Edge> conflicting_edge(const Graph& g, const Coloring& col);
bool is_proper(const Graph& g, const Coloring& col);
/// Throws DomainError naming the violating edge (or the bad index) when the
/// coloring is not a proper coloring of g.
void require_proper(const Graph& g, const Coloring& col);

}  // namespace spectral_chroma
