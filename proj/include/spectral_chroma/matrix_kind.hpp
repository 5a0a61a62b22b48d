#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace spectral_chroma {

enum class GraphMatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    NormalizedAdjacency,
    NormalizedLaplacian,
    NormalizedSignlessLaplacian,
};

inline constexpr std::array<GraphMatrixKind, 6> kAllMatrixKinds = {
    GraphMatrixKind::Adjacency,           GraphMatrixKind::Laplacian,
    GraphMatrixKind::SignlessLaplacian,   GraphMatrixKind::NormalizedAdjacency,
    GraphMatrixKind::NormalizedLaplacian, GraphMatrixKind::NormalizedSignlessLaplacian,
};

constexpr bool is_normalized(GraphMatrixKind kind) {
    return kind == GraphMatrixKind::NormalizedAdjacency ||
           kind == GraphMatrixKind::NormalizedLaplacian ||
           kind == GraphMatrixKind::NormalizedSignlessLaplacian;
}

constexpr std::string_view to_string(GraphMatrixKind kind) {
    switch (kind) {
        case GraphMatrixKind::Adjacency: return "Adjacency";
        case GraphMatrixKind::Laplacian: return "Laplacian";
        case GraphMatrixKind::SignlessLaplacian: return "SignlessLaplacian";
        case GraphMatrixKind::NormalizedAdjacency: return "NormalizedAdjacency";
        case GraphMatrixKind::NormalizedLaplacian: return "NormalizedLaplacian";
        case GraphMatrixKind::NormalizedSignlessLaplacian: return "NormalizedSignlessLaplacian";
    }
    return "?";
}

}  // namespace spectral_chroma
