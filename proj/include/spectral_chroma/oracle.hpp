#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "spectral_chroma/coloring.hpp"
#include "spectral_chroma/graph.hpp"

namespace spectral_chroma {

inline constexpr std::size_t kMaxChromaticOrder = 64;
inline constexpr std::size_t kMaxCorpusOrder = 7;
inline constexpr std::size_t kMaxLabeledOrder = 6;

struct ChromaticResult {
    std::size_t chi = 0;
    Coloring witness;
};

/// Exact chromatic number by iterative deepening from a greedy clique bound.
/// Throws RefusalError for graphs with more than kMaxChromaticOrder vertices.
ChromaticResult chromatic_number(const Graph& g);

/// Backtracking k-colorability decision: vertices in degree-descending
/// order, colors in index order, a new color only ever one past the largest
/// already used.
std::optional<Coloring> find_coloring(const Graph& g, std::size_t k);

/// Largest-degree-first sequential coloring (ties broken by index).
Coloring greedy_coloring(const Graph& g);

/// Vertices of a greedily grown clique (highest degree first).
std::vector<Vertex> greedy_clique(const Graph& g);

/// Every labeled graph on n <= kMaxLabeledOrder vertices, edge mask order
/// over lexicographic pairs.
std::vector<Graph> labeled_graphs(std::size_t n);

/// Exhaustive corpus: all 2^C(n,2) labeled graphs for n <= 5; for n = 6, 7
/// one representative per isomorphism class, read from graphs<n>.g6 in
/// `data_dir` (default: corpus_directory()).
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> all_graphs(std::size_t n, const std::filesystem::path& data_dir);

/// $SPECTRAL_CHROMA_DATA_DIR if set, else the directory compiled in at build time.
std::filesystem::path corpus_directory();

/// One graph6 string per line; blank lines ignored.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

}  // namespace spectral_chroma
