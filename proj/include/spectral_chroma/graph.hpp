#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectral_chroma/linalg.hpp"
#include "spectral_chroma/matrix_kind.hpp"

namespace spectral_chroma {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    /// Normalizes each pair to u < v and collapses duplicates. Throws
    /// DomainError on n == 0, a loop, or an endpoint outside [0, n).
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
    explicit Graph(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::vector<double> degrees() const;
    bool adjacent(Vertex u, Vertex v) const;
    bool has_isolated_vertex() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build(std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// --- text formats -----------------------------------------------------------

inline constexpr std::size_t kMaxGraph6Order = 10000;

/// Decodes one graph6 line (an optional ">>graph6<<" prefix and trailing
/// CR/LF are accepted). Errors carry the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Lines of "u v" with 0-based indices; an optional first line "n <count>"
/// fixes the order. Blank lines and '#' comments are skipped.
Graph parse_edge_list(std::string_view text);

/// Resolves a command-line graph argument: "gen:<family spec>", "@<path>"
/// (graph6 or edge list), or a bare graph6 string.
Graph load_graph(std::string_view spec);

// --- matrices ---------------------------------------------------------------

SymmetricMatrix build_matrix(const Graph& g, GraphMatrixKind kind);

// --- generators -------------------------------------------------------------
//
// Vertex labelings:
//   complete(n)             0..n-1
//   complete_bipartite(a,b) sides [0,a) and [a,a+b)
//   complete_multipartite   parts occupy consecutive blocks in the given order
//   cycle(n)                i ~ i+1 mod n (n >= 3)
//   circulant(n,S)          i ~ i+s mod n for s in S, S within [1, n/2]
//   barbell(k)              cliques on [0,k) and [k,2k), bridge (k-1, k)
//   sun(k)                  hub clique [0,k); outer vertex k+i ~ i, (i+1) mod k (k >= 3)
//   windmill(a,b)           shared vertex 0; copy j uses 1+j(b-1) .. (j+1)(b-1)
//   mycielskian(g)          g on [0,n), shadow n+i ~ N_g(i), apex 2n ~ all shadows
//   petersen()              outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5

Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph complete_multipartite(std::span<const std::size_t> parts);
Graph cycle(std::size_t n);
Graph circulant(std::size_t n, std::span<const std::size_t> offsets);
Graph barbell(std::size_t k);
Graph sun(std::size_t k);
Graph windmill(std::size_t copies, std::size_t clique_size);
Graph mycielskian(const Graph& g);
Graph petersen();
Graph grotzsch();

/// Builds a graph from the generator mini-language, e.g. "complete(4)",
/// "circulant(16;1,7,8)", "complete_multipartite(2,2,2)",
/// "mycielskian(cycle(5))", "petersen".
Graph generate(std::string_view family_spec);

/// G(n,p): pair k of the lexicographic pair order (i<j) is an edge when the
/// k-th SplitMix64 output for `seed` is below floor(p * 2^64).
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace spectral_chroma
