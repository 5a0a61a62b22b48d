#include "spectral_chroma/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "spectral_chroma/errors.hpp"

#ifndef SPECTRAL_CHROMA_DEFAULT_DATA_DIR
#define SPECTRAL_CHROMA_DEFAULT_DATA_DIR "data"
#endif

namespace spectral_chroma {

// --- Coloring ---------------------------------------------------------------

std::uint32_t Coloring::colors_used() const {
    std::vector<bool> seen(c, false);
    std::uint32_t count = 0;
    for (auto x : colors)
        if (x < c && !seen[x]) {
            seen[x] = true;
            ++count;
        }
    return count;
}

std::optional<Edge> conflicting_edge(const Graph& g, const Coloring& col) {
    for (const Edge& e : g.edges())
        if (col.colors[e.u] == col.colors[e.v]) return e;
    return std::nullopt;
}

bool is_proper(const Graph& g, const Coloring& col) {
    if (col.colors.size() != g.order()) return false;
    if (std::any_of(col.colors.begin(), col.colors.end(), [&](auto x) { return x >= col.c; })) return false;
    return !conflicting_edge(g, col);
}

void require_proper(const Graph& g, const Coloring& col) {
    if (col.colors.size() != g.order())
        throw DomainError(fmt::format("coloring has {} entries for {} vertices", col.colors.size(), g.order()));
    for (std::size_t v = 0; v < col.colors.size(); ++v)
        if (col.colors[v] >= col.c)
            throw DomainError(fmt::format("vertex {} has color {} outside [0, {})", v, col.colors[v], col.c));
    if (auto e = conflicting_edge(g, col))
        throw DomainError(fmt::format("improper coloring: edge ({}, {}) joins two vertices of color {}", e->u, e->v,
                                      col.colors[e->u]));
}

// --- greedy -----------------------------------------------------------------

namespace {

std::vector<Vertex> degree_order(const Graph& g) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

}  // namespace

Coloring greedy_coloring(const Graph& g) {
    Coloring col{std::vector<std::uint32_t>(g.order(), 0), 0};
    std::vector<bool> assigned(g.order(), false);
    std::vector<bool> taken;
    for (Vertex v : degree_order(g)) {
        taken.assign(col.c + 1, false);
        for (Vertex u : g.neighbors(v))
            if (assigned[u]) taken[col.colors[u]] = true;
        std::uint32_t color = 0;
        while (taken[color]) ++color;
        col.colors[v] = color;
        assigned[v] = true;
        col.c = std::max(col.c, color + 1);
    }
    return col;
}

std::vector<Vertex> greedy_clique(const Graph& g) {
    std::vector<Vertex> best;
    // Seed from every vertex, extend by degree order; keep the largest.
    const auto order = degree_order(g);
    for (Vertex seed : order) {
        std::vector<Vertex> clique{seed};
        for (Vertex v : order) {
            if (v == seed) continue;
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, v); }))
                clique.push_back(v);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

// --- exact coloring ---------------------------------------------------------

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, std::size_t k) : g_(g), k_(k), order_(degree_order(g)) {
        const std::size_t n = g.order();
        position_.resize(n);
        for (std::size_t i = 0; i < n; ++i) position_[order_[i]] = i;
        // Earlier-ordered neighbors only; those are the ones already colored.
        earlier_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (Vertex u : g.neighbors(order_[i]))
                if (position_[u] < i) earlier_[i].push_back(u);
        colors_.assign(n, 0);
    }

    std::optional<Coloring> run() {
        if (assign(0, 0)) return Coloring{colors_, static_cast<std::uint32_t>(k_)};
        return std::nullopt;
    }

private:
    bool assign(std::size_t index, std::uint32_t used) {
        if (index == order_.size()) return true;
        const Vertex v = order_[index];
        std::uint64_t forbidden = 0;
        for (Vertex u : earlier_[index]) forbidden |= std::uint64_t{1} << colors_[u];
        // Symmetry breaking: at most one fresh color, the next index.
        const std::uint32_t limit = static_cast<std::uint32_t>(std::min<std::size_t>(k_, used + 1));
        for (std::uint32_t color = 0; color < limit; ++color) {
            if (forbidden & (std::uint64_t{1} << color)) continue;
            colors_[v] = color;
            if (assign(index + 1, std::max(used, color + 1))) return true;
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
    std::vector<std::vector<Vertex>> earlier_;
    std::vector<std::uint32_t> colors_;
};

void refuse_large(const Graph& g) {
    if (g.order() > kMaxChromaticOrder)
        throw RefusalError(fmt::format("chromatic number: {} vertices exceeds the limit of {}", g.order(),
                                       kMaxChromaticOrder));
}

}  // namespace

std::optional<Coloring> find_coloring(const Graph& g, std::size_t k) {
    refuse_large(g);
    if (k == 0) return std::nullopt;
    return Backtracker(g, k).run();
}

ChromaticResult chromatic_number(const Graph& g) {
    refuse_large(g);
    const Coloring greedy = greedy_coloring(g);
    const std::size_t upper = greedy.c;
    const std::size_t lower = std::max<std::size_t>(1, greedy_clique(g).size());
    for (std::size_t k = lower; k < upper; ++k)
        if (auto col = find_coloring(g, k)) return ChromaticResult{k, *col};
    return ChromaticResult{upper, greedy};
}

// --- corpora ----------------------------------------------------------------

std::vector<Graph> labeled_graphs(std::size_t n) {
    if (n < 1) throw DomainError("labeled_graphs: n must be positive");
    if (n > kMaxLabeledOrder)
        throw RefusalError(fmt::format("labeled_graphs: n = {} exceeds {}", n, kMaxLabeledOrder));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    out.reserve(count);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1u) edges.push_back(pairs[b]);
        out.emplace_back(n, edges);
    }
    return out;
}

std::filesystem::path corpus_directory() {
    if (const char* env = std::getenv("SPECTRAL_CHROMA_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return SPECTRAL_CHROMA_DEFAULT_DATA_DIR;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError(fmt::format("cannot open graph6 file '{}'", path.string()));
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<Graph> all_graphs(std::size_t n) { return all_graphs(n, corpus_directory()); }

std::vector<Graph> all_graphs(std::size_t n, const std::filesystem::path& data_dir) {
    if (n < 1) throw DomainError("all_graphs: n must be positive");
    if (n > kMaxCorpusOrder) throw RefusalError(fmt::format("all_graphs: n = {} exceeds {}", n, kMaxCorpusOrder));
    if (n <= 5) return labeled_graphs(n);
    auto graphs = read_graph6_file(data_dir / fmt::format("graphs{}.g6", n));
    for (const auto& g : graphs)
        if (g.order() != n)
            throw DomainError(fmt::format("corpus graphs{}.g6 contains a graph on {} vertices", n, g.order()));
    return graphs;
}

}  // namespace spectral_chroma
