#include "spectral_chroma/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "spectral_chroma/errors.hpp"

namespace spectral_chroma {

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    build(edges);
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : n_(n) {
    build(std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph::Graph(std::size_t n) : n_(n) { build({}); }

void Graph::build(std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n_ == 0) throw DomainError("graph must have at least one vertex");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n_ || b >= n_)
            throw DomainError(fmt::format("edge ({}, {}) has an endpoint outside [0, {})", a, b, n_));
        if (a == b) throw DomainError(fmt::format("loop at vertex {}", a));
        edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<double> Graph::degrees() const {
    std::vector<double> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = static_cast<double>(adj_[v].size());
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(adj_.begin(), adj_.end(), [](const auto& nb) { return nb.empty(); });
}

// --- graph6 -----------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_line_end(text);
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header)) {
        base = kGraph6Header.size();
        text.remove_prefix(base);
    }
    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= text.size()) throw ParseError(fmt::format("graph6: truncated input at byte {}", base + i), base + i);
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError(fmt::format("graph6: byte {} (value {}) outside [63, 126]", base + i, unsigned{c}), base + i);
        return c - 63u;
    };

    std::size_t pos = 0;
    std::size_t n = 0;
    if (text.empty()) throw ParseError("graph6: empty input", base);
    const unsigned first = byte_at(0);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // 126 prefix: either 3 more bytes (18 bits) or 126 followed by 6 bytes (36 bits).
        std::size_t width = 3;
        pos = 1;
        if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
            width = 6;
            pos = 2;
        }
        for (std::size_t i = 0; i < width; ++i) n = (n << 6) | byte_at(pos + i);
        pos += width;
        const std::size_t min_n = width == 3 ? 63 : 258048;
        if (n < min_n)
            throw ParseError(fmt::format("graph6: malformed header, order {} uses a non-minimal length field", n), base);
    }
    if (n == 0) throw ParseError("graph6: header encodes an empty graph", base);
    if (n > kMaxGraph6Order)
        throw ParseError(fmt::format("graph6: order {} exceeds limit {}", n, kMaxGraph6Order), base);

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t nbytes = (bits + 5) / 6;
    if (text.size() < pos + nbytes)
        throw ParseError(fmt::format("graph6: truncated bit field at byte {} (need {} bytes)", base + text.size(), nbytes),
                         base + text.size());
    if (text.size() > pos + nbytes)
        throw ParseError(fmt::format("graph6: trailing data at byte {}", base + pos + nbytes), base + pos + nbytes);

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const unsigned chunk = byte_at(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1u) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (bits % 6 != 0) {
        const unsigned last = byte_at(pos + nbytes - 1);
        const unsigned pad_mask = (1u << (6 - bits % 6)) - 1u;
        if (last & pad_mask)
            throw ParseError(fmt::format("graph6: nonzero padding bits in byte {}", base + pos + nbytes - 1),
                             base + pos + nbytes - 1);
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63u)));
    }
    const std::size_t bits = n * (n - 1) / 2;
    std::vector<unsigned> chunks((bits + 5) / 6, 0u);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) chunks[k / 6] |= 1u << (5 - k % 6);
    for (unsigned c : chunks) out.push_back(static_cast<char>(63 + c));
    return out;
}

// --- edge list --------------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

long long parse_int(std::string_view token, std::size_t line_no) {
    long long value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(fmt::format("edge list line {}: '{}' is not an integer", line_no, token), line_no);
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> declared;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t max_index = 0;
    bool any_edge = false;
    bool seen_content = false;

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw ParseError(fmt::format("edge list line {}: expected two tokens, found {}", line_no, tokens.size()),
                             line_no);
        if (tokens[0] == "n") {
            if (seen_content)
                throw ParseError(fmt::format("edge list line {}: 'n' declaration must come first", line_no), line_no);
            const long long count = parse_int(tokens[1], line_no);
            if (count <= 0 || count > static_cast<long long>(kMaxGraph6Order))
                throw ParseError(fmt::format("edge list line {}: vertex count must lie in [1, {}]", line_no,
                                             kMaxGraph6Order),
                                 line_no);
            declared = static_cast<std::size_t>(count);
            seen_content = true;
            continue;
        }
        seen_content = true;
        const long long u = parse_int(tokens[0], line_no);
        const long long v = parse_int(tokens[1], line_no);
        if (u < 0 || v < 0)
            throw ParseError(fmt::format("edge list line {}: negative vertex index", line_no), line_no);
        if (u == v) throw ParseError(fmt::format("edge list line {}: loop at vertex {}", line_no, u), line_no);
        if (u >= static_cast<long long>(kMaxGraph6Order) || v >= static_cast<long long>(kMaxGraph6Order))
            throw ParseError(fmt::format("edge list line {}: vertex index exceeds limit {}", line_no, kMaxGraph6Order),
                             line_no);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        max_index = std::max({max_index, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
        any_edge = true;
    }
    std::size_t n = declared.value_or(any_edge ? max_index + 1 : 0);
    if (n == 0) throw ParseError("edge list: no vertices declared and no edges given", line_no);
    if (any_edge && max_index >= n)
        throw ParseError(fmt::format("edge list: vertex {} exceeds declared count {}", max_index, n), 1);
    return Graph(n, edges);
}

Graph load_graph(std::string_view spec) {
    if (spec.starts_with("gen:")) return generate(spec.substr(4));
    if (spec.starts_with("@")) {
        const std::string path(spec.substr(1));
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DomainError(fmt::format("cannot open graph file '{}'", path));
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string content = buf.str();
        // A single whitespace-free line is graph6; anything else is an edge list.
        std::string_view body = content;
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
        const bool graph6 = !body.empty() &&
                            std::none_of(body.begin(), body.end(),
                                         [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        return graph6 ? parse_graph6(body) : parse_edge_list(content);
    }
    return parse_graph6(spec);
}

// --- matrices ---------------------------------------------------------------

SymmetricMatrix build_matrix(const Graph& g, GraphMatrixKind kind) {
    const std::size_t n = g.order();
    SymmetricMatrix m(n);
    const auto d = g.degrees();
    if (is_normalized(kind)) {
        for (std::size_t v = 0; v < n; ++v)
            if (d[v] == 0.0)
                throw DomainError(fmt::format("{} undefined: vertex {} is isolated", to_string(kind), v));
    }
    switch (kind) {
        case GraphMatrixKind::Adjacency:
            for (const Edge& e : g.edges()) m.set(e.u, e.v, 1.0);
            break;
        case GraphMatrixKind::Laplacian:
        case GraphMatrixKind::SignlessLaplacian: {
            const double off = kind == GraphMatrixKind::Laplacian ? -1.0 : 1.0;
            for (std::size_t v = 0; v < n; ++v) m.set(v, v, d[v]);
            for (const Edge& e : g.edges()) m.set(e.u, e.v, off);
            break;
        }
        case GraphMatrixKind::NormalizedAdjacency:
        case GraphMatrixKind::NormalizedLaplacian:
        case GraphMatrixKind::NormalizedSignlessLaplacian: {
            const double sign = kind == GraphMatrixKind::NormalizedLaplacian ? -1.0 : 1.0;
            const double diag = kind == GraphMatrixKind::NormalizedAdjacency ? 0.0 : 1.0;
            for (std::size_t v = 0; v < n; ++v) m.set(v, v, diag);
            for (const Edge& e : g.edges()) m.set(e.u, e.v, sign * (1.0 / std::sqrt(d[e.u] * d[e.v])));
            break;
        }
    }
    return m;
}

}  // namespace spectral_chroma
