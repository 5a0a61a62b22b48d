#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/graph.hpp"

namespace spectral_chroma {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void add_clique(EdgeList& edges, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) edges.emplace_back(vertices[i], vertices[j]);
}

void require_positive(std::size_t value, const char* what) {
    if (value == 0) throw DomainError(fmt::format("{} must be positive", what));
}

}  // namespace

Graph complete(std::size_t n) {
    require_positive(n, "complete: n");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    const std::size_t parts[] = {a, b};
    return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
    if (parts.empty()) throw DomainError("complete_multipartite: no parts");
    std::size_t n = 0;
    for (std::size_t p : parts) {
        require_positive(p, "complete_multipartite: part size");
        n += p;
    }
    std::vector<std::size_t> block(n);
    std::size_t v = 0;
    for (std::size_t b = 0; b < parts.size(); ++b)
        for (std::size_t i = 0; i < parts[b]; ++i) block[v++] = b;
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (block[i] != block[j]) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw DomainError("cycle: n must be at least 3");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

Graph circulant(std::size_t n, std::span<const std::size_t> offsets) {
    require_positive(n, "circulant: n");
    if (offsets.empty()) throw DomainError("circulant: empty connection set");
    EdgeList edges;
    for (std::size_t s : offsets) {
        if (s < 1 || s > n / 2)
            throw DomainError(fmt::format("circulant: offset {} outside [1, {}]", s, n / 2));
        for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + s) % n));
    }
    return Graph(n, edges);
}

Graph barbell(std::size_t k) {
    require_positive(k, "barbell: k");
    std::vector<Vertex> left(k), right(k);
    for (Vertex i = 0; i < k; ++i) {
        left[i] = i;
        right[i] = static_cast<Vertex>(k + i);
    }
    EdgeList edges;
    add_clique(edges, left);
    add_clique(edges, right);
    edges.emplace_back(static_cast<Vertex>(k - 1), static_cast<Vertex>(k));
    return Graph(2 * k, edges);
}

Graph sun(std::size_t k) {
    if (k < 3) throw DomainError("sun: k must be at least 3");
    std::vector<Vertex> hub(k);
    for (Vertex i = 0; i < k; ++i) hub[i] = i;
    EdgeList edges;
    add_clique(edges, hub);
    for (Vertex i = 0; i < k; ++i) {
        const auto outer = static_cast<Vertex>(k + i);
        edges.emplace_back(outer, i);
        edges.emplace_back(outer, static_cast<Vertex>((i + 1) % k));
    }
    return Graph(2 * k, edges);
}

Graph windmill(std::size_t copies, std::size_t clique_size) {
    require_positive(copies, "windmill: copies");
    if (clique_size < 2) throw DomainError("windmill: clique size must be at least 2");
    const std::size_t n = copies * (clique_size - 1) + 1;
    EdgeList edges;
    for (std::size_t c = 0; c < copies; ++c) {
        std::vector<Vertex> blade{0};
        for (std::size_t j = 0; j + 1 < clique_size; ++j)
            blade.push_back(static_cast<Vertex>(1 + c * (clique_size - 1) + j));
        add_clique(edges, blade);
    }
    return Graph(n, edges);
}

Graph mycielskian(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    EdgeList edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(e.u, e.v);
        edges.emplace_back(n + e.u, e.v);
        edges.emplace_back(n + e.v, e.u);
    }
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph(2 * std::size_t{n} + 1, edges);
}

Graph petersen() {
    EdgeList edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph(10, edges);
}

Graph grotzsch() { return mycielskian(cycle(5)); }

// --- mini-language ----------------------------------------------------------

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    Graph parse_all() {
        Graph g = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing text");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError(fmt::format("generator spec '{}': {} at position {}", text_, why, pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(fmt::format("expected '{}'", c));
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a family name");
        std::string id(text_.substr(start, pos_ - start));
        std::transform(id.begin(), id.end(), id.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return id;
    }

    std::size_t integer() {
        skip_ws();
        std::size_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail("expected a non-negative integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::vector<std::size_t> integer_list(char close) {
        std::vector<std::size_t> out;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == close) return out;
        out.push_back(integer());
        while (accept(',')) out.push_back(integer());
        return out;
    }

    std::vector<std::size_t> args(std::size_t expected, const std::string& name) {
        expect('(');
        auto values = integer_list(')');
        expect(')');
        if (values.size() != expected)
            fail(fmt::format("{} takes {} argument(s), got {}", name, expected, values.size()));
        return values;
    }

    Graph parse_spec() {
        const std::string name = identifier();
        if (name == "petersen" || name == "grotzsch") {
            if (accept('(')) expect(')');
            return name == "petersen" ? petersen() : grotzsch();
        }
        if (name == "mycielskian") {
            expect('(');
            Graph inner = parse_spec();
            expect(')');
            return mycielskian(inner);
        }
        if (name == "circulant") {
            expect('(');
            const std::size_t n = integer();
            expect(';');
            auto offsets = integer_list(')');
            expect(')');
            return circulant(n, offsets);
        }
        if (name == "complete_multipartite") {
            expect('(');
            auto parts = integer_list(')');
            expect(')');
            return complete_multipartite(parts);
        }
        if (name == "complete") return complete(args(1, name)[0]);
        if (name == "cycle") return cycle(args(1, name)[0]);
        if (name == "barbell") return barbell(args(1, name)[0]);
        if (name == "sun") return sun(args(1, name)[0]);
        if (name == "complete_bipartite") {
            auto a = args(2, name);
            return complete_bipartite(a[0], a[1]);
        }
        if (name == "windmill") {
            auto a = args(2, name);
            return windmill(a[0], a[1]);
        }
        fail(fmt::format("unknown family '{}'", name));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph generate(std::string_view family_spec) { return SpecParser(family_spec).parse_all(); }

// --- G(n, p) ----------------------------------------------------------------

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    require_positive(n, "random_gnp: n");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError(fmt::format("random_gnp: p = {} outside [0, 1]", p));
    // floor(p * 2^64) is exact in double; p == 1 admits every draw.
    const double scaled = std::ldexp(p, 64);
    const bool always = scaled >= 0x1.0p64;
    const auto threshold = always ? 0ULL : static_cast<std::uint64_t>(scaled);
    EdgeList edges;
    std::uint64_t k = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++k)
            if (always || splitmix64(seed, k) < threshold) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace spectral_chroma
