#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/graph.hpp"
#include "spectral_chroma/oracle.hpp"

using namespace spectral_chroma;

namespace {

bool has_triangle(const Graph& g) {
    const auto n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
    return false;
}

std::size_t parse_error_position(std::string_view text) {
    try {
        parse_graph6(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for ", text);
    return 0;
}

}  // namespace

TEST_CASE("graph construction normalizes edges") {
    const Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges().front() == Edge{0, 3});
    CHECK(g.adjacent(2, 1));
    CHECK(g.degree(1) == 1);
    CHECK(g.has_isolated_vertex() == false);
    CHECK(Graph(3).has_isolated_vertex());
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(Graph(0), DomainError);
}

TEST_CASE("graph6 decoding") {
    const Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));

    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    CHECK(parse_graph6(">>graph6<<D?{\r\n") == star);
    // networkx reference encodings for the documented labelings
    CHECK(emit_graph6(petersen()) == "IheA@GUAo");
    CHECK(emit_graph6(generate("circulant(16;1,7,8)")) == "OhCGKF@wJ_f@F@B__wKF@");
    CHECK(emit_graph6(complete(70)).starts_with("~?@E~~~~~~"));
    CHECK(parse_graph6(emit_graph6(complete(70))) == complete(70));
}

TEST_CASE("graph6 round trip over all small labeled graphs") {
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& g : labeled_graphs(n)) {
            const auto s = emit_graph6(g);
            CHECK(parse_graph6(s) == g);
            CHECK(emit_graph6(parse_graph6(s)) == s);
            ++total;
        }
    }
    CHECK(total == 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("graph6 errors report the byte offset") {
    CHECK(parse_error_position("D?") == 2);        // truncated
    CHECK(parse_error_position("D?{?") == 3);      // trailing data
    CHECK(parse_error_position("D ?") == 1);       // byte out of range
    CHECK(parse_error_position("A@") == 1);        // padding bit set (K2 is "A_")
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);   // n = 0
    CHECK_THROWS_AS(parse_graph6("~??~"), ParseError);  // long header for n < 63
    CHECK(parse_graph6("A_") == complete(2));
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("0 1\n1 2\n2 0") == complete(3));
    const Graph padded = parse_edge_list("n 4\n0 1\n");
    CHECK(padded.order() == 4);
    CHECK(padded.edge_count() == 1);
    CHECK(parse_edge_list("0 1\n1 0\n0 1") == complete(2));
    CHECK(parse_edge_list("# comment\n\n0 1\n") == complete(2));
    CHECK_THROWS_AS(parse_edge_list("0 -1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);
    try {
        parse_edge_list("0 1\n2 2\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("load_graph resolves all input forms") {
    CHECK(load_graph("D?{") == parse_graph6("D?{"));
    CHECK(load_graph("gen:complete(4)") == complete(4));

    const auto dir = std::filesystem::temp_directory_path() / "spectral_chroma_graph_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "star.g6") << "D?{\n";
        std::ofstream(dir / "tri.txt") << "0 1\n1 2\n0 2\n";
    }
    CHECK(load_graph("@" + (dir / "star.g6").string()) == parse_graph6("D?{"));
    CHECK(load_graph("@" + (dir / "tri.txt").string()) == complete(3));
    CHECK_THROWS(load_graph("@" + (dir / "missing.g6").string()));
    std::filesystem::remove_all(dir);
}

TEST_CASE("matrix examples") {
    const auto l = build_matrix(complete(2), GraphMatrixKind::Laplacian);
    CHECK(l(0, 0) == 1.0);
    CHECK(l(0, 1) == -1.0);
    CHECK(l(1, 1) == 1.0);

    const auto na = build_matrix(complete(3), GraphMatrixKind::NormalizedAdjacency);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(na(i, j) == doctest::Approx(i == j ? 0.0 : 0.5));

    const auto q = build_matrix(complete_bipartite(1, 3), GraphMatrixKind::SignlessLaplacian);
    CHECK(q(0, 0) == 3.0);
    CHECK(q(1, 1) == 1.0);
    CHECK(q(3, 3) == 1.0);

    try {
        build_matrix(Graph(3, {{0, 1}}), GraphMatrixKind::NormalizedLaplacian);
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
}

TEST_CASE("matrix invariants over the labeled corpus") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& g : labeled_graphs(n)) {
            const auto l = build_matrix(g, GraphMatrixKind::Laplacian);
            const auto q = build_matrix(g, GraphMatrixKind::SignlessLaplacian);
            for (std::size_t i = 0; i < n; ++i) {
                double row = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    row += l(i, j);
                    CHECK(q(i, j) >= 0.0);
                }
                CHECK(row == 0.0);
            }
            if (g.has_isolated_vertex()) continue;
            const auto a = build_matrix(g, GraphMatrixKind::NormalizedAdjacency);
            const auto nl = build_matrix(g, GraphMatrixKind::NormalizedLaplacian);
            const auto nq = build_matrix(g, GraphMatrixKind::NormalizedSignlessLaplacian);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const double id = i == j ? 1.0 : 0.0;
                    CHECK(nl(i, j) == id - a(i, j));
                    CHECK(nq(i, j) == id + a(i, j));
                }
        }
    }
}

TEST_CASE("generators") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(generate("complete_multipartite(2,2,2)").edge_count() == 12);
    CHECK(generate("circulant(16;1,7,8)").edge_count() == 40);
    CHECK(barbell(8).order() == 16);
    CHECK(barbell(8).edge_count() == 2 * 28 + 1);
    CHECK(barbell(8).adjacent(7, 8));
    CHECK(sun(8).order() == 16);
    CHECK(sun(8).edge_count() == 28 + 16);
    CHECK(sun(4).adjacent(7, 0));
    CHECK(sun(4).adjacent(7, 3));

    const Graph w = windmill(3, 6);
    CHECK(w.order() == 16);
    CHECK(w.edge_count() == 45);
    CHECK(w.degree(0) == 15);
    CHECK(chromatic_number(w).chi == 6);

    const Graph gr = mycielskian(cycle(5));
    CHECK(gr.order() == 11);
    CHECK(gr.edge_count() == 20);
    CHECK_FALSE(has_triangle(gr));
    CHECK(gr == grotzsch());
    CHECK(generate("mycielskian(cycle(5))") == grotzsch());

    CHECK(petersen().edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(petersen().degree(v) == 3);

    CHECK(generate("circulant(9;1,3)") == generate("circulant(9;1,3)"));
    CHECK(generate("petersen()") == petersen());
}

TEST_CASE("generator parameter errors") {
    CHECK_THROWS_AS(generate("cycle(2)"), DomainError);
    CHECK_THROWS_AS(generate("complete(0)"), DomainError);
    CHECK_THROWS_AS(generate("circulant(16;9)"), DomainError);
    CHECK_THROWS_AS(generate("circulant(16;0)"), DomainError);
    CHECK_THROWS_AS(generate("sun(2)"), DomainError);
    CHECK_THROWS_AS(generate("windmill(0,3)"), DomainError);
    CHECK_THROWS_AS(generate("nosuchfamily(3)"), DomainError);
    CHECK_THROWS_AS(generate("complete(4"), DomainError);
    CHECK_THROWS_AS(generate("complete(4)x"), DomainError);
}

TEST_CASE("random graphs") {
    CHECK(random_gnp(12, 0.0, 5).edge_count() == 0);
    CHECK(random_gnp(12, 1.0, 5) == complete(12));
    CHECK(random_gnp(20, 0.5, 42) == random_gnp(20, 0.5, 42));

    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto e = random_gnp(20, 0.5, seed).edge_count();
        CHECK(e >= 60);
        CHECK(e <= 130);
        total += double(e);
    }
    CHECK(std::abs(total / 1000.0 - 95.0) <= 3.0);
}
