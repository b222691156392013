#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "graphlink/error.hpp"
#include "graphlink/generators.hpp"
#include "graphlink/graph.hpp"
#include "support.hpp"

using namespace graphlink;

namespace {

LabeledGraph labeled(std::initializer_list<LabeledVertex> vs, std::initializer_list<std::pair<const char*, const char*>> es) {
    LabeledGraph g;
    for (const auto& v : vs) g.add_vertex(v);
    for (const auto& [a, b] : es) g.set_edge(g.index_of(a), g.index_of(b), true);
    return g;
}

LoopedGraph looped(std::initializer_list<LoopedVertex> vs, std::initializer_list<std::pair<const char*, const char*>> es) {
    LoopedGraph g;
    for (const auto& v : vs) g.add_vertex(v);
    for (const auto& [a, b] : es) g.set_edge(g.index_of(a), g.index_of(b), true);
    return g;
}

LabeledGraph path(std::initializer_list<const char*> names) {
    LabeledGraph g;
    for (const auto* n : names) g.add_vertex({n, 0, 1});
    for (std::size_t i = 0; i + 1 < g.size(); ++i) g.set_edge(i, i + 1, true);
    return g;
}

// Edge set by name, independent of vertex order.
std::vector<std::pair<std::string, std::string>> named_edges(const LabeledGraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : g.edges()) out.push_back(std::minmax(g.name(a), g.name(b)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("labeled adjacency matrix examples") {
    CHECK(adjacency_matrix(labeled({{"a", 0, 1}}, {})) == Gf2Matrix::from_rows({{0}}));
    CHECK(adjacency_matrix(labeled({{"a", 1, 1}, {"b", 1, 1}}, {{"a", "b"}})) == Gf2Matrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(adjacency_matrix(path({"a", "b", "c"})) == Gf2Matrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
}

TEST_CASE("looped adjacency matrix examples") {
    CHECK(adjacency_matrix(looped({{"a", true}}, {})) == Gf2Matrix::from_rows({{1}}));
    CHECK(adjacency_matrix(looped({{"a", false}, {"b", false}}, {{"a", "b"}})) == Gf2Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(adjacency_matrix(looped({{"a", true}, {"b", false}}, {{"a", "b"}})) == Gf2Matrix::from_rows({{1, 1}, {1, 0}}));
}

TEST_CASE("adjacency matrix round trip") {
    Rng rng(1);
    for (int k = 0; k < 200; ++k) {
        const auto g = random_labeled_graph(rng, k % 9);
        CHECK(labeled_from_matrix(adjacency_matrix(g), g) == g);
        const auto l = random_looped_graph(rng, k % 9);
        CHECK(looped_from_matrix(adjacency_matrix(l), l) == l);
    }
}

TEST_CASE("graph construction errors") {
    LabeledGraph g;
    g.add_vertex({"a", 0, 1});
    CHECK_THROWS_AS(g.add_vertex({"a", 1, 1}), Error);
    CHECK_THROWS_AS(g.add_vertex({"b", 2, 1}), Error);
    CHECK_THROWS_AS(g.add_vertex({"b", 0, 0}), Error);
    CHECK_THROWS_AS(g.set_edge(0, 0, true), Error);
    CHECK_THROWS_AS(static_cast<void>(g.index_of("zz")), Error);
}

TEST_CASE("local complementation examples") {
    const auto p = path({"a", "b", "c"});
    auto t = local_complement(p, std::string_view("b"));
    CHECK(named_edges(t) == std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"a", "c"}, {"b", "c"}});
    CHECK(local_complement(p, std::string_view("a")) == p);
    CHECK(local_complement(t, std::string_view("b")) == p);
    try {
        static_cast<void>(local_complement(p, std::string_view("q")));
        FAIL("expected UnknownVertex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownVertex);
    }
}

TEST_CASE("pivot examples") {
    const auto p = path({"a", "b", "c", "d"});
    const auto q = pivot(p, std::string_view("b"), std::string_view("c"));
    CHECK(named_edges(q) ==
          std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"a", "d"}, {"b", "c"}, {"c", "d"}});
    const auto two = labeled({{"a", 0, 1}, {"b", 0, 1}}, {});
    CHECK(pivot(two, std::string_view("a"), std::string_view("b")) == two);
    try {
        static_cast<void>(pivot(p, std::string_view("a"), std::string_view("a")));
        FAIL("expected SameVertex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SameVertex);
    }
}

TEST_CASE("pivot is an involution on every graph with at most 5 vertices") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (1ULL << support::pair_count(n)); ++code) {
            const auto g = labeled_graph_from_code(n, code, 0, 0);
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    if (u != v) REQUIRE(pivot(pivot(g, u, v), u, v) == g);
        }
}

TEST_CASE("pivot agrees with the defining toggle rule") {
    Rng rng(4);
    for (int k = 0; k < 300; ++k) {
        const auto g = random_labeled_graph(rng, 2 + k % 8);
        const std::size_t u = 0, v = 1;
        const auto p = pivot(g, u, v);
        for (std::size_t x = 0; x < g.size(); ++x)
            for (std::size_t y = 0; y < g.size(); ++y) {
                if (x == y) continue;
                bool toggled = false;
                const bool outside = x > 1 && y > 1;
                auto qualifies = [&](std::size_t a, std::size_t b) {
                    return g.adjacent(a, u) && g.adjacent(b, v) && (!g.adjacent(a, v) || !g.adjacent(b, u));
                };
                if (outside) toggled = qualifies(x, y) || qualifies(y, x);
                REQUIRE(p.adjacent(x, y) == (g.adjacent(x, y) != toggled));
            }
    }
}

TEST_CASE("local complementation and pivot preserve size and labels") {
    Rng rng(8);
    for (int k = 0; k < 300; ++k) {
        const auto g = random_labeled_graph(rng, 2 + k % 8);
        const auto a = local_complement(g, std::size_t{0});
        const auto b = pivot(g, std::size_t{0}, std::size_t{1});
        CHECK(a.vertices() == g.vertices());
        CHECK(b.vertices() == g.vertices());
    }
}

namespace {

// pivot(g;u,v) against LC(LC(LC(g;u);v);u) with u and v exchanged.
bool triple_lc_matches(const LabeledGraph& g, std::size_t u, std::size_t v) {
    const auto p = pivot(g, u, v);
    const auto t = local_complement(local_complement(local_complement(g, u), v), u);
    auto tau = [&](std::size_t i) { return i == u ? v : i == v ? u : i; };
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j && p.adjacent(i, j) != t.adjacent(tau(i), tau(j))) return false;
    return true;
}

}  // namespace

TEST_CASE("pivot equals the triple local complementation up to exchanging u and v") {
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::uint64_t code = 0; code < (1ULL << support::pair_count(n)); ++code) {
            const auto g = labeled_graph_from_code(n, code, 0, 0);
            for (const auto& [u, v] : g.edges()) {
                REQUIRE(triple_lc_matches(g, u, v));
                ++checked;
            }
        }
    CHECK(checked > 100000);
    Rng rng(2);
    for (int k = 0; k < 1000; ++k) {
        const auto g = random_labeled_graph(rng, 2 + k % 9);
        for (const auto& [u, v] : g.edges()) REQUIRE(triple_lc_matches(g, u, v));
    }
}

TEST_CASE("isomorphism examples") {
    const auto abc = path({"a", "b", "c"});
    const auto bca = path({"b", "c", "a"});
    CHECK(are_isomorphic(abc, bca, true).has_value());
    const auto k2 = path({"a", "b"});
    const auto two = labeled({{"a", 0, 1}, {"b", 0, 1}}, {});
    CHECK_FALSE(are_isomorphic(k2, two, true).has_value());
    CHECK_FALSE(are_isomorphic(looped({{"a", true}}, {}), looped({{"a", false}}, {}), true).has_value());
    CHECK(are_isomorphic(looped({{"a", true}}, {}), looped({{"a", false}}, {}), false).has_value());
}

TEST_CASE("isomorphism mapping is adjacency- and label-preserving") {
    Rng rng(12);
    for (int k = 0; k < 300; ++k) {
        const auto g = random_labeled_graph(rng, 1 + k % 8);
        std::vector<std::size_t> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = g.reordered(perm);
        const auto m = are_isomorphic(g, h, true);
        REQUIRE(m.has_value());
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(label_code(g.vertex(i)) == label_code(h.vertex((*m)[i])));
            for (std::size_t j = 0; j < g.size(); ++j)
                if (i != j) REQUIRE(g.adjacent(i, j) == h.adjacent((*m)[i], (*m)[j]));
        }
    }
}

TEST_CASE("canonical form examples") {
    LabeledGraph c4;
    for (const char* n : {"a", "b", "c", "d"}) c4.add_vertex({n, 0, 1});
    c4.set_edge(0, 1, true);
    c4.set_edge(1, 2, true);
    c4.set_edge(2, 3, true);
    c4.set_edge(3, 0, true);
    const std::vector<std::size_t> order{2, 0, 3, 1};
    CHECK(canonical_form(c4) == canonical_form(c4.reordered(order)));
    CHECK(canonical_form(path({"a", "b"})) != canonical_form(labeled({{"a", 0, 1}, {"b", 0, 1}}, {})));
    Rng rng(1);
    const auto big = random_labeled_graph(rng, 13);
    CHECK_THROWS_AS(static_cast<void>(canonical_form(big)), Error);
    CHECK_NOTHROW(static_cast<void>(canonical_form(big, 13)));
}

TEST_CASE("canonical form is invariant under vertex permutations") {
    Rng rng(21);
    for (int k = 0; k < 1000; ++k) {
        const auto g = random_labeled_graph(rng, 1 + k % 8, k % 3 == 0 ? 0.2 : 0.5);
        std::vector<std::size_t> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(canonical_form(g) == canonical_form(g.reordered(perm)));
    }
}

TEST_CASE("canonical forms separate exactly the isomorphism classes on small graphs") {
    // Every labeled graph on 4 vertices with framings/signs from a small palette.
    std::vector<LabeledGraph> all;
    for (std::uint64_t code = 0; code < 64; ++code)
        for (std::uint32_t f : {0U, 1U, 3U})
            for (std::uint32_t s : {0U, 2U, 5U}) all.push_back(labeled_graph_from_code(4, code, f, s));
    std::vector<std::string> keys;
    for (const auto& g : all) keys.push_back(canonical_form(g));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            REQUIRE((keys[i] == keys[j]) == support::brute_isomorphic(all[i], all[j]));
}

TEST_CASE("canonical forms on looped graphs match brute-force isomorphism") {
    Rng rng(30);
    for (int k = 0; k < 400; ++k) {
        const std::size_t n = 1 + k % 6;
        const auto a = random_looped_graph(rng, n);
        const auto b = random_looped_graph(rng, n);
        REQUIRE((canonical_form(a) == canonical_form(b)) == support::brute_isomorphic(a, b));
    }
}

TEST_CASE("regular graphs with many automorphisms canonicalise") {
    // Disjoint triangles vs a 6-cycle (both 2-regular).
    LabeledGraph tri, cyc;
    for (int i = 0; i < 6; ++i) {
        tri.add_vertex({"t" + std::to_string(i), 0, 1});
        cyc.add_vertex({"c" + std::to_string(i), 0, 1});
    }
    for (int i = 0; i < 6; ++i) cyc.set_edge(i, (i + 1) % 6, true);
    for (int b : {0, 3}) {
        tri.set_edge(b, b + 1, true);
        tri.set_edge(b + 1, b + 2, true);
        tri.set_edge(b, b + 2, true);
    }
    CHECK(canonical_form(tri) != canonical_form(cyc));
    // Hypercube Q4 on 16 vertices, within the hard limit.
    LabeledGraph q4;
    for (int i = 0; i < 16; ++i) q4.add_vertex({"q" + std::to_string(i), 0, 1});
    for (int i = 0; i < 16; ++i)
        for (int b = 0; b < 4; ++b)
            if (i < (i ^ (1 << b))) q4.set_edge(i, i ^ (1 << b), true);
    std::vector<std::size_t> perm(16);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::swap(perm[0], perm[5]);
    CHECK(canonical_form(q4, 16) == canonical_form(q4.reordered(perm), 16));
}

TEST_CASE("components, induced subgraphs and fresh names") {
    auto g = labeled({{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}, {"x0", 0, 1}}, {{"a", "c"}});
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<std::size_t>{0, 2});
    const std::vector<std::size_t> keep{2, 0};
    const auto sub = induced_subgraph(g, keep);
    CHECK(sub.name(0) == "c");
    CHECK(sub.adjacent(0, 1));
    CHECK(fresh_name(g) == "x1");
    CHECK(equal_by_name(g, g.reordered(std::vector<std::size_t>{3, 2, 1, 0})));
}
