#include <chrono>
#include <set>

#include "doctest.h"
#include "graphlink/chord.hpp"
#include "graphlink/error.hpp"
#include "graphlink/generators.hpp"
#include "support.hpp"

using namespace graphlink;

namespace {

ChordDiagram cd(std::initializer_list<const char*> tokens) {
    std::vector<std::string> w;
    for (const auto* t : tokens) w.emplace_back(t);
    return ChordDiagram(w);
}

LabeledGraph wheel(std::size_t rim) {
    LabeledGraph g;
    g.add_vertex({"h", 0, 1});
    for (std::size_t i = 0; i < rim; ++i) g.add_vertex({"r" + std::to_string(i), 0, 1});
    for (std::size_t i = 0; i < rim; ++i) {
        g.set_edge(0, 1 + i, true);
        g.set_edge(1 + i, 1 + (i + 1) % rim, true);
    }
    return g;
}

// All perfect matchings of 2n points as words over c0..c{n-1}.
void all_words(std::vector<int>& slots, std::size_t next, std::vector<std::vector<std::string>>& out) {
    const auto first = std::find(slots.begin(), slots.end(), -1);
    if (first == slots.end()) {
        std::vector<std::string> w;
        for (int s : slots) w.push_back("c" + std::to_string(s));
        out.push_back(w);
        return;
    }
    *first = static_cast<int>(next);
    for (auto it = first + 1; it != slots.end(); ++it) {
        if (*it != -1) continue;
        *it = static_cast<int>(next);
        all_words(slots, next + 1, out);
        *it = -1;
    }
    *first = -1;
}

// Canonical keys of every interlacement graph of an n-chord diagram, built from the oracle.
std::set<std::string> realizable_keys(std::size_t n) {
    std::vector<int> slots(2 * n, -1);
    std::vector<std::vector<std::string>> words;
    all_words(slots, 0, words);
    std::set<std::string> keys;
    for (const auto& w : words) {
        LabeledGraph g;
        for (std::size_t i = 0; i < n; ++i) g.add_vertex({"c" + std::to_string(i), 0, 1});
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (oracle::linked(w, g.name(a), g.name(b))) g.set_edge(a, b, true);
        keys.insert(canonical_form(g));
    }
    return keys;
}

bool realizable(const LabeledGraph& g) { return realize(g).has_value(); }

}  // namespace

TEST_CASE("chord diagram validation") {
    CHECK_THROWS_AS(cd({"a", "b", "a"}), Error);
    CHECK_THROWS_AS(cd({"a", "a", "a", "a"}), Error);
    auto d = cd({"a", "b", "a", "b"});
    CHECK(d.chords() == std::vector<std::string>{"a", "b"});
    CHECK(d.label("a") == ChordLabel{0, 1});
    d.set_label("a", {1, -1});
    CHECK(d.label("a") == ChordLabel{1, -1});
    CHECK_THROWS_AS(d.set_label("z", {0, 1}), Error);
    CHECK_THROWS_AS(d.set_label("a", {2, 1}), Error);
}

TEST_CASE("interlacement examples") {
    const auto k2 = interlacement(cd({"a", "b", "a", "b"}));
    CHECK(k2.size() == 2);
    CHECK(k2.adjacent(0, 1));
    const auto two = interlacement(cd({"a", "a", "b", "b"}));
    CHECK_FALSE(two.adjacent(0, 1));
    const auto tri = interlacement(cd({"a", "b", "c", "a", "b", "c"}));
    CHECK(tri.edges().size() == 3);
    auto labelled = cd({"a", "b", "a", "b"});
    labelled.set_label("b", {1, -1});
    CHECK(interlacement(labelled).vertex(1) == LabeledVertex{"b", 1, -1});
}

TEST_CASE("interlacement agrees with the alternation oracle") {
    Rng rng(4);
    for (int k = 0; k < 500; ++k) {
        const auto d = random_chord_diagram(rng, 1 + k % 9);
        const auto g = interlacement(d);
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = a + 1; b < g.size(); ++b)
                REQUIRE(g.adjacent(a, b) == oracle::linked(d.word(), g.name(a), g.name(b)));
    }
}

TEST_CASE("rotations and reflections keep the interlacement graph") {
    Rng rng(6);
    for (int k = 0; k < 300; ++k) {
        const auto d = random_chord_diagram(rng, 1 + k % 8, false);
        auto w = d.word();
        std::rotate(w.begin(), w.begin() + static_cast<long>(k % w.size()), w.end());
        CHECK(equal_by_name(interlacement(ChordDiagram(w)), interlacement(d)));
        std::reverse(w.begin(), w.end());
        CHECK(equal_by_name(interlacement(ChordDiagram(w)), interlacement(d)));
    }
}

TEST_CASE("d-diagram examples") {
    CHECK(is_d_diagram(cd({"a", "b", "a", "b"})));
    CHECK(is_d_diagram(cd({"a", "a", "b", "b"})));
    CHECK_FALSE(is_d_diagram(cd({"a", "b", "c", "a", "b", "c"})));
    Rng rng(9);
    for (int k = 0; k < 300; ++k) {
        const auto d = random_chord_diagram(rng, 1 + k % 8, false);
        const auto g = interlacement(d);
        REQUIRE(is_d_diagram(d) == oracle::bipartite(g.size(), g.edges()));
    }
}

TEST_CASE("realize examples") {
    LabeledGraph k2;
    k2.add_vertex({"a", 0, 1});
    k2.add_vertex({"b", 1, -1});
    k2.set_edge(0, 1, true);
    const auto d = realize(k2);
    REQUIRE(d.has_value());
    CHECK(d->word() == std::vector<std::string>{"a", "b", "a", "b"});
    CHECK(interlacement(*d) == k2);

    LabeledGraph p3;
    for (const char* n : {"a", "b", "c"}) p3.add_vertex({n, 0, 1});
    p3.set_edge(0, 1, true);
    p3.set_edge(1, 2, true);
    const auto e = realize(p3);
    REQUIRE(e.has_value());
    CHECK(equal_by_name(interlacement(*e), p3));

    CHECK(realize(LabeledGraph{}).has_value());

    RealizeStats stats;
    CHECK_FALSE(realize(wheel(5), {}, &stats).has_value());
    CHECK(stats.exhaustive);
    CHECK_THROWS_AS(static_cast<void>(realize(wheel(9))), Error);
}

TEST_CASE("realize ignores loops") {
    LoopedGraph l;
    l.add_vertex({"a", true});
    l.add_vertex({"b", false});
    l.set_edge(0, 1, true);
    const auto d = realize(l);
    REQUIRE(d.has_value());
    CHECK(d->labels().empty());
}

TEST_CASE("realize decides exactly the interlacement graphs, checked against all diagrams with at most 6 chords") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto keys = realizable_keys(n);
        std::set<std::string> seen;
        for (std::uint64_t e = 0; e < (1ULL << support::pair_count(n)); ++e) {
            const auto g = labeled_graph_from_code(n, e, 0, 0);
            const auto key = canonical_form(g);
            if (!seen.insert(key).second) continue;
            const auto d = realize(g);
            REQUIRE(d.has_value() == keys.contains(key));
            if (d) REQUIRE(equal_by_name(interlacement(*d), g));
        }
    }
}

TEST_CASE("realize round trip on every realizable graph with 7 vertices") {
    // Every such graph is the interlacement graph of some 7-chord diagram.
    std::vector<int> slots(14, -1);
    std::vector<std::vector<std::string>> words;
    all_words(slots, 0, words);
    REQUIRE(words.size() == 135135);
    std::set<std::string> seen;
    for (const auto& w : words) {
        const auto g = interlacement(ChordDiagram(w));
        if (!seen.insert(canonical_form(g)).second) continue;
        const auto d = realize(g);
        REQUIRE(d.has_value());
        REQUIRE(equal_by_name(interlacement(*d), g));
    }
    CHECK(seen.size() > 100);
}

TEST_CASE("a graph is realizable iff each component is") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::uint64_t e = 0; e < (1ULL << support::pair_count(n)); ++e) {
            const auto g = labeled_graph_from_code(n, e, 0, 0);
            bool parts = true;
            for (const auto& c : connected_components(g)) parts = parts && realizable(induced_subgraph(g, c));
            REQUIRE(realizable(g) == parts);
        }
}

TEST_CASE("realizability survives local complementation and pivot") {
    Rng rng(10);
    for (int k = 0; k < 300; ++k) {
        const auto g = interlacement(random_chord_diagram(rng, 2 + k % 5, false));
        for (std::size_t v = 0; v < g.size(); ++v) REQUIRE(realizable(local_complement(g, v)));
        for (const auto& [u, v] : g.edges()) REQUIRE(realizable(pivot(g, u, v)));
    }
}

TEST_CASE("time budget is enforced") {
    RealizeOptions opts;
    opts.time_budget_seconds = 0.0;
    opts.max_vertices = 9;
    // W8 on 9 vertices needs far more than 4096 search nodes.
    try {
        static_cast<void>(realize(wheel(8), opts));
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}
