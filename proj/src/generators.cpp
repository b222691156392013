#include "graphlink/generators.hpp"

#include <algorithm>

#include "graphlink/invariants.hpp"

namespace graphlink {

namespace {

template <class V>
void add_random_edges(Rng& rng, BasicGraph<V>& g, double density) {
    std::bernoulli_distribution edge(density);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (edge(rng)) g.set_edge(i, j, true);
}

template <class V>
void add_code_edges(BasicGraph<V>& g, std::uint64_t edges) {
    std::size_t bit = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j, ++bit)
            if ((edges >> bit) & 1U) g.set_edge(i, j, true);
}

}  // namespace

LabeledGraph random_labeled_graph(Rng& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(0.5);
    LabeledGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex({"v" + std::to_string(i), coin(rng) ? 1 : 0, coin(rng) ? 1 : -1});
    add_random_edges(rng, g, density);
    return g;
}

LoopedGraph random_looped_graph(Rng& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(0.5);
    LoopedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex({"v" + std::to_string(i), coin(rng)});
    add_random_edges(rng, g, density);
    return g;
}

LabeledGraph random_graph_knot(Rng& rng, std::size_t n, double density) {
    while (true) {
        auto g = random_labeled_graph(rng, n, density);
        if (is_graph_knot(g)) return g;
    }
}

Gf2Matrix random_symmetric(Rng& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (coin(rng)) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
    return m;
}

ChordDiagram random_chord_diagram(Rng& rng, std::size_t chords, bool random_labels) {
    std::vector<std::string> word;
    for (std::size_t i = 0; i < chords; ++i) {
        word.push_back("c" + std::to_string(i));
        word.push_back("c" + std::to_string(i));
    }
    std::shuffle(word.begin(), word.end(), rng);
    ChordDiagram d(word);
    if (random_labels) {
        std::bernoulli_distribution coin(0.5);
        for (const auto& c : d.chords())
            if (coin(rng)) d.set_label(c, {coin(rng) ? 1 : 0, coin(rng) ? 1 : -1});
    }
    return d;
}

LabeledGraph labeled_graph_from_code(std::size_t n, std::uint64_t edges, std::uint32_t framings, std::uint32_t signs) {
    LabeledGraph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex({"v" + std::to_string(i), static_cast<int>((framings >> i) & 1U), ((signs >> i) & 1U) ? -1 : 1});
    add_code_edges(g, edges);
    return g;
}

LoopedGraph looped_graph_from_code(std::size_t n, std::uint64_t edges, std::uint32_t loops) {
    LoopedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex({"v" + std::to_string(i), ((loops >> i) & 1U) != 0});
    add_code_edges(g, edges);
    return g;
}

}  // namespace graphlink
