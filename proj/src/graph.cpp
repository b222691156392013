#include "graphlink/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "graphlink/error.hpp"

namespace graphlink {

namespace {

void validate(const LabeledVertex& v) {
    if (v.framing != 0 && v.framing != 1)
        throw Error(ErrorKind::BadLabel, "framing of '" + v.name + "' must be 0 or 1");
    if (v.sign != 1 && v.sign != -1) throw Error(ErrorKind::BadLabel, "sign of '" + v.name + "' must be +1 or -1");
}

void validate(const LoopedVertex&) {}

template <class V>
void check_index(const BasicGraph<V>& g, std::size_t i) {
    if (i >= g.size())
        throw Error(ErrorKind::UnknownVertex,
                    "vertex index " + std::to_string(i) + " outside a graph on " + std::to_string(g.size()) + " vertices");
}

}  // namespace

template <class V>
void BasicGraph<V>::set_vertex(std::size_t i, V v) {
    validate(v);
    if (auto other = find(v.name); other && *other != i) throw Error(ErrorKind::DuplicateName, "vertex '" + v.name + "'");
    vertices_.at(i) = std::move(v);
}

template <class V>
std::optional<std::size_t> BasicGraph<V>::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].name == name) return i;
    return std::nullopt;
}

template <class V>
std::size_t BasicGraph<V>::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

template <class V>
std::size_t BasicGraph<V>::add_vertex(V v) {
    validate(v);
    if (v.name.empty()) throw Error(ErrorKind::BadLabel, "vertex name must not be empty");
    if (find(v.name)) throw Error(ErrorKind::DuplicateName, "vertex '" + v.name + "'");
    const std::size_t n = vertices_.size();
    Gf2Matrix grown(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (adj_.get(i, j)) grown.set(i, j, true);
    adj_ = std::move(grown);
    vertices_.push_back(std::move(v));
    return n;
}

template <class V>
void BasicGraph<V>::set_edge(std::size_t i, std::size_t j, bool present) {
    check_index(*this, i);
    check_index(*this, j);
    if (i == j) throw Error(ErrorKind::SameVertex, "self-edge at '" + vertices_[i].name + "'");
    adj_.set(i, j, present);
    adj_.set(j, i, present);
}

template <class V>
void BasicGraph<V>::toggle_edge(std::size_t i, std::size_t j) {
    set_edge(i, j, !adjacent(i, j));
}

template <class V>
std::vector<std::size_t> BasicGraph<V>::neighbors(std::size_t i) const {
    check_index(*this, i);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (adj_.get(i, j)) out.push_back(j);
    return out;
}

template <class V>
std::size_t BasicGraph<V>::degree(std::size_t i) const {
    check_index(*this, i);
    std::size_t d = 0;
    for (const auto w : adj_.row(i)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

template <class V>
std::vector<std::pair<std::size_t, std::size_t>> BasicGraph<V>::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adj_.get(i, j)) out.emplace_back(i, j);
    return out;
}

template <class V>
BasicGraph<V> BasicGraph<V>::without(std::span<const std::size_t> indices) const {
    std::vector<bool> drop(size(), false);
    for (const auto i : indices) {
        check_index(*this, i);
        drop[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < size(); ++i)
        if (!drop[i]) keep.push_back(i);
    return reordered(keep);
}

template <class V>
BasicGraph<V> BasicGraph<V>::reordered(std::span<const std::size_t> order) const {
    BasicGraph out;
    out.vertices_.reserve(order.size());
    for (const auto i : order) {
        check_index(*this, i);
        out.vertices_.push_back(vertices_[i]);
    }
    out.adj_ = Gf2Matrix(order.size());
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = 0; b < order.size(); ++b)
            if (adj_.get(order[a], order[b])) out.adj_.set(a, b, true);
    return out;
}

Gf2Matrix adjacency_matrix(const LabeledGraph& g) {
    Gf2Matrix m = g.adjacency();
    for (std::size_t i = 0; i < g.size(); ++i) m.set(i, i, g.vertex(i).framing == 1);
    return m;
}

Gf2Matrix adjacency_matrix(const LoopedGraph& l) {
    Gf2Matrix m = l.adjacency();
    for (std::size_t i = 0; i < l.size(); ++i) m.set(i, i, l.vertex(i).looped);
    return m;
}

LabeledGraph labeled_from_matrix(const Gf2Matrix& m, const LabeledGraph& like) {
    if (m.size() != like.size() || !m.is_symmetric())
        throw Error(ErrorKind::IndexOutOfRange, "matrix does not fit the vertex list");
    LabeledGraph out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        LabeledVertex v = like.vertex(i);
        v.framing = m.get(i, i) ? 1 : 0;
        out.add_vertex(std::move(v));
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.get(i, j)) out.set_edge(i, j, true);
    return out;
}

LoopedGraph looped_from_matrix(const Gf2Matrix& m, const LoopedGraph& like) {
    if (m.size() != like.size() || !m.is_symmetric())
        throw Error(ErrorKind::IndexOutOfRange, "matrix does not fit the vertex list");
    LoopedGraph out;
    for (std::size_t i = 0; i < m.size(); ++i) out.add_vertex({like.name(i), m.get(i, i)});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.get(i, j)) out.set_edge(i, j, true);
    return out;
}

template <class V>
BasicGraph<V> local_complement(const BasicGraph<V>& g, std::size_t v) {
    check_index(g, v);
    BasicGraph<V> out = g;
    const auto nv = g.neighbors(v);
    for (std::size_t a = 0; a < nv.size(); ++a)
        for (std::size_t b = a + 1; b < nv.size(); ++b) out.toggle_edge(nv[a], nv[b]);
    return out;
}

template <class V>
BasicGraph<V> local_complement(const BasicGraph<V>& g, std::string_view v) {
    return local_complement(g, g.index_of(v));
}

template <class V>
BasicGraph<V> pivot(const BasicGraph<V>& g, std::size_t u, std::size_t v) {
    check_index(g, u);
    check_index(g, v);
    if (u == v) throw Error(ErrorKind::SameVertex, "pivot needs two distinct vertices, got '" + g.name(u) + "' twice");
    BasicGraph<V> out = g;
    const std::size_t n = g.size();
    auto qualifies = [&](std::size_t x, std::size_t y) {
        return g.adjacent(x, u) && g.adjacent(y, v) && (!g.adjacent(x, v) || !g.adjacent(y, u));
    };
    for (std::size_t x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        for (std::size_t y = x + 1; y < n; ++y) {
            if (y == u || y == v) continue;
            if (qualifies(x, y) || qualifies(y, x)) out.toggle_edge(x, y);
        }
    }
    return out;
}

template <class V>
BasicGraph<V> pivot(const BasicGraph<V>& g, std::string_view u, std::string_view v) {
    return pivot(g, g.index_of(u), g.index_of(v));
}

std::uint32_t label_code(const LabeledVertex& v) noexcept {
    return static_cast<std::uint32_t>(v.framing * 2 + (v.sign < 0 ? 1 : 0));
}

std::uint32_t label_code(const LoopedVertex& v) noexcept { return v.looped ? 1U : 0U; }

namespace {

// Iterated colour refinement; colours are ranks of sorted signatures so they
// depend only on the isomorphism class of the coloured graph.
std::vector<std::uint32_t> refine(std::span<const std::uint64_t> adj, std::span<const std::uint32_t> initial) {
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> colour(initial.begin(), initial.end());
    {
        std::vector<std::uint32_t> distinct(colour);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (auto& c : colour)
            c = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
    }
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::vector<std::uint32_t>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            sig[i].push_back(colour[i]);
            std::vector<std::uint32_t> nb;
            for (std::size_t j = 0; j < n; ++j)
                if ((adj[i] >> j) & 1U) nb.push_back(colour[j]);
            std::sort(nb.begin(), nb.end());
            sig[i].insert(sig[i].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<std::uint32_t>, std::uint32_t> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        std::uint32_t next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (std::size_t i = 0; i < n; ++i) colour[i] = rank[sig[i]];
        if (rank.size() == classes) break;
        classes = rank.size();
    }
    return colour;
}

struct CanonicalSearch {
    std::span<const std::uint64_t> adj;
    std::vector<std::uint32_t> colour;
    std::vector<std::uint32_t> slot_colour;
    std::size_t n = 0;

    std::vector<std::size_t> order;
    std::vector<std::uint64_t> rows;
    std::uint64_t used = 0;

    bool have_best = false;
    std::vector<std::size_t> best_order;
    std::vector<std::uint64_t> best_rows;

    std::uint64_t row_of(std::size_t v, std::size_t k) const {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < k; ++j) r = (r << 1) | ((adj[v] >> order[j]) & 1U);
        return r;
    }

    // -1: current prefix already smaller than the best; 0: equal; 1: larger.
    int compare_prefix(std::size_t k) const {
        for (std::size_t j = 0; j < k; ++j) {
            if (rows[j] < best_rows[j]) return -1;
            if (rows[j] > best_rows[j]) return 1;
        }
        return 0;
    }

    void run(std::size_t k) {
        if (k == n) {
            if (!have_best || compare_prefix(n) < 0) {
                have_best = true;
                best_order = order;
                best_rows = rows;
            }
            return;
        }
        std::vector<std::size_t> cand;
        std::uint64_t min_row = ~std::uint64_t{0};
        for (std::size_t v = 0; v < n; ++v) {
            if ((used >> v) & 1U || colour[v] != slot_colour[k]) continue;
            const auto r = row_of(v, k);
            if (r < min_row) {
                min_row = r;
                cand.clear();
            }
            if (r == min_row) cand.push_back(v);
        }
        std::vector<std::size_t> tried;
        for (const auto v : cand) {
            // Skip v when it is a twin of an already tried candidate: exchanging
            // them is an automorphism fixing the placed prefix.
            const bool twin = std::any_of(tried.begin(), tried.end(), [&](std::size_t w) {
                const std::uint64_t bv = std::uint64_t{1} << v;
                const std::uint64_t bw = std::uint64_t{1} << w;
                return (adj[v] & ~bw) == (adj[w] & ~bv);
            });
            if (twin) continue;
            tried.push_back(v);
            if (have_best) {
                // Siblings may see a best that was improved by an earlier sibling.
                const int cmp = compare_prefix(k);
                if (cmp > 0 || (cmp == 0 && min_row > best_rows[k])) return;
            }
            order[k] = v;
            rows[k] = min_row;
            used |= std::uint64_t{1} << v;
            run(k + 1);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

void append_u64(std::string& out, std::uint64_t x) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((x >> (8 * b)) & 0xFFU));
}

}  // namespace

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> adjacency, std::span<const std::uint32_t> colours) {
    const std::size_t n = adjacency.size();
    if (n > kCanonicalHardLimit)
        throw Error(ErrorKind::TooLarge, "canonical labelling supports at most 64 vertices, got " + std::to_string(n));
    if (colours.size() != n) throw Error(ErrorKind::IndexOutOfRange, "colour vector length mismatch");

    CanonicalSearch s;
    s.adj = adjacency;
    s.n = n;
    s.colour = refine(adjacency, colours);
    s.slot_colour = s.colour;
    std::sort(s.slot_colour.begin(), s.slot_colour.end());
    s.order.assign(n, 0);
    s.rows.assign(n, 0);
    s.run(0);

    CanonicalLabeling out;
    out.order = s.best_order;
    append_u64(out.key, n);
    for (std::size_t k = 0; k < n; ++k) append_u64(out.key, colours[out.order[k]]);
    for (std::size_t k = 0; k < n; ++k) append_u64(out.key, s.best_rows[k]);
    return out;
}

template <class V>
CanonicalLabeling canonical_labeling(const BasicGraph<V>& g, bool respect_labels) {
    const std::size_t n = g.size();
    if (n > kCanonicalHardLimit)
        throw Error(ErrorKind::TooLarge, "canonical labelling supports at most 64 vertices, got " + std::to_string(n));
    std::vector<std::uint64_t> adj(n, 0);
    std::vector<std::uint32_t> colours(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(i, j)) adj[i] |= std::uint64_t{1} << j;
        if (respect_labels) colours[i] = label_code(g.vertex(i));
    }
    return canonical_labeling(adj, colours);
}

template <class V>
std::string canonical_form(const BasicGraph<V>& g, std::size_t bound) {
    if (g.size() > bound)
        throw Error(ErrorKind::TooLarge, "canonical form bound is " + std::to_string(bound) + " vertices, got " +
                                             std::to_string(g.size()));
    return canonical_labeling(g, true).key;
}

template <class V>
std::optional<std::vector<std::size_t>> are_isomorphic(const BasicGraph<V>& g1, const BasicGraph<V>& g2,
                                                       bool respect_labels) {
    if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size()) return std::nullopt;
    const auto c1 = canonical_labeling(g1, respect_labels);
    const auto c2 = canonical_labeling(g2, respect_labels);
    if (c1.key != c2.key) return std::nullopt;
    std::vector<std::size_t> mapping(g1.size());
    for (std::size_t k = 0; k < g1.size(); ++k) mapping[c1.order[k]] = c2.order[k];
    return mapping;
}

template <class V>
bool equal_by_name(const BasicGraph<V>& g1, const BasicGraph<V>& g2) {
    if (g1.size() != g2.size()) return false;
    std::vector<std::size_t> image(g1.size());
    for (std::size_t i = 0; i < g1.size(); ++i) {
        const auto j = g2.find(g1.name(i));
        if (!j || !(g1.vertex(i) == g2.vertex(*j))) return false;
        image[i] = *j;
    }
    for (std::size_t i = 0; i < g1.size(); ++i)
        for (std::size_t j = i + 1; j < g1.size(); ++j)
            if (g1.adjacent(i, j) != g2.adjacent(image[i], image[j])) return false;
    return true;
}

template <class V>
std::vector<std::vector<std::size_t>> connected_components(const BasicGraph<V>& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(g.size(), false);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (const auto y : g.neighbors(x)) {
                if (seen[y]) continue;
                seen[y] = true;
                comp.push_back(y);
                stack.push_back(y);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

template <class V>
BasicGraph<V> induced_subgraph(const BasicGraph<V>& g, std::span<const std::size_t> keep) {
    return g.reordered(keep);
}

template <class V>
std::string fresh_name(const BasicGraph<V>& g, std::string_view prefix) {
    for (std::size_t k = 0;; ++k) {
        std::string candidate = std::string(prefix) + std::to_string(k);
        if (!g.find(candidate)) return candidate;
    }
}

#define GRAPHLINK_INSTANTIATE(V)                                                                                  \
    template class BasicGraph<V>;                                                                                 \
    template BasicGraph<V> local_complement(const BasicGraph<V>&, std::size_t);                                   \
    template BasicGraph<V> local_complement(const BasicGraph<V>&, std::string_view);                              \
    template BasicGraph<V> pivot(const BasicGraph<V>&, std::size_t, std::size_t);                                 \
    template BasicGraph<V> pivot(const BasicGraph<V>&, std::string_view, std::string_view);                       \
    template CanonicalLabeling canonical_labeling(const BasicGraph<V>&, bool);                                    \
    template std::string canonical_form(const BasicGraph<V>&, std::size_t);                                       \
    template std::optional<std::vector<std::size_t>> are_isomorphic(const BasicGraph<V>&, const BasicGraph<V>&,  \
                                                                     bool);                                       \
    template bool equal_by_name(const BasicGraph<V>&, const BasicGraph<V>&);                                      \
    template std::vector<std::vector<std::size_t>> connected_components(const BasicGraph<V>&);                    \
    template BasicGraph<V> induced_subgraph(const BasicGraph<V>&, std::span<const std::size_t>);                  \
    template std::string fresh_name(const BasicGraph<V>&, std::string_view);

GRAPHLINK_INSTANTIATE(LabeledVertex)
GRAPHLINK_INSTANTIATE(LoopedVertex)

#undef GRAPHLINK_INSTANTIATE

}  // namespace graphlink
