#include "graphlink/equiv_search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_map>

#include "graphlink/error.hpp"
#include "graphlink/invariants.hpp"

namespace graphlink {

std::string_view to_string(EquivStatus s) noexcept {
    switch (s) {
        case EquivStatus::Certificate: return "certificate";
        case EquivStatus::Distinguished: return "distinguished";
        case EquivStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::optional<std::string> invariant_distinguish(const LabeledGraph& g1, const LabeledGraph& g2, FamilySet families) {
    if (component_count(g1) != component_count(g2)) return "component count";
    if (!is_graph_knot(g1) || !is_graph_knot(g2)) return std::nullopt;
    const auto w1 = writhe(g1);
    const auto w2 = writhe(g2);
    if (!families.contains(MoveFamily::Og1) && w1.total != w2.total) return "total writhe";
    const bool only_pivots = !families.contains(MoveFamily::Og1) && !families.contains(MoveFamily::Og2) &&
                             !families.contains(MoveFamily::Og3);
    if (only_pivots) {
        auto a = w1.per_vertex;
        auto b = w2.per_vertex;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return "writhe multiset";
    }
    return std::nullopt;
}

namespace {

struct LabeledOps {
    using Graph = LabeledGraph;
    static std::vector<MoveDescriptor> moves(const Graph& g, FamilySet f, std::size_t max_vertices) {
        auto out = list_graph_moves(g, f);
        auto add = list_graph_additions(g, f, max_vertices);
        out.insert(out.end(), add.begin(), add.end());
        return out;
    }
    static Graph apply(const Graph& g, const MoveDescriptor& m) { return apply_graph_move(g, m); }
    static MoveDescriptor invert(const Graph& before, const MoveDescriptor& m) { return inverse_graph_move(before, m); }
};

struct LoopedOps {
    using Graph = LoopedGraph;
    static std::vector<MoveDescriptor> moves(const Graph& g, FamilySet f, std::size_t max_vertices) {
        auto out = list_loop_moves(g, f);
        auto add = list_loop_additions(g, f, max_vertices);
        out.insert(out.end(), add.begin(), add.end());
        return out;
    }
    static Graph apply(const Graph& g, const MoveDescriptor& m) { return apply_loop_move(g, m); }
    static MoveDescriptor invert(const Graph& before, const MoveDescriptor& m) { return inverse_loop_move(before, m); }
};

template <class G>
struct Node {
    G graph;
    std::size_t parent;  // index into the same side's node list; self for the root
    MoveDescriptor move;  // parent -> this
    std::size_t depth;
};

template <class G>
struct Side {
    std::vector<Node<G>> nodes;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::size_t> frontier;
    std::size_t depth = 0;

    // Moves from the root to node i, in application order.
    std::vector<std::pair<std::size_t, MoveDescriptor>> path_to(std::size_t i) const {
        std::vector<std::pair<std::size_t, MoveDescriptor>> out;
        while (nodes[i].parent != i) {
            out.emplace_back(nodes[i].parent, nodes[i].move);
            i = nodes[i].parent;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

std::string rename(const std::map<std::string, std::string>& names, const std::string& s) {
    const auto it = names.find(s);
    if (it == names.end()) throw Error(ErrorKind::InternalContradiction, "certificate lost track of vertex '" + s + "'");
    return it->second;
}

template <class G>
std::string fresh_avoiding(const G& g, const std::set<std::string>& taken) {
    for (std::size_t k = 0;; ++k) {
        std::string c = "x" + std::to_string(k);
        if (!g.find(c) && !taken.contains(c)) return c;
    }
}

// Rewrites m from the naming of a graph Y into the naming of the current graph
// Z, given the map Y-name -> Z-name. Added vertices get fresh Z names, recorded in the map.
template <class G>
MoveDescriptor translate(const MoveDescriptor& m, std::map<std::string, std::string>& names, const G& z) {
    MoveDescriptor r = m;
    for (auto& v : r.vertices) v = rename(names, v);
    for (auto& v : r.neighbors) v = rename(names, v);
    std::set<std::string> taken;
    for (auto& a : r.added) {
        const std::string fresh = fresh_avoiding(z, taken);
        taken.insert(fresh);
        names[a.name] = fresh;
        a.name = fresh;
    }
    return r;
}

template <class Ops>
EquivResult search(const typename Ops::Graph& g1, const typename Ops::Graph& g2, FamilySet families,
                   const SearchBounds& bounds) {
    using G = typename Ops::Graph;
    const std::size_t max_vertices = bounds.max_vertices.value_or(std::max(g1.size(), g2.size()) + 2);
    if (g1.size() > max_vertices || g2.size() > max_vertices)
        throw Error(ErrorKind::TooLarge, "input exceeds the search bound of " + std::to_string(max_vertices) + " vertices");
    const std::size_t key_bound = std::max(kCanonicalBound, max_vertices);

    EquivResult result;
    std::array<Side<G>, 2> sides;
    const std::array<const G*, 2> roots{&g1, &g2};
    for (int s = 0; s < 2; ++s) {
        const auto key = canonical_form(*roots[s], key_bound);
        sides[s].nodes.push_back({*roots[s], 0, {}, 0});
        sides[s].index.emplace(key, 0);
        sides[s].frontier.push_back(0);
    }
    const std::string start_key = sides[0].index.begin()->first;
    const std::string end_key = sides[1].index.begin()->first;

    auto finish = [&](std::size_t a_node, std::size_t b_node) {
        MoveCertificate cert{start_key, end_key, {}};
        G z = g1;
        for (const auto& [parent, move] : sides[0].path_to(a_node)) {
            cert.steps.push_back(move);
            z = Ops::apply(z, move);
        }
        const G& meet = sides[1].nodes[b_node].graph;
        const auto iso = are_isomorphic(meet, z, true);
        if (!iso) throw Error(ErrorKind::InternalContradiction, "equal canonical keys without an isomorphism");
        std::map<std::string, std::string> names;
        for (std::size_t i = 0; i < meet.size(); ++i) names[meet.name(i)] = z.name((*iso)[i]);
        auto b_path = sides[1].path_to(b_node);
        for (auto it = b_path.rbegin(); it != b_path.rend(); ++it) {
            const G& before = sides[1].nodes[it->first].graph;
            const MoveDescriptor back = translate(Ops::invert(before, it->second), names, z);
            // Removed vertices drop out of the map implicitly: they are never referenced again.
            z = Ops::apply(z, back);
            cert.steps.push_back(back);
        }
        result.status = EquivStatus::Certificate;
        result.certificate = std::move(cert);
        result.depth_reached = sides[0].nodes[a_node].depth + sides[1].nodes[b_node].depth;
    };

    if (start_key == end_key) {
        finish(0, 0);
        result.states_explored = 2;
        return result;
    }

    while (true) {
        result.states_explored = sides[0].nodes.size() + sides[1].nodes.size();
        result.depth_reached = sides[0].depth + sides[1].depth;
        if (sides[0].frontier.empty() && sides[1].frontier.empty()) {
            result.reason = "reachable states exhausted within max_vertices";
            return result;
        }
        if (sides[0].depth + sides[1].depth >= bounds.max_depth) {
            result.reason = "max_depth";
            return result;
        }
        int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
        if (sides[s].frontier.empty()) s = 1 - s;
        auto& me = sides[s];
        const auto& other = sides[1 - s];
        std::vector<std::size_t> next;
        for (const std::size_t at : me.frontier) {
            for (const auto& m : Ops::moves(me.nodes[at].graph, families, max_vertices)) {
                G child = Ops::apply(me.nodes[at].graph, m);
                std::string key = canonical_form(child, key_bound);
                if (me.index.contains(key)) continue;
                const std::size_t id = me.nodes.size();
                me.nodes.push_back({std::move(child), at, m, me.depth + 1});
                me.index.emplace(key, id);
                next.push_back(id);
                if (const auto hit = other.index.find(key); hit != other.index.end()) {
                    if (s == 0)
                        finish(id, hit->second);
                    else
                        finish(hit->second, id);
                    result.states_explored = sides[0].nodes.size() + sides[1].nodes.size();
                    return result;
                }
                if (sides[0].nodes.size() + sides[1].nodes.size() >= bounds.max_states) {
                    result.states_explored = sides[0].nodes.size() + sides[1].nodes.size();
                    result.depth_reached = sides[0].depth + sides[1].depth + 1;
                    result.reason = "max_states";
                    return result;
                }
            }
        }
        me.frontier = std::move(next);
        ++me.depth;
    }
}

template <class Ops>
bool valid(const typename Ops::Graph& g1, const typename Ops::Graph& g2, const MoveCertificate& c) {
    typename Ops::Graph z = g1;
    try {
        for (const auto& m : c.steps) z = Ops::apply(z, m);
    } catch (const Error&) {
        return false;
    }
    const std::size_t bound = std::max({kCanonicalBound, z.size(), g2.size()});
    return canonical_form(g1, bound) == c.start_key && canonical_form(z, bound) == c.end_key &&
           are_isomorphic(z, g2, true).has_value();
}

}  // namespace

EquivResult prove_equivalent(const LabeledGraph& g1, const LabeledGraph& g2, FamilySet families,
                             const SearchBounds& bounds) {
    if (auto why = invariant_distinguish(g1, g2, families)) {
        EquivResult r;
        r.status = EquivStatus::Distinguished;
        r.reason = *why;
        return r;
    }
    return search<LabeledOps>(g1, g2, families, bounds);
}

EquivResult prove_equivalent(const LoopedGraph& g1, const LoopedGraph& g2, FamilySet families,
                             const SearchBounds& bounds) {
    return search<LoopedOps>(g1, g2, families, bounds);
}

LabeledGraph replay(const LabeledGraph& g, const std::vector<MoveDescriptor>& steps) {
    LabeledGraph z = g;
    for (const auto& m : steps) z = apply_graph_move(z, m);
    return z;
}

LoopedGraph replay(const LoopedGraph& g, const std::vector<MoveDescriptor>& steps) {
    LoopedGraph z = g;
    for (const auto& m : steps) z = apply_loop_move(z, m);
    return z;
}

bool certificate_valid(const LabeledGraph& g1, const LabeledGraph& g2, const MoveCertificate& c) {
    return valid<LabeledOps>(g1, g2, c);
}

bool certificate_valid(const LoopedGraph& g1, const LoopedGraph& g2, const MoveCertificate& c) {
    return valid<LoopedOps>(g1, g2, c);
}

}  // namespace graphlink
