#include "graphlink/moves.hpp"

#include <algorithm>
#include <array>

#include "graphlink/error.hpp"

namespace graphlink {

namespace {

using Violation = std::optional<std::string>;

template <class V>
std::optional<std::size_t> lookup(const BasicGraph<V>& g, const std::string& name, Violation& why) {
    auto i = g.find(name);
    if (!i && !why) why = "no vertex named '" + name + "'";
    return i;
}

template <class V>
Violation resolve(const BasicGraph<V>& g, const MoveDescriptor& m, std::size_t arity, std::vector<std::size_t>& idx) {
    if (m.vertices.size() != arity)
        return std::string(family_token(m.family)) + " takes " + std::to_string(arity) + " vertex name(s)";
    Violation why;
    idx.clear();
    for (const auto& name : m.vertices) {
        auto i = lookup(g, name, why);
        if (!i) return why;
        idx.push_back(*i);
    }
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] == idx[b]) return "vertex '" + m.vertices[a] + "' named twice";
    return std::nullopt;
}

// Neighbourhood of x restricted to vertices outside `exclude`, as a bit mask over g.
template <class V>
std::vector<bool> outside_neighbourhood(const BasicGraph<V>& g, std::size_t x, std::initializer_list<std::size_t> exclude) {
    std::vector<bool> out(g.size(), false);
    for (std::size_t t = 0; t < g.size(); ++t) {
        if (std::find(exclude.begin(), exclude.end(), t) != exclude.end()) continue;
        out[t] = g.adjacent(x, t);
    }
    return out;
}

template <class V>
Violation check_addition(const BasicGraph<V>& g, const MoveDescriptor& m, std::size_t count) {
    if (!m.vertices.empty()) return std::string("addition descriptors name no existing vertices");
    if (m.added.size() != count)
        return std::string(family_token(m.family)) + " addition creates " + std::to_string(count) + " vertex/vertices";
    for (const auto& a : m.added) {
        if (a.name.empty()) return std::string("added vertex needs a name");
        if (g.find(a.name)) return "vertex '" + a.name + "' already exists";
    }
    if (count == 2 && m.added[0].name == m.added[1].name) return "added vertices share the name '" + m.added[0].name + "'";
    if (count == 1 && (!m.neighbors.empty() || m.pair_adjacent))
        return std::string("a single added vertex is isolated");
    Violation why;
    std::vector<std::size_t> seen;
    for (const auto& name : m.neighbors) {
        auto i = lookup(g, name, why);
        if (!i) return why;
        if (std::find(seen.begin(), seen.end(), *i) != seen.end()) return "attachment '" + name + "' listed twice";
        seen.push_back(*i);
    }
    return std::nullopt;
}

template <class V>
BasicGraph<V> add_pair_or_single(const BasicGraph<V>& g, const MoveDescriptor& m, std::vector<V> payload) {
    BasicGraph<V> out = g;
    std::vector<std::size_t> created;
    for (auto& v : payload) created.push_back(out.add_vertex(std::move(v)));
    if (created.size() == 2 && m.pair_adjacent) out.set_edge(created[0], created[1], true);
    for (const auto& name : m.neighbors) {
        const auto t = out.index_of(name);
        for (const auto c : created) out.set_edge(c, t, true);
    }
    return out;
}

// Shared part of both directions of Og3: u's attachments outside the triple are
// replaced by `u_outside`, and v and w exchange their outside neighbourhoods.
LabeledGraph rewire_og3(const LabeledGraph& g, std::size_t u, std::size_t v, std::size_t w,
                        const std::vector<bool>& u_outside, bool u_adjacent_to_pair) {
    LabeledGraph out = g;
    const auto nv = outside_neighbourhood(g, v, {u, v, w});
    const auto nw = outside_neighbourhood(g, w, {u, v, w});
    for (std::size_t t = 0; t < g.size(); ++t) {
        if (t == u || t == v || t == w) continue;
        out.set_edge(u, t, u_outside[t]);
        out.set_edge(v, t, nw[t]);
        out.set_edge(w, t, nv[t]);
    }
    out.set_edge(u, v, u_adjacent_to_pair);
    out.set_edge(u, w, u_adjacent_to_pair);
    return out;
}

}  // namespace

bool MoveDescriptor::is_addition() const noexcept {
    switch (family) {
        case MoveFamily::Og1:
        case MoveFamily::Og2:
        case MoveFamily::O1:
        case MoveFamily::O2: return direction == Direction::inverse;
        default: return false;
    }
}

std::string_view family_token(MoveFamily f) noexcept {
    switch (f) {
        case MoveFamily::Og1: return "Og1";
        case MoveFamily::Og2: return "Og2";
        case MoveFamily::Og3: return "Og3";
        case MoveFamily::Og4: return "Og4";
        case MoveFamily::Og4p: return "Og4p";
        case MoveFamily::O1: return "O1";
        case MoveFamily::O2: return "O2";
        case MoveFamily::O3: return "O3";
    }
    return "?";
}

std::optional<MoveFamily> family_from_token(std::string_view token) noexcept {
    static constexpr std::array kAll{MoveFamily::Og1, MoveFamily::Og2, MoveFamily::Og3, MoveFamily::Og4,
                                     MoveFamily::Og4p, MoveFamily::O1, MoveFamily::O2, MoveFamily::O3};
    for (auto f : kAll)
        if (family_token(f) == token) return f;
    if (token == "Og4'") return MoveFamily::Og4p;
    return std::nullopt;
}

bool is_graph_family(MoveFamily f) noexcept {
    return f == MoveFamily::Og1 || f == MoveFamily::Og2 || f == MoveFamily::Og3 || f == MoveFamily::Og4 ||
           f == MoveFamily::Og4p;
}

MoveDescriptor og1_remove(std::string v) { return {MoveFamily::Og1, Direction::forward, {std::move(v)}, {}, false, {}}; }

MoveDescriptor og1_add(std::string v, int sign) {
    return {MoveFamily::Og1, Direction::inverse, {}, {AddedVertex{std::move(v), 0, sign, false}}, false, {}};
}

MoveDescriptor og2_remove(std::string a, std::string b) {
    return {MoveFamily::Og2, Direction::forward, {std::move(a), std::move(b)}, {}, false, {}};
}

MoveDescriptor og2_add(std::string a, std::string b, bool adjacent, int sign_a, std::vector<std::string> neighbors) {
    const int framing = adjacent ? 1 : 0;
    return {MoveFamily::Og2,
            Direction::inverse,
            {},
            {AddedVertex{std::move(a), framing, sign_a, false}, AddedVertex{std::move(b), framing, -sign_a, false}},
            adjacent,
            std::move(neighbors)};
}

MoveDescriptor og3(std::string u, std::string v, std::string w, Direction d) {
    return {MoveFamily::Og3, d, {std::move(u), std::move(v), std::move(w)}, {}, false, {}};
}

MoveDescriptor og4(std::string u, std::string v) {
    return {MoveFamily::Og4, Direction::forward, {std::move(u), std::move(v)}, {}, false, {}};
}

MoveDescriptor og4p(std::string v) { return {MoveFamily::Og4p, Direction::forward, {std::move(v)}, {}, false, {}}; }

MoveDescriptor o1_remove(std::string v) { return {MoveFamily::O1, Direction::forward, {std::move(v)}, {}, false, {}}; }

MoveDescriptor o1_add(std::string v, bool looped) {
    return {MoveFamily::O1, Direction::inverse, {}, {AddedVertex{std::move(v), 0, 1, looped}}, false, {}};
}

MoveDescriptor o2_remove(std::string a, std::string b) {
    return {MoveFamily::O2, Direction::forward, {std::move(a), std::move(b)}, {}, false, {}};
}

MoveDescriptor o2_add(std::string looped_vertex, std::string unlooped_vertex, bool adjacent,
                      std::vector<std::string> neighbors) {
    return {MoveFamily::O2,
            Direction::inverse,
            {},
            {AddedVertex{std::move(looped_vertex), 0, 1, true}, AddedVertex{std::move(unlooped_vertex), 0, 1, false}},
            adjacent,
            std::move(neighbors)};
}

MoveDescriptor o3(std::string u, std::string v, std::string w) {
    return {MoveFamily::O3, Direction::forward, {std::move(u), std::move(v), std::move(w)}, {}, false, {}};
}

std::optional<std::string> graph_move_violation(const LabeledGraph& g, const MoveDescriptor& m) {
    if (!is_graph_family(m.family)) return "'" + std::string(family_token(m.family)) + "' is not a graph-move";
    std::vector<std::size_t> idx;
    const auto label = [&](std::size_t i) { return g.vertex(i); };
    switch (m.family) {
        case MoveFamily::Og1: {
            if (m.direction == Direction::inverse) {
                if (auto why = check_addition(g, m, 1)) return why;
                if (m.added[0].framing != 0) return std::string("Og1 adds a vertex of framing 0");
                if (m.added[0].sign != 1 && m.added[0].sign != -1) return std::string("sign must be + or -");
                return std::nullopt;
            }
            if (auto why = resolve(g, m, 1, idx)) return why;
            if (g.degree(idx[0]) != 0) return "'" + m.vertices[0] + "' is not isolated";
            if (label(idx[0]).framing != 0) return "'" + m.vertices[0] + "' has framing 1";
            return std::nullopt;
        }
        case MoveFamily::Og2: {
            if (m.direction == Direction::inverse) {
                if (auto why = check_addition(g, m, 2)) return why;
                const auto& a = m.added[0];
                const auto& b = m.added[1];
                const int framing = m.pair_adjacent ? 1 : 0;
                if (a.framing != framing || b.framing != framing)
                    return std::string(m.pair_adjacent ? "an adjacent Og2 pair has framing 1"
                                                       : "a non-adjacent Og2 pair has framing 0");
                if ((a.sign != 1 && a.sign != -1) || b.sign != -a.sign)
                    return std::string("an Og2 pair carries opposite signs");
                return std::nullopt;
            }
            if (auto why = resolve(g, m, 2, idx)) return why;
            const auto a = idx[0], b = idx[1];
            if (outside_neighbourhood(g, a, {a, b}) != outside_neighbourhood(g, b, {a, b}))
                return "'" + m.vertices[0] + "' and '" + m.vertices[1] + "' have different outside neighbourhoods";
            const int framing = g.adjacent(a, b) ? 1 : 0;
            if (label(a).framing != framing || label(b).framing != framing)
                return std::string(framing ? "adjacent pair needs labels (1,a),(1,-a)"
                                           : "non-adjacent pair needs labels (0,a),(0,-a)");
            if (label(a).sign != -label(b).sign) return std::string("pair signs are not opposite");
            return std::nullopt;
        }
        case MoveFamily::Og3: {
            if (auto why = resolve(g, m, 3, idx)) return why;
            const auto u = idx[0], v = idx[1], w = idx[2];
            for (auto x : idx)
                if (label(x).framing != 0) return "'" + g.name(x) + "' has framing 1";
            if (g.adjacent(v, w)) return "'" + m.vertices[1] + "' and '" + m.vertices[2] + "' are adjacent";
            const auto nv = outside_neighbourhood(g, v, {u, v, w});
            const auto nw = outside_neighbourhood(g, w, {u, v, w});
            const auto nu = outside_neighbourhood(g, u, {u, v, w});
            if (label(u).sign != -1) return "'" + m.vertices[0] + "' must have sign -";
            if (m.direction == Direction::forward) {
                if (label(v).sign != -1 || label(w).sign != -1) return std::string("v and w must have sign -");
                if (!g.adjacent(u, v) || !g.adjacent(u, w) || g.degree(u) != 2)
                    return "'" + m.vertices[0] + "' must be adjacent exactly to the other two";
                return std::nullopt;
            }
            if (label(v).sign != 1 || label(w).sign != 1) return std::string("v and w must have sign +");
            if (g.adjacent(u, v) || g.adjacent(u, w)) return "'" + m.vertices[0] + "' must not touch the other two";
            for (std::size_t t = 0; t < g.size(); ++t)
                if (nu[t] != (nv[t] != nw[t]))
                    return "N(" + m.vertices[0] + ") differs from N(" + m.vertices[1] + ") xor N(" + m.vertices[2] +
                           ") at '" + g.name(t) + "'";
            return std::nullopt;
        }
        case MoveFamily::Og4: {
            if (auto why = resolve(g, m, 2, idx)) return why;
            if (!g.adjacent(idx[0], idx[1])) return "'" + m.vertices[0] + "' and '" + m.vertices[1] + "' are not adjacent";
            if (label(idx[0]).framing != 0 || label(idx[1]).framing != 0) return std::string("Og4 needs framings 0");
            return std::nullopt;
        }
        case MoveFamily::Og4p: {
            if (auto why = resolve(g, m, 1, idx)) return why;
            if (label(idx[0]).framing != 1) return "'" + m.vertices[0] + "' has framing 0";
            return std::nullopt;
        }
        default: break;
    }
    return std::string("unsupported move");
}

std::optional<std::string> loop_move_violation(const LoopedGraph& g, const MoveDescriptor& m) {
    if (is_graph_family(m.family)) return "'" + std::string(family_token(m.family)) + "' is not a looped-graph move";
    std::vector<std::size_t> idx;
    switch (m.family) {
        case MoveFamily::O1: {
            if (m.direction == Direction::inverse) return check_addition(g, m, 1);
            if (auto why = resolve(g, m, 1, idx)) return why;
            if (g.degree(idx[0]) != 0) return "'" + m.vertices[0] + "' is not isolated";
            return std::nullopt;
        }
        case MoveFamily::O2: {
            if (m.direction == Direction::inverse) {
                if (auto why = check_addition(g, m, 2)) return why;
                if (m.added[0].looped == m.added[1].looped)
                    return std::string("exactly one vertex of an O2 pair is looped");
                return std::nullopt;
            }
            if (auto why = resolve(g, m, 2, idx)) return why;
            const auto a = idx[0], b = idx[1];
            if (g.vertex(a).looped == g.vertex(b).looped) return std::string("exactly one vertex of the pair must be looped");
            if (outside_neighbourhood(g, a, {a, b}) != outside_neighbourhood(g, b, {a, b}))
                return "'" + m.vertices[0] + "' and '" + m.vertices[1] + "' have different outside neighbourhoods";
            return std::nullopt;
        }
        case MoveFamily::O3: {
            if (auto why = resolve(g, m, 3, idx)) return why;
            const auto u = idx[0], v = idx[1], w = idx[2];
            if (!g.vertex(v).looped) return "'" + m.vertices[1] + "' must be looped";
            if (g.vertex(w).looped) return "'" + m.vertices[2] + "' must be unlooped";
            const bool uv = g.adjacent(u, v), uw = g.adjacent(u, w), vw = g.adjacent(v, w);
            const bool removing_side = vw && !uv && !uw;
            const bool adding_side = !vw && uv && uw;
            if (!removing_side && !adding_side) return std::string("triple edges match neither O3 configuration");
            for (std::size_t x = 0; x < g.size(); ++x) {
                if (x == u || x == v || x == w) continue;
                const int hits = int(g.adjacent(x, u)) + int(g.adjacent(x, v)) + int(g.adjacent(x, w));
                if (hits != 0 && hits != 2) return "'" + g.name(x) + "' touches " + std::to_string(hits) + " of the triple";
            }
            return std::nullopt;
        }
        default: break;
    }
    return std::string("unsupported move");
}

std::vector<MoveDescriptor> list_graph_moves(const LabeledGraph& g, FamilySet families) {
    std::vector<MoveDescriptor> out;
    const std::size_t n = g.size();
    auto keep = [&](MoveDescriptor m) {
        if (!graph_move_violation(g, m)) out.push_back(std::move(m));
    };
    if (families.contains(MoveFamily::Og1))
        for (std::size_t v = 0; v < n; ++v) keep(og1_remove(g.name(v)));
    if (families.contains(MoveFamily::Og2))
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) keep(og2_remove(g.name(a), g.name(b)));
    if (families.contains(MoveFamily::Og3)) {
        for (const auto d : {Direction::forward, Direction::inverse})
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    for (std::size_t w = v + 1; w < n; ++w)
                        if (u != v && u != w) keep(og3(g.name(u), g.name(v), g.name(w), d));
    }
    if (families.contains(MoveFamily::Og4))
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) keep(og4(g.name(u), g.name(v)));
    if (families.contains(MoveFamily::Og4p))
        for (std::size_t v = 0; v < n; ++v) keep(og4p(g.name(v)));
    return out;
}

std::vector<MoveDescriptor> list_loop_moves(const LoopedGraph& l, FamilySet families) {
    std::vector<MoveDescriptor> out;
    const std::size_t n = l.size();
    auto keep = [&](MoveDescriptor m) {
        if (!loop_move_violation(l, m)) out.push_back(std::move(m));
    };
    if (families.contains(MoveFamily::O1))
        for (std::size_t v = 0; v < n; ++v) keep(o1_remove(l.name(v)));
    if (families.contains(MoveFamily::O2))
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) keep(o2_remove(l.name(a), l.name(b)));
    if (families.contains(MoveFamily::O3))
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w)
                    if (u != v && u != w && v != w) keep(o3(l.name(u), l.name(v), l.name(w)));
    return out;
}

LabeledGraph apply_graph_move(const LabeledGraph& g, const MoveDescriptor& m) {
    if (auto why = graph_move_violation(g, m)) throw Error(ErrorKind::MoveNotApplicable, *why);
    switch (m.family) {
        case MoveFamily::Og1:
        case MoveFamily::Og2: {
            if (m.direction == Direction::inverse) {
                std::vector<LabeledVertex> payload;
                for (const auto& a : m.added) payload.push_back({a.name, a.framing, a.sign});
                return add_pair_or_single(g, m, std::move(payload));
            }
            std::vector<std::size_t> idx;
            for (const auto& name : m.vertices) idx.push_back(g.index_of(name));
            return g.without(idx);
        }
        case MoveFamily::Og3: {
            const auto u = g.index_of(m.vertices[0]);
            const auto v = g.index_of(m.vertices[1]);
            const auto w = g.index_of(m.vertices[2]);
            LabeledGraph out;
            if (m.direction == Direction::forward) {
                const auto nv = outside_neighbourhood(g, v, {u, v, w});
                const auto nw = outside_neighbourhood(g, w, {u, v, w});
                std::vector<bool> toggled(g.size(), false);
                for (std::size_t t = 0; t < g.size(); ++t) toggled[t] = nv[t] != nw[t];
                out = rewire_og3(g, u, v, w, toggled, false);
            } else {
                out = rewire_og3(g, u, v, w, std::vector<bool>(g.size(), false), true);
            }
            const int sign = m.direction == Direction::forward ? 1 : -1;
            for (const auto x : {v, w}) {
                auto lv = out.vertex(x);
                lv.sign = sign;
                out.set_vertex(x, lv);
            }
            return out;
        }
        case MoveFamily::Og4: {
            const auto u = g.index_of(m.vertices[0]);
            const auto v = g.index_of(m.vertices[1]);
            LabeledGraph out = pivot(g, u, v);
            auto lu = out.vertex(u);
            auto lv = out.vertex(v);
            lu.sign = -g.vertex(v).sign;
            lv.sign = -g.vertex(u).sign;
            out.set_vertex(u, lu);
            out.set_vertex(v, lv);
            return out;
        }
        case MoveFamily::Og4p: {
            const auto v = g.index_of(m.vertices[0]);
            LabeledGraph out = local_complement(g, v);
            auto lv = out.vertex(v);
            lv.sign = -lv.sign;
            out.set_vertex(v, lv);
            for (const auto x : g.neighbors(v)) {
                auto lx = out.vertex(x);
                lx.framing ^= 1;
                out.set_vertex(x, lx);
            }
            return out;
        }
        default: break;
    }
    throw Error(ErrorKind::MoveNotApplicable, "unsupported move");
}

LoopedGraph apply_loop_move(const LoopedGraph& l, const MoveDescriptor& m) {
    if (auto why = loop_move_violation(l, m)) throw Error(ErrorKind::MoveNotApplicable, *why);
    switch (m.family) {
        case MoveFamily::O1:
        case MoveFamily::O2: {
            if (m.direction == Direction::inverse) {
                std::vector<LoopedVertex> payload;
                for (const auto& a : m.added) payload.push_back({a.name, a.looped});
                return add_pair_or_single(l, m, std::move(payload));
            }
            std::vector<std::size_t> idx;
            for (const auto& name : m.vertices) idx.push_back(l.index_of(name));
            return l.without(idx);
        }
        case MoveFamily::O3: {
            LoopedGraph out = l;
            const auto u = l.index_of(m.vertices[0]);
            const auto v = l.index_of(m.vertices[1]);
            const auto w = l.index_of(m.vertices[2]);
            out.toggle_edge(u, v);
            out.toggle_edge(u, w);
            out.toggle_edge(v, w);
            return out;
        }
        default: break;
    }
    throw Error(ErrorKind::MoveNotApplicable, "unsupported move");
}

MoveDescriptor inverse_graph_move(const LabeledGraph& before, const MoveDescriptor& m) {
    if (auto why = graph_move_violation(before, m)) throw Error(ErrorKind::MoveNotApplicable, *why);
    if (m.is_addition()) {
        MoveDescriptor r{m.family, Direction::forward, {}, {}, false, {}};
        for (const auto& a : m.added) r.vertices.push_back(a.name);
        return r;
    }
    switch (m.family) {
        case MoveFamily::Og1: {
            const auto& v = before.vertex(before.index_of(m.vertices[0]));
            return og1_add(v.name, v.sign);
        }
        case MoveFamily::Og2: {
            const auto a = before.index_of(m.vertices[0]);
            const auto b = before.index_of(m.vertices[1]);
            std::vector<std::string> nbrs;
            for (const auto t : before.neighbors(a))
                if (t != b) nbrs.push_back(before.name(t));
            MoveDescriptor r = og2_add(before.name(a), before.name(b), before.adjacent(a, b), before.vertex(a).sign,
                                       std::move(nbrs));
            return r;
        }
        case MoveFamily::Og3: {
            MoveDescriptor r = m;
            r.direction = m.direction == Direction::forward ? Direction::inverse : Direction::forward;
            return r;
        }
        default: return m;
    }
}

MoveDescriptor inverse_loop_move(const LoopedGraph& before, const MoveDescriptor& m) {
    if (auto why = loop_move_violation(before, m)) throw Error(ErrorKind::MoveNotApplicable, *why);
    if (m.is_addition()) {
        MoveDescriptor r{m.family, Direction::forward, {}, {}, false, {}};
        for (const auto& a : m.added) r.vertices.push_back(a.name);
        return r;
    }
    switch (m.family) {
        case MoveFamily::O1: {
            const auto& v = before.vertex(before.index_of(m.vertices[0]));
            return o1_add(v.name, v.looped);
        }
        case MoveFamily::O2: {
            const auto a = before.index_of(m.vertices[0]);
            const auto b = before.index_of(m.vertices[1]);
            std::vector<std::string> nbrs;
            for (const auto t : before.neighbors(a))
                if (t != b) nbrs.push_back(before.name(t));
            const auto looped = before.vertex(a).looped ? a : b;
            const auto unlooped = looped == a ? b : a;
            return o2_add(before.name(looped), before.name(unlooped), before.adjacent(a, b), std::move(nbrs));
        }
        default: return m;
    }
}

namespace {

constexpr std::size_t kMaxSubsetBase = 20;

template <class V>
std::pair<std::string, std::string> two_fresh_names(const BasicGraph<V>& g) {
    BasicGraph<V> probe = g;
    std::string first = fresh_name(probe);
    V tmp{};
    tmp.name = first;
    probe.add_vertex(tmp);
    return {first, fresh_name(probe)};
}

template <class V>
std::vector<std::vector<std::string>> attachment_sets(const BasicGraph<V>& g) {
    const std::size_t n = g.size();
    if (n > kMaxSubsetBase)
        throw Error(ErrorKind::TooLarge, "pair additions enumerate 2^n attachment sets; n = " + std::to_string(n));
    std::vector<std::vector<std::string>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) s.push_back(g.name(i));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<MoveDescriptor> list_graph_additions(const LabeledGraph& g, FamilySet families, std::size_t max_vertices) {
    std::vector<MoveDescriptor> out;
    if (families.contains(MoveFamily::Og1) && g.size() + 1 <= max_vertices) {
        const auto name = fresh_name(g);
        out.push_back(og1_add(name, 1));
        out.push_back(og1_add(name, -1));
    }
    if (families.contains(MoveFamily::Og2) && g.size() + 2 <= max_vertices) {
        const auto [a, b] = two_fresh_names(g);
        for (const auto& s : attachment_sets(g))
            for (const bool adjacent : {false, true}) out.push_back(og2_add(a, b, adjacent, 1, s));
    }
    return out;
}

std::vector<MoveDescriptor> list_loop_additions(const LoopedGraph& l, FamilySet families, std::size_t max_vertices) {
    std::vector<MoveDescriptor> out;
    if (families.contains(MoveFamily::O1) && l.size() + 1 <= max_vertices) {
        const auto name = fresh_name(l);
        out.push_back(o1_add(name, true));
        out.push_back(o1_add(name, false));
    }
    if (families.contains(MoveFamily::O2) && l.size() + 2 <= max_vertices) {
        const auto [a, b] = two_fresh_names(l);
        for (const auto& s : attachment_sets(l))
            for (const bool adjacent : {false, true}) out.push_back(o2_add(a, b, adjacent, s));
    }
    return out;
}

}  // namespace graphlink
