#include "graphlink/selftest.hpp"

#include <functional>

#include "graphlink/chord.hpp"
#include "graphlink/correspondence.hpp"
#include "graphlink/equiv_search.hpp"
#include "graphlink/error.hpp"
#include "graphlink/generators.hpp"
#include "graphlink/invariants.hpp"
#include "graphlink/io.hpp"
#include "graphlink/moves.hpp"

namespace graphlink {

namespace {

// Runs `body` on case indices 0..count-1; the body returns a failure description or "".
SelftestCheck check(std::string name, std::size_t count, const std::function<std::string(std::size_t)>& body) {
    SelftestCheck c{std::move(name), true, 0, {}};
    for (std::size_t k = 0; k < count; ++k) {
        ++c.cases;
        std::string why;
        try {
            why = body(k);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (!why.empty()) {
            c.passed = false;
            c.detail = "case " + std::to_string(k) + ": " + why;
            break;
        }
    }
    return c;
}

std::size_t scaled(double scale, std::size_t base) {
    const auto n = static_cast<std::size_t>(static_cast<double>(base) * scale);
    return n == 0 ? 1 : n;
}

MoveDescriptor random_descriptor(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 11);
    std::bernoulli_distribution coin(0.5);
    switch (pick(rng)) {
        case 0: return og1_remove("a");
        case 1: return og1_add("x0", coin(rng) ? 1 : -1);
        case 2: return og2_remove("a", "b");
        case 3: return og2_add("x0", "x1", coin(rng), coin(rng) ? 1 : -1, coin(rng) ? std::vector<std::string>{"a", "c"}
                                                                                     : std::vector<std::string>{});
        case 4: return og3("u", "v", "w", coin(rng) ? Direction::forward : Direction::inverse);
        case 5: return og4("u", "v");
        case 6: return og4p("v");
        case 7: return o1_remove("x");
        case 8: return o1_add("x9", coin(rng));
        case 9: return o2_remove("p", "q");
        case 10: return o2_add("p", "q", coin(rng), {"r"});
        default: return o3("u", "v", "w");
    }
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed, double scale) {
    std::vector<SelftestCheck> out;
    Rng rng(seed);

    out.push_back(check("writhe-via-minor", scaled(scale, 300), [&](std::size_t k) -> std::string {
        const auto g = random_graph_knot(rng, 1 + k % 10);
        const auto w = writhe(g);
        for (std::size_t i = 0; i < g.size(); ++i)
            if (writhe_via_minor(g, i) != w.per_vertex[i]) return "vertex " + g.name(i);
        return {};
    }));

    out.push_back(check("inverse-diagonal-writhe", scaled(scale, 300), [&](std::size_t k) -> std::string {
        const auto g = random_graph_knot(rng, 1 + k % 10);
        const auto w = writhe(g);
        const auto inv = inverse(b_matrix(g));
        for (std::size_t i = 0; i < g.size(); ++i)
            if (int(inv.get(i, i)) != (1 - w.per_vertex[i] * g.vertex(i).sign) / 2) return "vertex " + g.name(i);
        return {};
    }));

    out.push_back(check("diagonal-completion", scaled(scale, 300), [&](std::size_t k) -> std::string {
        const auto a = random_symmetric(rng, 1 + k % 12);
        const auto c = complete_diagonal(a);
        if (determinant(c.matrix) != 1) return "singular completion";
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (i != j && a.get(i, j) != c.matrix.get(i, j)) return "off-diagonal entry changed";
        return {};
    }));

    out.push_back(check("move-corank-invariance", scaled(scale, 300), [&](std::size_t k) -> std::string {
        const auto g = random_labeled_graph(rng, 2 + k % 7);
        const auto before = corank(b_matrix(g));
        for (const auto& m : list_graph_moves(g))
            if (corank(b_matrix(apply_graph_move(g, m))) != before) return format_move(m);
        return {};
    }));

    out.push_back(check("chi-psi-roundtrip", scaled(scale, 300), [&](std::size_t k) -> std::string {
        const auto g = random_graph_knot(rng, 1 + k % 10);
        const auto r = roundtrip_check(g);
        if (!r.psi_chi_exact) return "psi(chi(g)) != g";
        if (!r.chi_psi_exact) return "chi(psi(l)) != l";
        const auto l = random_looped_graph(rng, 1 + k % 10);
        if (chi(psi(l)) != l) return "chi(psi(l)) != l on a random looped graph";
        return {};
    }));

    out.push_back(check("pivot-triple-local-complement", scaled(scale, 300), [&](std::size_t k) -> std::string {
        const auto g = random_labeled_graph(rng, 2 + k % 9);
        for (const auto& [u, v] : g.edges()) {
            const auto p = pivot(g, u, v);
            const auto t = local_complement(local_complement(local_complement(g, u), v), u);
            auto tau = [&](std::size_t i) { return i == u ? v : i == v ? u : i; };
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j)
                    if (i != j && p.adjacent(i, j) != t.adjacent(tau(i), tau(j))) return "pair " + g.name(u) + "," + g.name(v);
        }
        return {};
    }));

    out.push_back(check("realize-roundtrip", scaled(scale, 100), [&](std::size_t k) -> std::string {
        const auto g = interlacement(random_chord_diagram(rng, 1 + k % 7));
        const auto d = realize(g);
        if (!d) return "interlacement graph reported non-realizable";
        if (!equal_by_name(interlacement(*d), g)) return "realized diagram has a different interlacement graph";
        return {};
    }));

    out.push_back(check("document-roundtrip", scaled(scale, 200), [&](std::size_t k) -> std::string {
        std::string text;
        switch (k % 3) {
            case 0: text = serialize(random_labeled_graph(rng, k % 9)); break;
            case 1: text = serialize(random_looped_graph(rng, k % 9)); break;
            default: text = serialize(random_chord_diagram(rng, 1 + k % 8)); break;
        }
        const auto again = serialize(parse_document(text));
        if (again != text) return "serialize(parse(text)) != text";
        return {};
    }));

    out.push_back(check("move-line-roundtrip", scaled(scale, 200), [&](std::size_t) -> std::string {
        const auto m = random_descriptor(rng);
        const auto line = format_move(m);
        if (parse_move(line) != m) return line;
        return {};
    }));

    out.push_back(check("equiv-certificates", scaled(scale, 30), [&](std::size_t k) -> std::string {
        auto g = random_looped_graph(rng, 1 + k % 4, 0.4);
        auto h = g;
        const std::size_t cap = g.size() + 2;
        for (int s = 0; s < 3; ++s) {
            auto ms = list_loop_moves(h);
            const auto adds = list_loop_additions(h, FamilySet::loop_moves(), cap);
            ms.insert(ms.end(), adds.begin(), adds.end());
            if (ms.empty()) break;
            h = apply_loop_move(h, ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)]);
        }
        const auto r = prove_equivalent(g, h, FamilySet::loop_moves(), {6, 20000, cap});
        if (r.status == EquivStatus::Distinguished) return "related graphs reported distinguished";
        if (r.certificate && !certificate_valid(g, h, *r.certificate)) return "certificate does not replay";
        return {};
    }));

    return out;
}

}  // namespace graphlink
