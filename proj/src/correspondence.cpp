#include "graphlink/correspondence.hpp"

#include <bit>

#include "graphlink/error.hpp"
#include "graphlink/invariants.hpp"

namespace graphlink {

namespace {

// Incremental row-echelon basis supporting push/pop for the completion search.
class RowBasis {
public:
    explicit RowBasis(std::size_t words) : words_(words) {}

    bool push(std::vector<std::uint64_t> row) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if ((row[p / 64] >> (p % 64)) & 1U)
                for (std::size_t w = 0; w < words_; ++w) row[w] ^= rows_[k][w];
        }
        for (std::size_t w = 0; w < words_; ++w) {
            if (row[w] == 0) continue;
            pivots_.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(row[w])));
            rows_.push_back(std::move(row));
            return true;
        }
        return false;
    }

    void pop() {
        rows_.pop_back();
        pivots_.pop_back();
    }

private:
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

bool search(const Gf2Matrix& a, std::size_t k, RowBasis& basis, std::vector<int>& diag) {
    if (k == a.size()) return true;
    for (const int d : {0, 1}) {
        const auto r = a.row(k);
        std::vector<std::uint64_t> row(r.begin(), r.end());
        const std::uint64_t bit = std::uint64_t{1} << (k % 64);
        row[k / 64] = d ? (row[k / 64] | bit) : (row[k / 64] & ~bit);
        if (!basis.push(std::move(row))) continue;
        diag[k] = d;
        if (search(a, k + 1, basis, diag)) return true;
        basis.pop();
    }
    return false;
}

Gf2Matrix with_diagonal(const Gf2Matrix& a, const std::vector<int>& diag) {
    Gf2Matrix m = a;
    for (std::size_t i = 0; i < a.size(); ++i) m.set(i, i, diag[i] != 0);
    return m;
}

Gf2Matrix inverse_or_not_a_knot(const LabeledGraph& g) {
    const Gf2Matrix b = b_matrix(g);
    if (determinant(b) != 1)
        throw Error(ErrorKind::NotAKnot, "det(A(G)+E) = 0; the graph-link has " + std::to_string(corank(b) + 1) +
                                             " components");
    return inverse(b);
}

}  // namespace

std::string DiagonalCompletion::bits() const { return format_bits(diagonal); }

std::vector<int> parse_bits(std::string_view bits) {
    std::vector<int> out;
    out.reserve(bits.size());
    for (const char c : bits) {
        if (c != '0' && c != '1') throw Error(ErrorKind::BadLabel, "bit string may only contain 0 and 1");
        out.push_back(c - '0');
    }
    return out;
}

std::string format_bits(const std::vector<int>& bits) {
    std::string out;
    for (const int b : bits) out.push_back(b ? '1' : '0');
    return out;
}

DiagonalCompletion complete_diagonal(const Gf2Matrix& a, const std::optional<std::vector<int>>& preferred) {
    if (!a.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "diagonal completion needs a symmetric matrix");
    const std::size_t n = a.size();
    if (preferred && preferred->size() == n) {
        Gf2Matrix m = with_diagonal(a, *preferred);
        if (determinant(m) == 1) return {*preferred, std::move(m)};
    }
    std::vector<int> diag(n, 0);
    RowBasis basis(a.words_per_row());
    if (!search(a, 0, basis, diag))
        throw Error(ErrorKind::InternalContradiction, "no diagonal completion found for a symmetric matrix");
    Gf2Matrix m = with_diagonal(a, diag);
    return {std::move(diag), std::move(m)};
}

LoopedGraph chi(const LabeledGraph& g) {
    const Gf2Matrix inv = inverse_or_not_a_knot(g);
    const auto w = writhe(g);
    LoopedGraph out;
    for (std::size_t i = 0; i < g.size(); ++i) out.add_vertex({g.name(i), w.per_vertex[i] == -1});
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (inv.get(i, j)) out.set_edge(i, j, true);
    return out;
}

LabeledGraph psi(const LoopedGraph& l, const std::optional<std::vector<int>>& preferred_diagonal) {
    const auto completion = complete_diagonal(adjacency_matrix(l), preferred_diagonal);
    const Gf2Matrix m = inverse(completion.matrix) + Gf2Matrix::identity(l.size());
    LabeledGraph out;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const int w = l.vertex(i).looped ? -1 : 1;
        const int sign = w * (1 - 2 * completion.diagonal[i]);
        out.add_vertex({l.name(i), m.get(i, i) ? 1 : 0, sign});
    }
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (m.get(i, j)) out.set_edge(i, j, true);
    return out;
}

std::vector<int> seed_diagonal(const LabeledGraph& g) { return inverse_or_not_a_knot(g).diagonal(); }

RoundTripReport roundtrip_check(const LabeledGraph& g) {
    RoundTripReport r;
    r.looped = chi(g);
    r.seed = seed_diagonal(g);
    r.recovered = psi(r.looped, r.seed);
    r.psi_chi_exact = r.recovered == g;
    r.canonical = complete_diagonal(adjacency_matrix(r.looped));
    r.canonical_knot = psi(r.looped, r.canonical.diagonal);
    r.looped_again = chi(r.canonical_knot);
    r.chi_psi_exact = r.looped_again == r.looped;
    return r;
}

}  // namespace graphlink
