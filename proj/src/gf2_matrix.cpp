#include "graphlink/gf2_matrix.hpp"

#include <algorithm>
#include <utility>

#include "graphlink/error.hpp"

namespace graphlink {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// Row-reduces `work` in place (rows of `stride` words, `cols` significant bits)
// and returns the rank. Only the first `cols` columns are used for pivots.
std::size_t eliminate(std::vector<std::uint64_t>& work, std::size_t rows, std::size_t stride, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows && !(work[pivot * stride + word] & bit)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap_ranges(work.begin() + static_cast<std::ptrdiff_t>(pivot * stride),
                             work.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * stride),
                             work.begin() + static_cast<std::ptrdiff_t>(rank * stride));
        }
        const std::uint64_t* src = work.data() + rank * stride;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::uint64_t* dst = work.data() + r * stride;
            if (!(dst[word] & bit)) continue;
            for (std::size_t w = word; w < stride; ++w) dst[w] ^= src[w];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t n) : n_(n), stride_(words_for(n)), data_(n * words_for(n), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    Gf2Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(i) + " has length " +
                                                       std::to_string(rows[i].size()) + ", expected " +
                                                       std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, (rows[i][j] & 1) != 0);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> table;
    table.reserve(rows.size());
    for (const auto& r : rows) table.emplace_back(r);
    return from_rows(table);
}

bool Gf2Matrix::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

std::vector<int> Gf2Matrix::diagonal() const {
    std::vector<int> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = get(i, i) ? 1 : 0;
    return d;
}

std::string Gf2Matrix::to_string() const {
    std::string out;
    out.reserve(n_ * (n_ + 1));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::IndexOutOfRange, "matrix sum of different dimensions");
    Gf2Matrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, a.get(i, j) != b.get(i, j));
    return out;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::IndexOutOfRange, "matrix product of different dimensions");
    const std::size_t n = a.size();
    Gf2Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!a.get(i, k)) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b.get(k, j)) out.flip(i, j);
        }
    }
    return out;
}

std::size_t rank(const Gf2Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 0;
    std::vector<std::uint64_t> work;
    work.reserve(n * m.words_per_row());
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = m.row(i);
        work.insert(work.end(), r.begin(), r.end());
    }
    return eliminate(work, n, m.words_per_row(), n);
}

std::size_t corank(const Gf2Matrix& m) { return m.size() - rank(m); }

int determinant(const Gf2Matrix& m) { return corank(m) == 0 ? 1 : 0; }

Gf2Matrix inverse(const Gf2Matrix& m) {
    const std::size_t n = m.size();
    const std::size_t stride = words_for(2 * n);
    std::vector<std::uint64_t> work(n * stride, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (m.get(i, j)) work[i * stride + j / 64] |= std::uint64_t{1} << (j % 64);
        const std::size_t e = n + i;
        work[i * stride + e / 64] |= std::uint64_t{1} << (e % 64);
    }
    if (eliminate(work, n, stride, n) != n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible over Z/2");
    Gf2Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t c = n + j;
            if ((work[i * stride + c / 64] >> (c % 64)) & 1U) out.set(i, j, true);
        }
    return out;
}

Gf2Matrix delete_rows_cols(const Gf2Matrix& m, std::span<const std::size_t> indices) {
    std::vector<bool> drop(m.size(), false);
    for (const std::size_t i : indices) {
        if (i >= m.size()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "index " + std::to_string(i) + " outside a " + std::to_string(m.size()) + "-dimensional matrix");
        }
        drop[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!drop[i]) keep.push_back(i);
    Gf2Matrix out(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) out.set(a, b, m.get(keep[a], keep[b]));
    return out;
}

Gf2Matrix delete_rows_cols(const Gf2Matrix& m, std::initializer_list<std::size_t> indices) {
    return delete_rows_cols(m, std::span<const std::size_t>(indices.begin(), indices.size()));
}

Gf2Matrix flip_diagonal_entry(const Gf2Matrix& m, std::size_t i) {
    if (i >= m.size()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "diagonal index " + std::to_string(i) + " outside a " + std::to_string(m.size()) + "-dimensional matrix");
    }
    Gf2Matrix out = m;
    out.flip(i, i);
    return out;
}

}  // namespace graphlink
