#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "graphlink/gf2_matrix.hpp"
#include "graphlink/graph.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Table table(const graphlink::Gf2Matrix& m) {
    oracle::Table t(m.size(), std::vector<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m.get(i, j) ? 1 : 0;
    return t;
}

inline graphlink::Gf2Matrix matrix(const oracle::Table& t) { return graphlink::Gf2Matrix::from_rows(t); }

// Isomorphism by trying every permutation; payloads compared through label_code.
template <class V>
bool brute_isomorphic(const graphlink::BasicGraph<V>& a, const graphlink::BasicGraph<V>& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            if (graphlink::label_code(a.vertex(i)) != graphlink::label_code(b.vertex(p[i]))) ok = false;
            for (std::size_t j = i + 1; j < a.size() && ok; ++j)
                if (a.adjacent(i, j) != b.adjacent(p[i], p[j])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Number of upper-triangle edge slots of an n-vertex graph.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace support
