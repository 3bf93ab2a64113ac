#pragma once

// Test-only oracles, deliberately independent of the library's elimination
// and boundary-column code paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hypercut/combinat.hpp"
#include "hypercut/exact_matrix.hpp"
#include "hypercut/simplex.hpp"

namespace oracle {

// Plain boolean Gaussian elimination on a dense 0/1 matrix.
inline std::size_t gf2_rank_naive(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] % 2 == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % 2 == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + m[r][j]) % 2;
        }
        ++r;
    }
    return r;
}

// Naive exact-fraction elimination rank.
inline std::size_t q_rank_naive(const std::vector<std::vector<long long>>& in) {
    if (in.empty()) return 0;
    using hypercut::Rational;
    std::vector<std::vector<Rational>> m(in.size(), std::vector<Rational>(in[0].size()));
    for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < in[0].size(); ++j) m[i][j] = in[i][j];
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Coboundary of an edge set by direct subset counting (no boundary matrix).
inline std::set<std::set<int>> coboundary_naive(const std::set<std::set<int>>& edges, int n) {
    std::set<std::set<int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int hits = 0;
                hits += edges.count({a, b});
                hits += edges.count({a, c});
                hits += edges.count({b, c});
                if (hits % 2 == 1) out.insert({a, b, c});
            }
    return out;
}

inline std::set<std::set<int>> faceset_to_sets(const hypercut::FaceSet& fs) {
    std::set<std::set<int>> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto s = fs.simplex_at(i);
        out.insert(std::set<int>(s.v.begin(), s.v.end()));
    }
    return out;
}

// Deterministic pseudo-random stream for test data.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() { return state = hypercut::splitmix64(state); }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return next() & 1; }
};

}  // namespace oracle
