#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hypercut/exact_matrix.hpp"
#include "hypercut/simplex.hpp"

namespace hypercut {

namespace detail {
inline void require_odd_prime(int n, const char* who) {
    if (n < 5 || !is_prime(n))
        throw std::invalid_argument(std::string(who) + ": n must be a prime >= 5");
}
}  // namespace detail

// True iff Z_n^* is generated by {-1, 2} (the per-n Artin condition).
inline bool artin_condition(int n) {
    detail::require_odd_prime(n, "artin_condition");
    std::set<int> sub{1, n - 1};
    // closure under multiplication by 2
    std::vector<int> frontier(sub.begin(), sub.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int g : frontier) {
            const int h = static_cast<int>(2LL * g % n);
            if (sub.insert(h).second) next.push_back(h);
        }
        frontier.swap(next);
    }
    return static_cast<int>(sub.size()) == n - 1;
}

// Index [G_n : H_n] with G_n = Z_n^*/{+-1} and H_n the subgroup generated
// by 2. Controls the Q-rank deficiency of X_n.
inline int group_index(int n) {
    detail::require_odd_prime(n, "group_index");
    const int g_order = (n - 1) / 2;
    int ord = 1;
    long long pw = 2 % n;
    while (pw != 1 && pw != n - 1) {
        pw = pw * 2 % n;
        ++ord;
    }
    return g_order / ord;
}

// X_n: the 2-faces {b, b+delta, b+2*delta} over Z_n with difference class
// not in {0, +-2^{-1}}. Any omitted class gives an isomorphic complex
// (x -> ax); omitting 2^{-1} is the normalization under which the E/F class
// partition, the block form and the certificate line up.
inline FaceSet arithmetic_complex(int n) {
    detail::require_odd_prime(n, "arithmetic_complex");
    const int inv2 = (n + 1) / 2;  // 2 * inv2 = 1 mod n
    FaceSet fs(n, 2);
    std::vector<Vertex> verts(3);
    for (int delta = 1; delta < n; ++delta) {
        if (delta == inv2 || delta == n - inv2) continue;
        for (int b = 0; b < n; ++b) {
            verts = {b, (b + delta) % n, (b + 2 * delta) % n};
            fs.insert(make_simplex(verts));
        }
    }
    if (fs.size() != static_cast<std::size_t>(n) * (n - 3) / 2)
        throw std::logic_error("arithmetic_complex: face count identity violated");
    return fs;
}

// Ordered difference classes: E_{2^i} = ((b, b+2^i))_b for i in [0, m-1],
// F_{2^j} = ((b, b+2^j, b+2^{j+1}))_b for j in [0, m-2], m = (n-1)/2. Under
// the Artin condition the E classes partition all edges and the F classes
// partition the faces of X_n; the omitted difference class is 2^{m-1}.
struct ArithClasses {
    int n = 0;
    int m = 0;
    std::vector<int> pow2;                                  // 2^i mod n, i in [0, m-1]
    std::vector<std::vector<std::pair<int, int>>> e_class;  // directed edges
    std::vector<std::vector<std::array<int, 3>>> f_class;   // oriented triples
};

inline ArithClasses arith_classes(int n) {
    detail::require_odd_prime(n, "arith_classes");
    if (!artin_condition(n))
        throw std::invalid_argument("arith_classes: Artin condition fails; classes would collide");
    ArithClasses out;
    out.n = n;
    out.m = (n - 1) / 2;
    out.pow2.resize(out.m);
    for (int i = 0; i < out.m; ++i) out.pow2[i] = mod_pow(2, i, n);
    out.e_class.resize(out.m);
    out.f_class.resize(out.m - 1);
    for (int i = 0; i < out.m; ++i) {
        out.e_class[i].reserve(n);
        for (int b = 0; b < n; ++b) out.e_class[i].push_back({b, (b + out.pow2[i]) % n});
    }
    for (int j = 0; j + 1 < out.m; ++j) {
        out.f_class[j].reserve(n);
        for (int b = 0; b < n; ++b)
            out.f_class[j].push_back(
                {b, (b + out.pow2[j]) % n, (b + out.pow2[j] + out.pow2[j]) % n});
    }
    return out;
}

// Verifies bit-exactly that M_X, with rows ordered by E classes and columns
// by F classes (class orientations), consists of I + Q^{2^j} diagonal blocks
// with -I below and zeros elsewhere, Q the cyclic shift b -> b+1.
inline bool block_form_check(int n) {
    const ArithClasses cls = arith_classes(n);
    const int m = cls.m;
    // map ascending edge -> (class, position, direction)
    std::map<std::pair<int, int>, std::tuple<int, int, int>> edge_of;
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < n; ++b) {
            auto [p, q] = cls.e_class[i][b];
            const int dir = p < q ? 1 : -1;
            edge_of[{std::min(p, q), std::max(p, q)}] = {i, b, dir};
        }
    if (edge_of.size() != binom(n, 2)) return false;

    for (int j = 0; j + 1 < m; ++j) {
        for (int b = 0; b < n; ++b) {
            const auto [v0, v1, v2] = cls.f_class[j][b];
            // boundary of the oriented triple (v0, v1, v2)
            const std::array<std::pair<std::pair<int, int>, int>, 3> terms{{
                {{v1, v2}, 1},
                {{v0, v2}, -1},
                {{v0, v1}, 1},
            }};
            // expected support: +1 at E_j[b], +1 at E_j[b + 2^j], -1 at E_{j+1}[b]
            std::map<std::pair<int, int>, int> expected;
            expected[{j, b}] += 1;
            expected[{j, (b + cls.pow2[j]) % n}] += 1;
            expected[{j + 1, b}] -= 1;
            std::map<std::pair<int, int>, int> got;
            for (const auto& [e, coeff] : terms) {
                const auto key = std::make_pair(std::min(e.first, e.second),
                                                std::max(e.first, e.second));
                const auto [cl, pos, dir] = edge_of.at(key);
                const int asc_coeff = e.first < e.second ? coeff : -coeff;
                got[{cl, pos}] += asc_coeff * dir;
            }
            std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
            if (got != expected) return false;
        }
    }
    return true;
}

// The certificate functional: u evaluates an oriented edge (p,q) to +2^i if
// q-p = 2^i mod n and to -2^i if p-q = 2^i mod n, as exact integers.
struct CertificateVector {
    int n = 0;
    std::vector<BigInt> u;  // indexed by colex edge rank, ascending orientation
};

inline CertificateVector certificate_vector(int n) {
    detail::require_odd_prime(n, "certificate_vector");
    if (!artin_condition(n))
        throw std::invalid_argument("certificate_vector: Artin condition fails");
    const int m = (n - 1) / 2;
    std::vector<BigInt> by_diff(n);  // signed value of a +diff step
    for (int i = 0; i < m; ++i) {
        const int fwd = mod_pow(2, i, n);
        const BigInt val = BigInt(1) << i;
        by_diff[fwd] = val;
        by_diff[n - fwd] = -val;
    }
    CertificateVector out;
    out.n = n;
    out.u.resize(binom(n, 2));
    std::vector<int> e(2);
    for (std::uint64_t idx = 0; idx < binom(n, 2); ++idx) {
        colex_unrank(idx, 2, e);
        out.u[idx] = by_diff[(e[1] - e[0]) % n];
    }
    return out;
}

// <u, d(sigma)> = 0 iff sigma in X_n, for every sigma in K_n^(2).
inline bool certificate_check(int n) {
    const CertificateVector cert = certificate_vector(n);
    const FaceSet x = arithmetic_complex(n);
    std::vector<int> v(3);
    for (std::uint64_t idx = 0; idx < binom(n, 3); ++idx) {
        colex_unrank(idx, 3, v);
        // <u, d(x0,x1,x2)> = u(x1,x2) - u(x0,x2) + u(x0,x1)
        const BigInt val = cert.u[colex_rank({v[1], v[2]})] -
                           cert.u[colex_rank({v[0], v[2]})] +
                           cert.u[colex_rank({v[0], v[1]})];
        const bool in_x = x.contains_index(static_cast<std::uint32_t>(idx));
        if ((val == 0) != in_x) return false;
    }
    return true;
}

}  // namespace hypercut
