#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hypercut {

// Binomial coefficients C(n,k) for n <= 68, k <= 10; everything in this
// library lives in that range (top-dimensional faces have <= 7 vertices,
// vertex counts stay desk-scale).
inline constexpr int kMaxN = 68;
inline constexpr int kMaxK = 10;

namespace detail {
inline const std::array<std::array<std::uint64_t, kMaxK + 1>, kMaxN + 1>&
binom_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxK + 1>, kMaxN + 1> t{};
        for (int n = 0; n <= kMaxN; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= kMaxK; ++k) {
                t[n][k] = (k > n) ? 0 : t[n - 1][k - 1] + t[n - 1][k];
            }
        }
        return t;
    }();
    return table;
}
}  // namespace detail

inline std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0) return 0;
    if (k > n) return 0;
    if (n > kMaxN || k > kMaxK)
        throw std::out_of_range("binom: outside precomputed range");
    return detail::binom_table()[n][k];
}

// Colexicographic rank of a strictly ascending k-subset (combinatorial
// number system): rank = sum_i C(v[i], i+1).
inline std::uint64_t colex_rank(const std::vector<int>& v) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        r += binom(v[i], static_cast<int>(i) + 1);
    return r;
}

inline void colex_unrank(std::uint64_t rank, int k, std::vector<int>& out) {
    out.assign(k, 0);
    for (int i = k; i >= 1; --i) {
        // largest v with C(v,i) <= rank
        int v = i - 1;
        while (binom(v + 1, i) <= rank) ++v;
        out[i - 1] = v;
        rank -= binom(v, i);
    }
}

inline std::vector<int> colex_unrank(std::uint64_t rank, int k) {
    std::vector<int> out;
    colex_unrank(rank, k, out);
    return out;
}

// Advances v to the next k-subset of [0,n) in colex order.
// Returns false when v was the last one.
inline bool next_colex(std::vector<int>& v, int n) {
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? v[i + 1] - 1 : n - 1;
        if (v[i] < limit) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = j;
            return true;
        }
    }
    return false;
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline int mod_pow(long long base, long long exp, int mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

// SplitMix64; the documented PRNG behind every randomized routine here.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform double in [0,1) from a 64-bit word.
inline double to_unit_double(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// FNV-1a, used for config hashes in reports.
inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffu;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace hypercut
