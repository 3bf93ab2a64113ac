#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercut/combinat.hpp"

namespace hypercut {

using Vertex = int;

enum class Field { F2, Q };

inline std::string to_string(Field f) { return f == Field::F2 ? "F2" : "Q"; }

// A simplex is a strictly ascending vertex tuple; dim = size - 1.
struct Simplex {
    std::vector<Vertex> v;

    Simplex() = default;
    explicit Simplex(std::vector<Vertex> verts) : v(std::move(verts)) {
        if (v.empty()) throw std::invalid_argument("Simplex: empty vertex tuple");
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i - 1] >= v[i])
                throw std::invalid_argument("Simplex: vertices must be strictly ascending");
    }
    Simplex(std::initializer_list<Vertex> verts) : Simplex(std::vector<Vertex>(verts)) {}

    int dim() const { return static_cast<int>(v.size()) - 1; }
    bool contains(Vertex x) const { return std::binary_search(v.begin(), v.end(), x); }

    // Face obtained by deleting the i-th vertex of the tuple.
    Simplex facet(int i) const {
        Simplex s;
        s.v = v;
        s.v.erase(s.v.begin() + i);
        return s;
    }

    bool operator==(const Simplex& o) const { return v == o.v; }
    bool operator<(const Simplex& o) const { return v < o.v; }

    friend std::ostream& operator<<(std::ostream& os, const Simplex& s) {
        for (std::size_t i = 0; i < s.v.size(); ++i) {
            if (i) os << ' ';
            os << s.v[i];
        }
        return os;
    }
};

// Builds a simplex from an unsorted tuple, e.g. when applying Z_n arithmetic.
inline Simplex make_simplex(std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end());
    return Simplex(std::move(verts));
}

// Simplex with an orientation sign relative to ascending vertex order.
struct OrientedSimplex {
    Simplex base;
    int sign = 1;  // +1 or -1

    OrientedSimplex() = default;
    OrientedSimplex(Simplex b, int s) : base(std::move(b)), sign(s) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("OrientedSimplex: sign must be +-1");
    }

    // Orientation given by an ordered tuple; sign is the parity of the
    // permutation sorting it.
    static OrientedSimplex from_tuple(const std::vector<Vertex>& tuple) {
        std::vector<Vertex> sorted = tuple;
        int sign = 1;
        // insertion sort, counting swaps
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
                std::swap(sorted[j - 1], sorted[j]);
                sign = -sign;
            }
        }
        return OrientedSimplex(Simplex(std::move(sorted)), sign);
    }

    int dim() const { return base.dim(); }
};

// Sparse chain with coefficients in the chosen field. Over F2 coefficients
// are kept in {1}; no zero coefficient is ever stored.
struct Chain {
    Field field = Field::Q;
    std::map<Simplex, long long> terms;

    void add(const Simplex& s, long long c) {
        if (field == Field::F2) c &= 1;
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(s, 0);
        it->second += c;
        if (field == Field::F2) it->second &= 1;
        if (it->second == 0) terms.erase(it);
    }
    long long coeff(const Simplex& s) const {
        auto it = terms.find(s);
        return it == terms.end() ? 0 : it->second;
    }
    std::size_t size() const { return terms.size(); }
};

// d(v_0,...,v_d) = sum_i (-1)^i (tuple minus v_i), times the input sign.
inline Chain boundary_of_simplex(const OrientedSimplex& s, Field field = Field::Q) {
    if (s.dim() < 1)
        throw std::invalid_argument("boundary_of_simplex: dimension-0 simplex has no modeled boundary");
    Chain out;
    out.field = field;
    for (int i = 0; i <= s.dim(); ++i) {
        const long long c = (i % 2 == 0) ? s.sign : -s.sign;
        out.add(s.base.facet(i), field == Field::F2 ? 1 : c);
    }
    return out;
}

// A d-dimensional face collection on n vertices with implied full
// (d-1)-skeleton. Faces are stored as sorted colex indices.
struct FaceSet {
    int n = 0;
    int d = 0;
    std::vector<std::uint32_t> idx;  // ascending colex indices

    FaceSet() = default;
    FaceSet(int n_, int d_) : n(n_), d(d_) {
        if (d < 0 || d >= n) throw std::invalid_argument("FaceSet: need 0 <= d < n");
    }

    std::size_t size() const { return idx.size(); }
    bool empty() const { return idx.empty(); }
    int verts_per_face() const { return d + 1; }
    std::uint64_t ambient_count() const { return binom(n, d + 1); }

    bool contains_index(std::uint32_t i) const {
        return std::binary_search(idx.begin(), idx.end(), i);
    }
    bool contains(const Simplex& s) const {
        if (s.dim() != d) return false;
        return contains_index(static_cast<std::uint32_t>(colex_rank(s.v)));
    }

    Simplex simplex_at(std::size_t pos) const {
        return Simplex(colex_unrank(idx[pos], d + 1));
    }

    void insert(const Simplex& s) {
        if (s.dim() != d) throw std::invalid_argument("FaceSet::insert: wrong dimension");
        if (s.v.back() >= n) throw std::invalid_argument("FaceSet::insert: vertex out of range");
        insert_index(static_cast<std::uint32_t>(colex_rank(s.v)));
    }
    void insert_index(std::uint32_t i) {
        auto it = std::lower_bound(idx.begin(), idx.end(), i);
        if (it == idx.end() || *it != i) idx.insert(it, i);
    }

    static FaceSet from_simplices(int n, int d, const std::vector<Simplex>& faces) {
        FaceSet fs(n, d);
        fs.idx.reserve(faces.size());
        for (const auto& s : faces) {
            if (s.dim() != d) throw std::invalid_argument("FaceSet: face of wrong dimension");
            if (s.v.front() < 0 || s.v.back() >= n)
                throw std::invalid_argument("FaceSet: vertex out of range");
            fs.idx.push_back(static_cast<std::uint32_t>(colex_rank(s.v)));
        }
        std::sort(fs.idx.begin(), fs.idx.end());
        fs.idx.erase(std::unique(fs.idx.begin(), fs.idx.end()), fs.idx.end());
        return fs;
    }

    std::vector<Simplex> simplices() const {
        std::vector<Simplex> out;
        out.reserve(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(simplex_at(i));
        return out;
    }

    bool operator==(const FaceSet& o) const { return n == o.n && d == o.d && idx == o.idx; }
};

inline FaceSet complete_faces(int n, int d) {
    if (d < 0 || d >= n) throw std::invalid_argument("complete_faces: need 0 <= d < n");
    FaceSet fs(n, d);
    const std::uint64_t total = binom(n, d + 1);
    fs.idx.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) fs.idx[i] = static_cast<std::uint32_t>(i);
    return fs;
}

inline FaceSet complement(const FaceSet& fs) {
    FaceSet out(fs.n, fs.d);
    const std::uint64_t total = fs.ambient_count();
    out.idx.reserve(total - fs.size());
    std::size_t p = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (p < fs.idx.size() && fs.idx[p] == i) {
            ++p;
        } else {
            out.idx.push_back(static_cast<std::uint32_t>(i));
        }
    }
    return out;
}

// link_sigma(X) = { tau : tau and sigma disjoint, tau union sigma in X }.
inline FaceSet link(const FaceSet& fs, const Simplex& sigma) {
    if (sigma.dim() >= fs.d)
        throw std::invalid_argument("link: dim(sigma) must be < dim(face set)");
    FaceSet out(fs.n, fs.d - sigma.dim() - 1);
    std::vector<Vertex> tau;
    for (std::size_t pos = 0; pos < fs.size(); ++pos) {
        const Simplex face = fs.simplex_at(pos);
        tau.clear();
        std::size_t hit = 0;
        for (Vertex x : face.v) {
            if (sigma.contains(x)) {
                ++hit;
            } else {
                tau.push_back(x);
            }
        }
        if (hit == sigma.v.size()) out.insert_index(static_cast<std::uint32_t>(colex_rank(tau)));
    }
    return out;
}

}  // namespace hypercut
