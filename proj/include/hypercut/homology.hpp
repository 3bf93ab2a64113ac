#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hypercut/boundary.hpp"
#include "hypercut/collapse.hpp"
#include "hypercut/link_graph.hpp"
#include "hypercut/simplex.hpp"
#include "hypercut/span.hpp"

namespace hypercut {

// F-rank of the face set's boundary columns.
inline std::size_t face_rank(const FaceSet& fs, Field field) {
    return column_span(fs, field).rank();
}

inline bool is_acyclic(const FaceSet& fs, Field field) {
    return face_rank(fs, field) == fs.size();
}

// SH(fs): faces outside fs whose boundary column lies in the span of fs's
// columns. One elimination, then every candidate streams through in_span.
inline FaceSet shadow(const FaceSet& fs, Field field) {
    const SpanState st = column_span(fs, field);
    FaceSet out(fs.n, fs.d);
    const std::uint64_t total = fs.ambient_count();
    std::size_t p = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (p < fs.idx.size() && fs.idx[p] == i) {
            ++p;
            continue;
        }
        if (st.in_span_sparse(boundary_column(fs.d, static_cast<std::uint32_t>(i))))
            out.idx.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

inline bool is_hypertree(const FaceSet& fs, Field field) {
    return fs.size() == binom(fs.n - 1, fs.d) && is_acyclic(fs, field);
}

inline bool is_almost_hypertree(const FaceSet& fs, Field field) {
    return fs.size() == binom(fs.n - 1, fs.d) - 1 && is_acyclic(fs, field);
}

// F2 coboundary generated by a set A of (d-1)-faces: the d-faces whose
// boundary meets A in an odd number of faces.
inline FaceSet coboundary_of(const FaceSet& a, int n, int d) {
    if (a.d != d - 1 || a.n != n)
        throw std::invalid_argument("coboundary_of: generator must be a (d-1)-face set on [0,n)");
    std::vector<char> in_a(binom(n, d), 0);
    for (std::uint32_t f : a.idx) in_a[f] = 1;
    FaceSet out(n, d);
    const std::uint64_t total = binom(n, d + 1);
    for (std::uint64_t i = 0; i < total; ++i) {
        int odd = 0;
        for (const auto& [r, v] : boundary_column(d, static_cast<std::uint32_t>(i))) {
            (void)v;
            odd ^= in_a[r];
        }
        if (odd) out.idx.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

inline FaceSet coboundary_of(const LinkGraph& g) {
    FaceSet edges(g.n, 1);
    for (const auto& [a, b] : g.edges()) edges.insert(Simplex{a, b});
    return coboundary_of(edges, g.n, 2);
}

// Cocycle test: orthogonality of the indicator vector to every column of
// d_{d+1}. The full skeleton has trivial top cohomology, so cocycles equal
// coboundaries and this avoids an elimination. F2 only.
inline bool is_coboundary(const FaceSet& fs) {
    const int n = fs.n, d = fs.d;
    if (d + 2 > n) return true;  // no (d+1)-simplices: orthogonality is vacuous
    std::vector<char> in_fs(binom(n, d + 1), 0);
    for (std::uint32_t f : fs.idx) in_fs[f] = 1;
    const std::uint64_t total = binom(n, d + 2);
    for (std::uint64_t i = 0; i < total; ++i) {
        int odd = 0;
        for (const auto& [r, v] : boundary_column(d + 1, static_cast<std::uint32_t>(i))) {
            (void)v;
            odd ^= in_fs[r];
        }
        if (odd) return false;
    }
    return true;
}

// Graph of edges {a,b} with {a,b,v} in the 2-dimensional face set.
inline LinkGraph link_graph_of(const FaceSet& c, Vertex v) {
    if (c.d != 2) throw std::invalid_argument("link_graph_of: face set must be 2-dimensional");
    LinkGraph g(c.n, v);
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
        const Simplex s = c.simplex_at(pos);
        if (!s.contains(v)) continue;
        Vertex e[2];
        int k = 0;
        for (Vertex x : s.v)
            if (x != v) e[k++] = x;
        g.add_edge(e[0], e[1]);
    }
    return g;
}

// Rebuilds link_to(C) from link_from(C) by toggling, for every neighbour x
// of `to` in the old link, the full star of x; each star toggle preserves
// the generated coboundary and the composite isolates `to`.
inline LinkGraph regenerate_link(const FaceSet& c, Vertex from, Vertex to) {
    if (!is_coboundary(c)) throw std::invalid_argument("regenerate_link: input is not a coboundary");
    LinkGraph g = link_graph_of(c, from);
    if (from == to) return g;
    const std::uint64_t nbrs = g.adj[to];
    LinkGraph out(c.n, to);
    for (Vertex a = 0; a < c.n; ++a) {
        if (a == to) continue;
        for (Vertex b = a + 1; b < c.n; ++b) {
            if (b == to) continue;
            bool e = (a != from && b != from) && g.has_edge(a, b);
            e ^= ((nbrs >> a) & 1u) ^ ((nbrs >> b) & 1u);
            if (e) out.add_edge(a, b);
        }
    }
    return out;
}

// Complement characterization: fs is a hypercut iff its complement is closed
// of corank 1 (the union of an almost-hypertree and its shadow) and fs is
// nonempty.
inline bool is_hypercut(const FaceSet& fs, Field field) {
    if (fs.empty()) return false;
    const FaceSet comp = complement(fs);
    const SpanState st = column_span(comp, field);
    if (st.rank() != binom(fs.n - 1, fs.d) - 1) return false;
    // complement must be shadowless; its shadow can only live inside fs
    for (std::uint32_t f : fs.idx)
        if (st.in_span_sparse(boundary_column(fs.d, f))) return false;
    return true;
}

inline bool is_perfect_hypercut(const FaceSet& fs, Field field) {
    const std::uint64_t perfect = binom(fs.n, fs.d + 1) - (binom(fs.n - 1, fs.d) - 1);
    return fs.size() == perfect && is_hypercut(fs, field);
}

// Link criterion for d=2: a coboundary is a hypercut iff all n vertex links
// are Lambda-connected. Errors on non-coboundary input.
inline bool is_hypercut_via_links(const FaceSet& c) {
    if (c.d != 2) throw std::invalid_argument("is_hypercut_via_links: d must be 2");
    if (!is_coboundary(c))
        throw std::invalid_argument("is_hypercut_via_links: input is not a coboundary");
    for (Vertex v = 0; v < c.n; ++v)
        if (!lambda_connected_graph(link_graph_of(c, v))) return false;
    return true;
}

// Generalized Lambda-adjacency on the (d-1)-faces of K: two faces are
// adjacent when their union sigma has d+1 vertices and they are the only
// (d-1)-subfaces of sigma present in K.
inline std::size_t lambda_classes_complex(const FaceSet& k) {
    if (k.empty()) return 0;
    const int d = k.d + 1;  // dimension of the unions sigma
    std::vector<int> pos(binom(k.n, d), -1);
    for (std::size_t i = 0; i < k.idx.size(); ++i) pos[k.idx[i]] = static_cast<int>(i);
    detail::UnionFind uf(k.size());
    const std::uint64_t total = binom(k.n, d + 1);
    for (std::uint64_t s = 0; s < total; ++s) {
        int present = 0;
        int a = -1, b = -1;
        for (const auto& [r, v] : boundary_column(d, static_cast<std::uint32_t>(s))) {
            (void)v;
            if (pos[r] >= 0) {
                ++present;
                if (present == 1)
                    a = pos[r];
                else
                    b = pos[r];
                if (present > 2) break;
            }
        }
        if (present == 2) uf.unite(a, b);
    }
    return uf.classes(k.size());
}

inline bool lambda_connected_complex(const FaceSet& k) {
    return lambda_classes_complex(k) == 1;
}

// Sufficient construction in any dimension: a Lambda-connected link complex
// K at vertex v generates a d-hypercut C = K * d_d. On instances small
// enough for an elimination the hypercut property is re-verified outright.
inline FaceSet hypercut_from_lambda_link(const FaceSet& k, Vertex v) {
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k.simplex_at(i).contains(v))
            throw std::invalid_argument("hypercut_from_lambda_link: K must avoid the link vertex");
    if (!lambda_connected_complex(k))
        throw std::invalid_argument("hypercut_from_lambda_link: K is not Lambda-connected");
    const FaceSet c = coboundary_of(k, k.n, k.d + 1);
    if (c.ambient_count() <= 2048 && !is_hypercut(c, Field::F2))
        throw std::logic_error("hypercut_from_lambda_link: generated set failed the hypercut check");
    return c;
}

// |C| = n*m - sum(d_i^2) + 4t for the coboundary generated by a graph with
// profile p on an n-vertex complex.
inline long long cut_size_formula(const CutProfile& p, int n) {
    long long sum_sq = 0;
    for (int d : p.degrees) sum_sq += static_cast<long long>(d) * d;
    return static_cast<long long>(n) * static_cast<long long>(p.m) - sum_sq +
           4 * static_cast<long long>(p.t);
}

}  // namespace hypercut
