#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypercut/simplex.hpp"

namespace hypercut {

// Simple graph on the vertex set [0,n) minus one distinguished vertex,
// adjacency kept as bitmasks (n <= 64 throughout this library).
struct LinkGraph {
    int n = 0;           // vertex universe size (the complex's n)
    Vertex center = -1;  // excluded vertex
    std::vector<std::uint64_t> adj;

    LinkGraph() = default;
    LinkGraph(int n_, Vertex center_) : n(n_), center(center_), adj(n_, 0) {
        if (n > 64) throw std::invalid_argument("LinkGraph: n > 64 unsupported");
        if (center < 0 || center >= n) throw std::invalid_argument("LinkGraph: bad center");
    }

    bool has_edge(Vertex a, Vertex b) const { return (adj[a] >> b) & 1u; }
    void add_edge(Vertex a, Vertex b) {
        if (a == b || a == center || b == center)
            throw std::invalid_argument("LinkGraph: illegal edge");
        adj[a] |= std::uint64_t(1) << b;
        adj[b] |= std::uint64_t(1) << a;
    }
    void remove_edge(Vertex a, Vertex b) {
        adj[a] &= ~(std::uint64_t(1) << b);
        adj[b] &= ~(std::uint64_t(1) << a);
    }
    void toggle_edge(Vertex a, Vertex b) {
        adj[a] ^= std::uint64_t(1) << b;
        adj[b] ^= std::uint64_t(1) << a;
    }

    int degree(Vertex v) const { return std::popcount(adj[v]); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (auto m : adj) twice += std::popcount(m);
        return twice / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex a = 0; a < n; ++a) {
            std::uint64_t m = adj[a] >> (a + 1) << (a + 1);
            while (m) {
                const int b = std::countr_zero(m);
                m &= m - 1;
                out.emplace_back(a, b);
            }
        }
        return out;
    }

    // Descending degree sequence over the n-1 real vertices.
    std::vector<int> degree_sequence() const {
        std::vector<int> d;
        d.reserve(n - 1);
        for (Vertex v = 0; v < n; ++v)
            if (v != center) d.push_back(degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    std::size_t triangle_count() const {
        std::size_t t = 0;
        for (Vertex a = 0; a < n; ++a) {
            std::uint64_t m = adj[a] >> (a + 1) << (a + 1);
            while (m) {
                const int b = std::countr_zero(m);
                m &= m - 1;
                const std::uint64_t common = adj[a] & adj[b];
                t += std::popcount(common >> (b + 1) << (b + 1));
            }
        }
        return t;
    }

    // Complement within K_{n-1} on the same vertex set.
    LinkGraph complement_graph() const {
        LinkGraph g(n, center);
        const std::uint64_t full =
            (n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1)) &
            ~(std::uint64_t(1) << center);
        for (Vertex v = 0; v < n; ++v) {
            if (v == center) continue;
            g.adj[v] = full & ~adj[v] & ~(std::uint64_t(1) << v);
        }
        return g;
    }

    bool operator==(const LinkGraph& o) const {
        return n == o.n && center == o.center && adj == o.adj;
    }
};

// Degree data of a complement link graph, the inputs of the cut-size formula.
struct CutProfile {
    std::size_t m = 0;            // edge count
    std::vector<int> degrees;     // descending
    std::size_t t = 0;            // triangle count

    static CutProfile of(const LinkGraph& g) {
        return CutProfile{g.edge_count(), g.degree_sequence(), g.triangle_count()};
    }
};

namespace detail {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t k) : parent(k) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
    std::size_t classes(std::size_t k) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};
}  // namespace detail

// Number of classes of the transitive closure of Lambda-adjacency on E(G):
// uv ~ uw when vw is not an edge.
inline std::size_t lambda_classes(const LinkGraph& g) {
    const auto es = g.edges();
    if (es.empty()) return 0;
    std::vector<std::vector<int>> eid(g.n, std::vector<int>(g.n, -1));
    for (std::size_t i = 0; i < es.size(); ++i) {
        eid[es[i].first][es[i].second] = static_cast<int>(i);
        eid[es[i].second][es[i].first] = static_cast<int>(i);
    }
    detail::UnionFind uf(es.size());
    for (Vertex u = 0; u < g.n; ++u) {
        std::uint64_t mv = g.adj[u];
        while (mv) {
            const int v = std::countr_zero(mv);
            mv &= mv - 1;
            std::uint64_t mw = g.adj[u] >> (v + 1) << (v + 1);
            while (mw) {
                const int w = std::countr_zero(mw);
                mw &= mw - 1;
                if (!g.has_edge(v, w)) uf.unite(eid[u][v], eid[u][w]);
            }
        }
    }
    return uf.classes(es.size());
}

// The empty graph is not Lambda-connected; a single edge is (one class).
inline bool lambda_connected_graph(const LinkGraph& g) {
    return lambda_classes(g) == 1;
}

namespace detail {
// Backtracking isomorphism test for the small structured graphs handled
// here (at most ~16 vertices, strong degree constraints).
inline bool isomorphic_impl(const std::vector<std::uint64_t>& a,
                            const std::vector<std::uint64_t>& b,
                            std::vector<int>& map_ab, std::vector<char>& used,
                            std::size_t next, const std::vector<int>& da,
                            const std::vector<int>& db) {
    const std::size_t n = a.size();
    if (next == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || da[next] != db[cand]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < next && ok; ++prev) {
            const bool ea = (a[next] >> prev) & 1u;
            const bool eb = (b[cand] >> map_ab[prev]) & 1u;
            if (ea != eb) ok = false;
        }
        if (!ok) continue;
        used[cand] = 1;
        map_ab[next] = static_cast<int>(cand);
        if (isomorphic_impl(a, b, map_ab, used, next + 1, da, db)) return true;
        used[cand] = 0;
    }
    return false;
}
}  // namespace detail

// Isomorphism of the underlying graphs (centers ignored; both graphs must
// live on the same universe size).
inline bool isomorphic(const LinkGraph& ga, const LinkGraph& gb) {
    if (ga.n != gb.n) return false;
    // compact to the n-1 real vertices
    auto compact = [](const LinkGraph& g) {
        std::vector<int> ids;
        for (Vertex v = 0; v < g.n; ++v)
            if (v != g.center) ids.push_back(v);
        std::vector<std::uint64_t> adj(ids.size(), 0);
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = 0; j < ids.size(); ++j)
                if (g.has_edge(ids[i], ids[j])) adj[i] |= std::uint64_t(1) << j;
        return adj;
    };
    const auto a = compact(ga);
    const auto b = compact(gb);
    std::vector<int> da(a.size()), db(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) da[i] = std::popcount(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) db[i] = std::popcount(b[i]);
    auto sda = da, sdb = db;
    std::sort(sda.begin(), sda.end());
    std::sort(sdb.begin(), sdb.end());
    if (sda != sdb) return false;
    std::vector<int> map_ab(a.size(), -1);
    std::vector<char> used(a.size(), 0);
    return detail::isomorphic_impl(a, b, map_ab, used, 0, da, db);
}

}  // namespace hypercut
