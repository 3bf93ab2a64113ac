#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypercut/simplex.hpp"

namespace hypercut {

namespace detail {
// cyclic length of the edge {p,q} in Z_n and the endpoint it is measured from
inline std::pair<int, int> edge_length_from(int p, int q, int n) {
    const int fwd = ((q - p) % n + n) % n;
    if (fwd < n - fwd) return {fwd, p};
    return {n - fwd, q};
}
}  // namespace detail

// A_n: the faces rho_{x,a} = {x, x+a, x+floor(a/2)} over Z_n for all lengths
// n/2 > a, a != 1, 3. Collapsible, stays collapsible after adding any face,
// hence acyclic and shadowless over every field.
inline FaceSet collapsible_shadowless_complex(int n) {
    if (n < 7 || n % 2 == 0)
        throw std::invalid_argument("collapsible_shadowless_complex: n must be odd and >= 7");
    FaceSet fs(n, 2);
    std::vector<Vertex> verts(3);
    for (int a = 2; 2 * a < n; ++a) {
        if (a == 3) continue;
        for (int x = 0; x < n; ++x) {
            verts = {x, (x + a) % n, (x + a / 2) % n};
            fs.insert(make_simplex(verts));
        }
    }
    if (fs.size() != static_cast<std::size_t>(n) * (n - 5) / 2)
        throw std::logic_error("collapsible_shadowless_complex: face count identity violated");
    return fs;
}

// The recursive polygon C_{x,y}: bare edge for lengths 1 and 3, otherwise
// C_{x,x+b} u C_{x+b,y} u {rho_{x,a}} with b = floor(a/2). Its vertices walk
// from x to y in steps of 1 or 3.
struct PolygonGadget {
    int n = 0;
    Vertex x = 0, y = 0;
    FaceSet faces;                              // 2-faces of the gadget
    std::vector<std::pair<int, int>> edges;     // all edges, (tail, head) along +1 direction
    std::vector<Vertex> boundary_path;          // x -> y walk through steps 1 / 3
};

namespace detail {
inline void build_gadget(int n, int x, int a, PolygonGadget& g) {
    if (a == 1 || a == 3) {
        g.edges.push_back({x, (x + a) % n});
        g.boundary_path.push_back((x + a) % n);
        return;
    }
    const int b = a / 2;
    std::vector<Vertex> verts = {x, (x + a) % n, (x + b) % n};
    g.faces.insert(make_simplex(verts));
    g.edges.push_back({x, (x + a) % n});
    build_gadget(n, x, b, g);
    build_gadget(n, (x + b) % n, a - b, g);
}
}  // namespace detail

inline PolygonGadget polygon_gadget(int n, Vertex x, Vertex y) {
    if (n < 7 || n % 2 == 0) throw std::invalid_argument("polygon_gadget: n must be odd and >= 7");
    const auto [a, tail] = detail::edge_length_from(x, y, n);
    if (a == 0) throw std::invalid_argument("polygon_gadget: x and y must differ");
    PolygonGadget g;
    g.n = n;
    g.x = tail;
    g.y = (tail + a) % n;
    g.faces = FaceSet(n, 2);
    g.boundary_path.push_back(tail);
    detail::build_gadget(n, tail, a, g);
    return g;
}

// Residual complex after the top-down collapse of A_n u {sigma}:
// Delta_sigma = {sigma} u C_{x,y} u C_{x,z} u C_{y,z}.
inline FaceSet delta_sigma(int n, const Simplex& sigma) {
    if (sigma.dim() != 2) throw std::invalid_argument("delta_sigma: sigma must be a 2-face");
    const FaceSet a_n = collapsible_shadowless_complex(n);
    if (a_n.contains(sigma)) throw std::invalid_argument("delta_sigma: sigma already in A_n");
    FaceSet out(n, 2);
    out.insert(sigma);
    const Vertex x = sigma.v[0], y = sigma.v[1], z = sigma.v[2];
    for (const auto& [p, q] : {std::pair{x, y}, std::pair{x, z}, std::pair{y, z}}) {
        const PolygonGadget g = polygon_gadget(n, p, q);
        for (std::uint32_t f : g.faces.idx) out.insert_index(f);
    }
    return out;
}

// All d-faces containing vertex 0: a d-hypertree over every field.
inline FaceSet star_hypertree(int n, int d) {
    if (d < 1 || d >= n) throw std::invalid_argument("star_hypertree: need 1 <= d < n");
    FaceSet fs(n, d);
    std::vector<int> rest(d);
    for (int i = 0; i < d; ++i) rest[i] = i + 1;
    do {
        std::vector<Vertex> verts;
        verts.reserve(d + 1);
        verts.push_back(0);
        verts.insert(verts.end(), rest.begin(), rest.end());
        fs.insert(Simplex(std::move(verts)));
        // advance rest over d-subsets of [1, n)
        int i = d - 1;
        while (i >= 0 && rest[i] == n - d + i) --i;
        if (i < 0) break;
        ++rest[i];
        for (int j = i + 1; j < d; ++j) rest[j] = rest[j - 1] + 1;
    } while (true);
    return fs;
}

// Random (d-1)-dimensional link complex on the vertices [0, n-1) (the link
// vertex n-1 is avoided); each face is kept independently with probability
// p = 1 - n^{-1/(3d-3)}. SplitMix64 keyed by (seed, face index), so the same
// seed always reproduces the same face set.
inline FaceSet random_even_dim_link(int n, int d, std::uint64_t seed) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("random_even_dim_link: d must be even and >= 4");
    if (n <= d + 2) throw std::invalid_argument("random_even_dim_link: need n > d+2");
    const double p = 1.0 - std::pow(static_cast<double>(n), -1.0 / (3.0 * d - 3.0));
    FaceSet fs(n, d - 1);
    const std::uint64_t total = binom(n - 1, d);  // d-vertex subsets avoiding n-1
    for (std::uint64_t i = 0; i < total; ++i) {
        const std::uint64_t word = splitmix64(seed ^ (0x51ed2701a9b3c1d5ULL + i));
        if (to_unit_double(word) < p) fs.idx.push_back(static_cast<std::uint32_t>(i));
    }
    return fs;
}

inline double random_link_probability(int n, int d) {
    return 1.0 - std::pow(static_cast<double>(n), -1.0 / (3.0 * d - 3.0));
}

}  // namespace hypercut
