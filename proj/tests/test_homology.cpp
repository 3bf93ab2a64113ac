#include <catch2/catch_amalgamated.hpp>

#include "hypercut/arithmetic_complex.hpp"
#include "hypercut/collapsible_complex.hpp"
#include "hypercut/homology.hpp"
#include "oracles.hpp"

using namespace hypercut;

namespace {

LinkGraph random_link_graph(oracle::Rng& rng, int n, Vertex center, double density = 0.5) {
    LinkGraph g(n, center);
    for (Vertex a = 0; a < n; ++a) {
        if (a == center) continue;
        for (Vertex b = a + 1; b < n; ++b) {
            if (b == center) continue;
            if (oracle::Rng{rng.next()}.next() % 1000 < density * 1000) g.add_edge(a, b);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("face_rank basics") {
    REQUIRE(face_rank(complete_faces(6, 2), Field::Q) == 10);
    const FaceSet x11 = arithmetic_complex(11);
    REQUIRE(face_rank(x11, Field::Q) == 44);
    REQUIRE(x11.size() == 44);
    REQUIRE(face_rank(FaceSet(6, 2), Field::Q) == 0);
}

TEST_CASE("acyclicity") {
    REQUIRE(is_acyclic(star_hypertree(6, 2), Field::F2));
    REQUIRE(is_acyclic(star_hypertree(6, 2), Field::Q));
    REQUIRE(!is_acyclic(complete_faces(4, 2), Field::Q));  // tetrahedron boundary
    REQUIRE(is_acyclic(arithmetic_complex(13), Field::F2));
}

TEST_CASE("shadow of X_11: empty over Q, nonempty over F2") {
    const FaceSet x11 = arithmetic_complex(11);
    REQUIRE(shadow(x11, Field::Q).empty());
    REQUIRE(!shadow(x11, Field::F2).empty());
    REQUIRE(shadow(FaceSet(6, 2), Field::Q).empty());
    REQUIRE(shadow(FaceSet(6, 2), Field::F2).empty());
}

TEST_CASE("shadow is disjoint from its set and closure is closed") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.uniform(5, 7);
        FaceSet fs(n, 2);
        for (std::uint32_t i = 0; i < binom(n, 3); ++i)
            if (rng.uniform(0, 3) == 0) fs.idx.push_back(i);
        for (Field f : {Field::F2, Field::Q}) {
            const FaceSet sh = shadow(fs, f);
            for (std::uint32_t i : sh.idx) REQUIRE(!fs.contains_index(i));
            FaceSet closure = fs;
            for (std::uint32_t i : sh.idx) closure.insert_index(i);
            REQUIRE(shadow(closure, f).empty());
        }
    }
}

TEST_CASE("a hypertree spans everything") {
    for (Field f : {Field::F2, Field::Q}) {
        const FaceSet star = star_hypertree(6, 2);
        REQUIRE(is_hypertree(star, f));
        REQUIRE(shadow(star, f) == complement(star));
    }
    REQUIRE(is_hypertree(star_hypertree(7, 2), Field::Q));
    REQUIRE(is_almost_hypertree(arithmetic_complex(19), Field::Q));
    REQUIRE(!is_hypertree(complete_faces(5, 2), Field::Q));
}

TEST_CASE("coboundary of small generators") {
    FaceSet edge(5, 1);
    edge.insert(Simplex{0, 1});
    const FaceSet c = coboundary_of(edge, 5, 2);
    REQUIRE(c.size() == 3);
    REQUIRE(c.contains(Simplex{0, 1, 2}));
    REQUIRE(c.contains(Simplex{0, 1, 3}));
    REQUIRE(c.contains(Simplex{0, 1, 4}));

    FaceSet path(5, 1);
    path.insert(Simplex{0, 1});
    path.insert(Simplex{1, 2});
    const FaceSet cp = coboundary_of(path, 5, 2);
    REQUIRE(cp.size() == 4);
    REQUIRE(oracle::faceset_to_sets(cp) ==
            oracle::coboundary_naive({{0, 1}, {1, 2}}, 5));

    // a vertex star generates the empty coboundary
    FaceSet star(6, 1);
    for (int v = 1; v < 6; ++v) star.insert(Simplex{0, v});
    REQUIRE(coboundary_of(star, 6, 2).empty());
}

TEST_CASE("coboundary_of matches the naive oracle and is always a coboundary") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform(5, 8);
        std::set<std::set<int>> edges;
        FaceSet gen(n, 1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.coin()) {
                    edges.insert({a, b});
                    gen.insert(Simplex{a, b});
                }
        const FaceSet c = coboundary_of(gen, n, 2);
        REQUIRE(oracle::faceset_to_sets(c) == oracle::coboundary_naive(edges, n));
        REQUIRE(is_coboundary(c));
    }
}

TEST_CASE("is_coboundary") {
    REQUIRE(is_coboundary(complete_faces(6, 2)));  // all (n choose 3) triangles
    REQUIRE(is_coboundary(complete_faces(7, 2)));
    FaceSet single(6, 2);
    single.insert(Simplex{1, 2, 4});
    REQUIRE(!is_coboundary(single));
    REQUIRE(is_coboundary(FaceSet(6, 2)));
}

TEST_CASE("link graph of a coboundary regenerates it at every vertex") {
    oracle::Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform(5, 7);
        const LinkGraph g = random_link_graph(rng, n, n - 1);
        const FaceSet c = coboundary_of(g);
        for (Vertex v = 0; v < n; ++v) {
            const LinkGraph lk = link_graph_of(c, v);
            REQUIRE(coboundary_of(lk) == c);
        }
    }
}

TEST_CASE("edge links of a coboundary follow the degree formula") {
    oracle::Rng rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform(6, 9);
        const LinkGraph g = random_link_graph(rng, n, n - 1);
        const FaceSet c = coboundary_of(g);
        for (const auto& [u, v] : g.edges()) {
            const auto lk = link(c, Simplex{std::min(u, v), std::max(u, v)});
            const long long common = std::popcount(g.adj[u] & g.adj[v]);
            const long long expect = n - g.degree(u) - g.degree(v) + 2 * common;
            REQUIRE(static_cast<long long>(lk.size()) == expect);
        }
    }
}

TEST_CASE("regenerate_link") {
    oracle::Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform(5, 8);
        const LinkGraph g = random_link_graph(rng, n, n - 1);
        const FaceSet c = coboundary_of(g);
        const Vertex from = n - 1;
        const Vertex to = rng.uniform(0, n - 1);
        const LinkGraph re = regenerate_link(c, from, to);
        REQUIRE(coboundary_of(re) == c);
        REQUIRE(re == link_graph_of(c, to));
    }
    // empty coboundary regenerates to the empty graph
    const LinkGraph empty = regenerate_link(FaceSet(6, 2), 5, 2);
    REQUIRE(empty.edge_count() == 0);
    // non-coboundary input is rejected
    FaceSet bad(6, 2);
    bad.insert(Simplex{0, 1, 2});
    REQUIRE_THROWS_AS(regenerate_link(bad, 5, 2), std::invalid_argument);
}

TEST_CASE("lambda connectivity of graphs") {
    LinkGraph path(4, 3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    REQUIRE(lambda_connected_graph(path));

    LinkGraph triangle(4, 3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    REQUIRE(lambda_classes(triangle) == 3);
    REQUIRE(!lambda_connected_graph(triangle));

    LinkGraph star(6, 5);
    for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    REQUIRE(lambda_connected_graph(star));

    LinkGraph empty(4, 3);
    REQUIRE(!lambda_connected_graph(empty));
    LinkGraph single(4, 3);
    single.add_edge(0, 2);
    REQUIRE(lambda_connected_graph(single));
}

TEST_CASE("hypercut predicates on small instances") {
    const FaceSet x11 = arithmetic_complex(11);
    const FaceSet cut = complement(x11);
    REQUIRE(cut.size() == binom(11, 3) - binom(10, 2) + 1);  // 121
    REQUIRE(cut.size() == 121);
    REQUIRE(is_hypercut(cut, Field::Q));
    REQUIRE(is_perfect_hypercut(cut, Field::Q));

    REQUIRE(!is_hypercut(complete_faces(6, 2), Field::F2));
    REQUIRE(!is_hypercut(FaceSet(6, 2), Field::F2));

    // coboundary of a single edge is a hypercut; cross-checked below by
    // brute-force minimality over all 64 coboundaries at n=5
    FaceSet edge(5, 1);
    edge.insert(Simplex{0, 1});
    const FaceSet c = coboundary_of(edge, 5, 2);
    REQUIRE(is_hypercut(c, Field::F2));
    REQUIRE(is_hypercut_via_links(c));
    REQUIRE(!is_hypercut_via_links(FaceSet(5, 2)));
    FaceSet notacob(6, 2);
    notacob.insert(Simplex{0, 1, 2});
    REQUIRE_THROWS_AS(is_hypercut_via_links(notacob), std::invalid_argument);
}

TEST_CASE("complement of X_13: perfect over Q, not over F2") {
    const FaceSet x13 = arithmetic_complex(13);
    const FaceSet cut = complement(x13);
    REQUIRE(is_perfect_hypercut(cut, Field::Q));
    REQUIRE(!is_perfect_hypercut(cut, Field::F2));
}

TEST_CASE("generalized lambda connectivity specializes to graphs at d=2") {
    oracle::Rng rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform(4, 8);
        const LinkGraph g = random_link_graph(rng, n, n - 1, 0.4);
        FaceSet edges(n, 1);
        for (const auto& [a, b] : g.edges()) edges.insert(Simplex{a, b});
        REQUIRE(lambda_connected_complex(edges) == lambda_connected_graph(g));
        if (!edges.empty()) REQUIRE(lambda_classes_complex(edges) == lambda_classes(g));
    }
}

TEST_CASE("full lower skeleton is never lambda-connected") {
    for (int n : {5, 6, 7}) {
        const FaceSet full = complete_faces(n, 2);  // d-1 = 2, i.e. d = 3
        REQUIRE(!lambda_connected_complex(full));
        REQUIRE(lambda_classes_complex(full) == full.size());
    }
    FaceSet one(6, 2);
    one.insert(Simplex{0, 1, 2});
    REQUIRE(lambda_connected_complex(one));
}

TEST_CASE("hypercut_from_lambda_link at d=2") {
    FaceSet path(6, 1);
    path.insert(Simplex{0, 1});
    path.insert(Simplex{1, 2});
    const FaceSet c = hypercut_from_lambda_link(path, 5);
    REQUIRE(is_hypercut(c, Field::F2));
    REQUIRE(is_hypercut_via_links(c));

    FaceSet triangle(6, 1);
    triangle.insert(Simplex{0, 1});
    triangle.insert(Simplex{1, 2});
    triangle.insert(Simplex{0, 2});
    REQUIRE_THROWS_AS(hypercut_from_lambda_link(triangle, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(hypercut_from_lambda_link(path, 1), std::invalid_argument);
}

TEST_CASE("cut size formula") {
    {
        LinkGraph g(5, 4);
        g.add_edge(0, 1);
        REQUIRE(cut_size_formula(CutProfile::of(g), 5) == 3);
        REQUIRE(static_cast<long long>(coboundary_of(g).size()) == 3);
    }
    {
        LinkGraph g(6, 5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        REQUIRE(cut_size_formula(CutProfile::of(g), 6) == 10);  // 3n - 8
        REQUIRE(static_cast<long long>(coboundary_of(g).size()) == 10);
    }
    oracle::Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform(5, 12);
        const LinkGraph g = random_link_graph(rng, n, n - 1);
        REQUIRE(cut_size_formula(CutProfile::of(g), n) ==
                static_cast<long long>(coboundary_of(g).size()));
    }
}
