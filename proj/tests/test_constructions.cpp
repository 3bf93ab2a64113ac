#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hypercut/arithmetic_complex.hpp"
#include "hypercut/collapse.hpp"
#include "hypercut/collapsible_complex.hpp"
#include "hypercut/extremal_family.hpp"
#include "hypercut/homology.hpp"
#include "oracles.hpp"

using namespace hypercut;

TEST_CASE("artin condition by direct subgroup enumeration") {
    REQUIRE(artin_condition(5));
    REQUIRE(artin_condition(7));
    REQUIRE(artin_condition(11));
    REQUIRE(artin_condition(13));
    REQUIRE(!artin_condition(17));
    REQUIRE(artin_condition(19));
    REQUIRE(artin_condition(23));
    REQUIRE(artin_condition(29));
    REQUIRE(!artin_condition(31));
    REQUIRE_THROWS_AS(artin_condition(9), std::invalid_argument);
    REQUIRE_THROWS_AS(artin_condition(3), std::invalid_argument);
}

TEST_CASE("group index") {
    REQUIRE(group_index(5) == 1);
    REQUIRE(group_index(7) == 1);
    REQUIRE(group_index(17) == 2);
    REQUIRE(group_index(29) == 1);
    REQUIRE(group_index(31) == 3);
}

TEST_CASE("X_n sizes and ranks") {
    REQUIRE(arithmetic_complex(5).size() == 5);
    REQUIRE(arithmetic_complex(11).size() == 44);
    const FaceSet x17 = arithmetic_complex(17);
    REQUIRE(x17.size() == 119);
    REQUIRE(face_rank(x17, Field::Q) == 103);  // 119 - 16*(2-1)
    REQUIRE(boundary_matrix_q(x17).kernel_basis().size() == 16);
}

TEST_CASE("rank formula holds for every prime up to 23") {
    for (int n : {5, 7, 11, 13, 17, 19, 23}) {
        const FaceSet x = arithmetic_complex(n);
        const long long predicted = static_cast<long long>(x.size()) -
                                    static_cast<long long>(n - 1) * (group_index(n) - 1);
        REQUIRE(static_cast<long long>(face_rank(x, Field::Q)) == predicted);
    }
}

TEST_CASE("arithmetic classes partition edges and faces") {
    for (int n : {11, 13}) {
        const ArithClasses cls = arith_classes(n);
        REQUIRE(cls.m == (n - 1) / 2);

        std::set<std::set<int>> edges;
        for (const auto& e_class : cls.e_class) {
            REQUIRE(e_class.size() == static_cast<std::size_t>(n));
            for (const auto& [p, q] : e_class) edges.insert({p, q});
        }
        REQUIRE(edges.size() == binom(n, 2));

        const FaceSet x = arithmetic_complex(n);
        std::set<std::set<int>> faces;
        for (const auto& f_class : cls.f_class)
            for (const auto& t : f_class) {
                faces.insert({t[0], t[1], t[2]});
                REQUIRE(x.contains(make_simplex({t[0], t[1], t[2]})));
            }
        REQUIRE(faces.size() == x.size());

        // omitted difference class is +-2^{m-1} = +-2^{-1}
        const int omitted = cls.pow2.back() * 2 % n == 1 ? cls.pow2.back() : n - cls.pow2.back();
        REQUIRE((2 * omitted) % n == 1);
    }
    REQUIRE_THROWS_AS(arith_classes(17), std::invalid_argument);
}

TEST_CASE("block form of M_X") {
    REQUIRE(block_form_check(5));  // single supercolumn: I+Q over -I
    REQUIRE(block_form_check(11));
    REQUIRE(block_form_check(13));
}

TEST_CASE("certificate") {
    // designed cancellation on an arithmetic face: 2^i + 2^i - 2^{i+1} = 0
    const CertificateVector cert = certificate_vector(11);
    for (int i = 0; i + 1 < 5; ++i) {
        const int a = mod_pow(2, i, 11);
        const Simplex sigma = make_simplex({0, a, 2 * a % 11});
        const Chain bd = boundary_of_simplex(OrientedSimplex(sigma, 1), Field::Q);
        BigInt acc = 0;
        for (const auto& [face, coeff] : bd.terms)
            acc += coeff * cert.u[colex_rank(face.v)];
        REQUIRE(acc == 0);
    }
    REQUIRE(certificate_check(11));
    REQUIRE(certificate_check(29));
    REQUIRE_THROWS_AS(certificate_vector(17), std::invalid_argument);
}

TEST_CASE("star hypertrees") {
    const FaceSet s52 = star_hypertree(5, 2);
    REQUIRE(s52.size() == 6);
    REQUIRE(face_rank(s52, Field::Q) == 6);
    REQUIRE(star_hypertree(6, 3).size() == 10);
    for (Field f : {Field::F2, Field::Q}) {
        REQUIRE(is_hypertree(star_hypertree(7, 2), f));
        REQUIRE(shadow(star_hypertree(6, 2), f) == complement(star_hypertree(6, 2)));
    }
}

TEST_CASE("A_n counts, collapsibility, and empty shadow") {
    REQUIRE(collapsible_shadowless_complex(7).size() == 7);
    REQUIRE(collapsible_shadowless_complex(9).size() == 18);
    const FaceSet a11 = collapsible_shadowless_complex(11);
    REQUIRE(a11.size() == 33);
    for (int n : {7, 9, 11}) {
        const FaceSet a = collapsible_shadowless_complex(n);
        REQUIRE(a.size() == binom(n - 1, 2) - (n + 1));
        REQUIRE(collapse_all(a).collapsed());
        REQUIRE(shadow(a, Field::F2).empty());
        REQUIRE(shadow(a, Field::Q).empty());
    }
    REQUIRE_THROWS_AS(collapsible_shadowless_complex(5), std::invalid_argument);
    REQUIRE_THROWS_AS(collapsible_shadowless_complex(8), std::invalid_argument);
}

TEST_CASE("polygon gadgets") {
    const PolygonGadget edge = polygon_gadget(9, 0, 1);
    REQUIRE(edge.faces.empty());
    REQUIRE(edge.edges.size() == 1);

    const PolygonGadget c04 = polygon_gadget(9, 0, 4);
    std::set<std::set<int>> faces = oracle::faceset_to_sets(c04.faces);
    REQUIRE(faces == std::set<std::set<int>>{{0, 2, 4}, {0, 1, 2}, {2, 3, 4}});

    oracle::Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 7 + 2 * rng.uniform(0, 4);  // odd 7..15
        const int x = rng.uniform(0, n - 1);
        int y = rng.uniform(0, n - 1);
        if (y == x) y = (y + 1) % n;
        const PolygonGadget g = polygon_gadget(n, x, y);
        // vertex walk ascends from the tail in steps of 1 or 3
        REQUIRE(g.boundary_path.size() >= 2);
        REQUIRE(g.boundary_path.front() == g.x);
        REQUIRE(g.boundary_path.back() == g.y);
        for (std::size_t i = 1; i < g.boundary_path.size(); ++i) {
            const int step =
                ((g.boundary_path[i] - g.boundary_path[i - 1]) % n + n) % n;
            REQUIRE((step == 1 || step == 3));
        }
        // gadget faces live in A_n
        const FaceSet a = collapsible_shadowless_complex(n);
        for (std::size_t i = 0; i < g.faces.size(); ++i)
            REQUIRE(a.contains(g.faces.simplex_at(i)));
    }
}

TEST_CASE("delta_sigma is the collapse residue and collapses away") {
    const int n = 9;
    const FaceSet a = collapsible_shadowless_complex(n);
    const FaceSet comp = complement(a);
    for (std::uint32_t f : comp.idx) {
        const Simplex sigma = Simplex(colex_unrank(f, 3));
        const FaceSet delta = delta_sigma(n, sigma);
        REQUIRE(delta.contains(sigma));
        for (std::uint32_t df : delta.idx)
            REQUIRE((df == f || a.contains_index(df)));
        REQUIRE(collapse_all(delta).collapsed());

        FaceSet plus = a;
        plus.insert_index(f);
        REQUIRE(collapse_all(plus).collapsed());
    }
    REQUIRE_THROWS_AS(delta_sigma(9, collapsible_shadowless_complex(9).simplex_at(0)),
                      std::invalid_argument);
}

TEST_CASE("random even-dimensional links") {
    const FaceSet a = random_even_dim_link(16, 4, 12345);
    const FaceSet b = random_even_dim_link(16, 4, 12345);
    REQUIRE(a == b);
    const FaceSet c = random_even_dim_link(16, 4, 54321);
    REQUIRE(!(a == c));
    REQUIRE(a.d == 3);
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(!a.simplex_at(i).contains(15));

    REQUIRE(random_link_probability(16, 4) ==
            Catch::Approx(1.0 - std::pow(16.0, -1.0 / 9.0)).epsilon(1e-12));
    REQUIRE_THROWS_AS(random_even_dim_link(16, 3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(random_even_dim_link(16, 5, 0), std::invalid_argument);
}

TEST_CASE("lambda connectivity rate of random links at n=16") {
    // measured with the fixed generator: 5 of the seeds 0..19 come out
    // Lambda-connected at this size (the asymptotic rate climbs with n)
    int connected = 0;
    for (std::uint64_t s = 0; s < 20; ++s)
        if (lambda_connected_complex(random_even_dim_link(16, 4, s))) ++connected;
    REQUIRE(connected == 5);
}

TEST_CASE("hypercut_from_lambda_link at d=4") {
    // seed 6 is the first Lambda-connected draw at n=12
    const FaceSet k = random_even_dim_link(12, 4, 6);
    REQUIRE(lambda_connected_complex(k));
    const FaceSet c = hypercut_from_lambda_link(k, 11);
    REQUIRE(is_coboundary(c));
    REQUIRE(is_hypercut(c, Field::F2));
    REQUIRE(c.size() > 0);
    REQUIRE(c.size() < binom(12, 5));

    const FaceSet k_bad = random_even_dim_link(12, 4, 0);
    REQUIRE(!lambda_connected_complex(k_bad));
    REQUIRE_THROWS_AS(hypercut_from_lambda_link(k_bad, 11), std::invalid_argument);
}

TEST_CASE("even-dimensional construction yields coboundaries") {
    // d=4 at n=14: C is a coboundary and its link at the construction vertex
    // is the generator
    const FaceSet k = random_even_dim_link(14, 4, 7);
    const FaceSet c = coboundary_of(k, 14, 4);
    REQUIRE(is_coboundary(c));
    const double density = static_cast<double>(c.size()) / static_cast<double>(binom(14, 5));
    REQUIRE(density > 0.0);
    REQUIRE(density < 1.0);
    // sigma containing the link vertex lies in C iff its facet avoiding it is in K
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Simplex s = c.simplex_at(i);
        if (!s.contains(13)) continue;
        std::vector<int> rest;
        for (int v : s.v)
            if (v != 13) rest.push_back(v);
        REQUIRE(k.contains(Simplex(rest)));
    }
}

TEST_CASE("extremal family candidates") {
    for (int n : {9, 10, 11, 12}) {
        const auto family = extremal_link_family(n);
        REQUIRE(!family.empty());
        long long best = -1;
        for (const auto& gbar : family) {
            const long long f = family_f_value(gbar, n);
            const FaceSet cut = coboundary_of(gbar.complement_graph());
            // the cut a candidate generates has size C(n,3) - f
            REQUIRE(static_cast<long long>(cut.size()) ==
                    static_cast<long long>(binom(n, 3)) - f);
            if (is_hypercut_via_links(cut)) {
                if (best < 0 || f < best) best = f;
            }
        }
        const long long expect = (n % 2 == 0) ? (3LL * n * n - 14 * n + 16) / 4
                                              : (3LL * n * n - 16 * n + 25) / 4;
        REQUIRE(best == expect);
    }
    REQUIRE_THROWS_AS(extremal_link_family(7), std::invalid_argument);
}
