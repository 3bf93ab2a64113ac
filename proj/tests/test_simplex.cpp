#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "hypercut/arithmetic_complex.hpp"
#include "hypercut/collapsible_complex.hpp"
#include "hypercut/io.hpp"
#include "hypercut/simplex.hpp"
#include "oracles.hpp"

using namespace hypercut;

TEST_CASE("colex indexing is a bijection") {
    for (int n : {5, 8, 12}) {
        for (int k : {1, 2, 3, 4}) {
            std::vector<int> v(k);
            for (int i = 0; i < k; ++i) v[i] = i;
            std::uint64_t expect = 0;
            do {
                REQUIRE(colex_rank(v) == expect);
                REQUIRE(colex_unrank(expect, k) == v);
                ++expect;
            } while (next_colex(v, n));
            REQUIRE(expect == binom(n, k));
        }
    }
}

TEST_CASE("boundary of an oriented triangle") {
    const Chain c = boundary_of_simplex(OrientedSimplex(Simplex{0, 1, 2}, 1), Field::Q);
    REQUIRE(c.size() == 3);
    REQUIRE(c.coeff(Simplex{1, 2}) == 1);
    REQUIRE(c.coeff(Simplex{0, 2}) == -1);
    REQUIRE(c.coeff(Simplex{0, 1}) == 1);
}

TEST_CASE("boundary of an edge") {
    const Chain c = boundary_of_simplex(OrientedSimplex(Simplex{0, 1}, 1), Field::Q);
    REQUIRE(c.size() == 2);
    REQUIRE(c.coeff(Simplex{1}) == 1);
    REQUIRE(c.coeff(Simplex{0}) == -1);
}

TEST_CASE("boundary over F2 drops signs") {
    const Chain c = boundary_of_simplex(OrientedSimplex(Simplex{0, 1, 2}, 1), Field::F2);
    REQUIRE(c.size() == 3);
    REQUIRE(c.coeff(Simplex{0, 1}) == 1);
    REQUIRE(c.coeff(Simplex{0, 2}) == 1);
    REQUIRE(c.coeff(Simplex{1, 2}) == 1);
}

TEST_CASE("vertices cannot bound") {
    REQUIRE_THROWS_AS(boundary_of_simplex(OrientedSimplex(Simplex{3}, 1), Field::Q),
                      std::invalid_argument);
}

TEST_CASE("degenerate tuples are rejected") {
    REQUIRE_THROWS_AS(Simplex({2, 1, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(Simplex(std::vector<Vertex>{}), std::invalid_argument);
    REQUIRE_THROWS_AS(OrientedSimplex::from_tuple({1, 2, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(OrientedSimplex(Simplex{0, 1}, 2), std::invalid_argument);
}

TEST_CASE("transposing two vertices flips every boundary coefficient") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = rng.uniform(1, 4);
        std::vector<int> verts;
        while (static_cast<int>(verts.size()) < d + 1) {
            const int v = rng.uniform(0, 11);
            if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
        }
        auto swapped = verts;
        const int i = rng.uniform(0, d), j = (i + 1 + rng.uniform(0, d - 1)) % (d + 1);
        std::swap(swapped[i], swapped[j]);
        const Chain a = boundary_of_simplex(OrientedSimplex::from_tuple(verts), Field::Q);
        const Chain b = boundary_of_simplex(OrientedSimplex::from_tuple(swapped), Field::Q);
        REQUIRE(a.terms.size() == b.terms.size());
        for (const auto& [s, c] : a.terms) REQUIRE(b.coeff(s) == -c);
    }
}

TEST_CASE("complete face counts") {
    REQUIRE(complete_faces(4, 2).size() == 4);
    REQUIRE(complete_faces(6, 2).size() == 20);
    REQUIRE(complete_faces(5, 1).size() == 10);
    REQUIRE_THROWS_AS(complete_faces(3, 3), std::invalid_argument);
}

TEST_CASE("complement is an involution and sizes add up") {
    const FaceSet empty(5, 2);
    REQUIRE(complement(empty).size() == 10);
    oracle::Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform(4, 9);
        const int d = rng.uniform(1, 2);
        FaceSet fs(n, d);
        for (std::uint32_t i = 0; i < binom(n, d + 1); ++i)
            if (rng.coin()) fs.idx.push_back(i);
        const FaceSet comp = complement(fs);
        REQUIRE(fs.size() + comp.size() == binom(n, d + 1));
        REQUIRE(complement(comp) == fs);
    }
}

TEST_CASE("complement of X_5") {
    const FaceSet x5 = arithmetic_complex(5);
    REQUIRE(x5.size() == 5);
    // the five consecutive arithmetic triples
    for (int b = 0; b < 5; ++b)
        REQUIRE(x5.contains(make_simplex({b, (b + 1) % 5, (b + 2) % 5})));
    const FaceSet comp = complement(x5);
    REQUIRE(comp.size() == 5);
    for (std::size_t i = 0; i < comp.size(); ++i) REQUIRE(!x5.contains(comp.simplex_at(i)));
}

TEST_CASE("links") {
    const FaceSet fs = FaceSet::from_simplices(
        4, 2, {Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{1, 2, 3}});
    const FaceSet lk0 = link(fs, Simplex{0});
    REQUIRE(lk0.size() == 2);
    REQUIRE(lk0.contains(Simplex{1, 2}));
    REQUIRE(lk0.contains(Simplex{1, 3}));
    const FaceSet lk01 = link(FaceSet::from_simplices(3, 2, {Simplex{0, 1, 2}}), Simplex{0, 1});
    REQUIRE(lk01.size() == 1);
    REQUIRE(lk01.contains(Simplex{2}));
}

TEST_CASE("complex file format round trip with comments and errors") {
    const FaceSet x7 = arithmetic_complex(7);
    std::ostringstream out;
    write_complex(x7, out);
    std::istringstream in("# generated\n" + out.str());
    REQUIRE(read_complex(in) == x7);

    std::istringstream bad1("5 2\n0 1\n");
    REQUIRE_THROWS_AS(read_complex(bad1), ParseError);
    std::istringstream bad2("5 2\n0 1 9\n");
    REQUIRE_THROWS_AS(read_complex(bad2), ParseError);
    std::istringstream bad3("5 2\n2 1 0\n");
    REQUIRE_THROWS_AS(read_complex(bad3), ParseError);
    std::istringstream bad4("nope\n");
    REQUIRE_THROWS_AS(read_complex(bad4), ParseError);
    try {
        std::istringstream bad5("5 2\n0 1 2\nx y z\n");
        read_complex(bad5);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line == 3);
    }
}

TEST_CASE("every generator's output re-parses identically") {
    const FaceSet sets[] = {arithmetic_complex(11), collapsible_shadowless_complex(9),
                            star_hypertree(6, 2), random_even_dim_link(12, 4, 3)};
    for (const FaceSet& fs : sets) {
        std::ostringstream out;
        write_complex(fs, out);
        std::istringstream in(out.str());
        REQUIRE(read_complex(in) == fs);
    }
}

TEST_CASE("canonical writer is byte stable under input order") {
    FaceSet a = FaceSet::from_simplices(5, 2, {Simplex{0, 1, 2}, Simplex{1, 2, 4}});
    FaceSet b = FaceSet::from_simplices(5, 2, {Simplex{1, 2, 4}, Simplex{0, 1, 2}});
    std::ostringstream sa, sb;
    write_complex(a, sa);
    write_complex(b, sb);
    REQUIRE(sa.str() == sb.str());
}
