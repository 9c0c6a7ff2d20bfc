#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "mkls/flat_lattice.hpp"
#include "mkls/random_matroid.hpp"

using namespace mkls;

TEST_CASE("rank axioms hold on random subset pairs") {
    std::vector<Matroid> ms = {
        Matroid::uniform(3, 6),
        Matroid::boolean_(5),
        Matroid::sparse_paving(6, 3, {0b000111, 0b111000}),
        Matroid::direct_sum(Matroid::uniform(2, 4), Matroid::uniform(1, 3)),
        Matroid::qniform(2, 3, 2),
    };
    std::mt19937_64 rng(3);
    for (const auto& m : ms) {
        std::uniform_int_distribution<Bits> sd(0, m.full_set());
        for (int trial = 0; trial < 500; ++trial) {
            Bits a = sd(rng), b = sd(rng);
            int ra = m.rank_of(a), rb = m.rank_of(b);
            CHECK(ra >= 0);
            CHECK(ra <= popcount(a));
            if ((a & ~b) == 0) CHECK(ra <= rb);  // monotone
            CHECK(m.rank_of(a | b) + m.rank_of(a & b) <= ra + rb);  // submodular
        }
    }
}

TEST_CASE("closure is idempotent, extensive, and rank-preserving") {
    Matroid m = Matroid::sparse_paving(6, 3, {0b000111});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Bits> sd(0, m.full_set());
    for (int trial = 0; trial < 200; ++trial) {
        Bits a = sd(rng);
        Bits cl = m.closure(a);
        CHECK((a & ~cl) == 0);
        CHECK(m.closure(cl) == cl);
        CHECK(m.rank_of(cl) == m.rank_of(a));
    }
}

TEST_CASE("basis counts") {
    CHECK(Matroid::uniform(3, 6).bases().size() == 20);
    CHECK(Matroid::boolean_(4).bases().size() == 1);
    CHECK(Matroid::sparse_paving(6, 3, {0b000111, 0b111000}).bases().size() == 18);
    // PG(1,2) has 3 points, rank 2: all pairs are bases
    CHECK(Matroid::qniform(2, 2, 2).bases().size() == 3);
}

TEST_CASE("invalid constructions are rejected") {
    CHECK_THROWS_AS(Matroid::sparse_paving(6, 3, {0b000111, 0b001110}),
                    std::invalid_argument);  // circuit-hyperplanes too close
    CHECK_THROWS_AS(Matroid::sparse_paving(6, 3, {0b0011}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::paving_from_hyperplanes(6, 3, {0b11}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::from_bases(4, 2, {0b0011, 0b1100}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::linear(4, 2, {{1, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::linear(2, 2, {{0, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::linear(3, 2, {{1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::uniform(5, 3), std::invalid_argument);
}

TEST_CASE("flat lattice of small matroids") {
    FlatLattice u23(Matroid::uniform(2, 3));
    CHECK(u23.size() == 5);  // empty, three points, top
    CHECK(u23.rank() == 2);

    FlatLattice b3(Matroid::boolean_(3));
    CHECK(b3.size() == 8);

    FlatLattice u24(Matroid::uniform(2, 4));
    CHECK(u24.size() == 6);

    // PG(2,2) truncated to rank 2: 7 points and the full plane
    FlatLattice q(Matroid::qniform(2, 3, 2));
    CHECK(q.size() == 9);
}

TEST_CASE("mobius function anchors") {
    FlatLattice u23(Matroid::uniform(2, 3));
    CHECK(u23.mobius(u23.bottom(), u23.bottom()) == 1);
    CHECK(u23.mobius(u23.bottom(), u23.top()) == 2);
    FlatLattice b4(Matroid::boolean_(4));
    CHECK(b4.mobius(b4.bottom(), b4.top()) == 1);  // (-1)^4
    FlatLattice u25(Matroid::uniform(2, 5));
    CHECK(u25.mobius(u25.bottom(), u25.top()) == 4);
}

TEST_CASE("mobius alternates in sign with rank") {
    for (const auto& m : {Matroid::uniform(3, 6), Matroid::sparse_paving(7, 3, {0b0000111})}) {
        FlatLattice lat(m);
        for (int h = 0; h < lat.size(); ++h) {
            Int mu = lat.mobius(lat.bottom(), h);
            const int r = lat.rank_of_flat(h);
            if (r % 2 == 0) CHECK(mu > 0);
            else CHECK(mu < 0);
        }
    }
}

TEST_CASE("characteristic polynomial anchors and direct-sum multiplicativity") {
    CHECK(char_poly(Matroid::uniform(2, 3)) == IntPolynomial({2, -3, 1}));
    CHECK(char_poly(Matroid::boolean_(3)) == IntPolynomial({-1, 3, -3, 1}));
    Matroid a = Matroid::uniform(2, 4), b = Matroid::uniform(1, 3);
    CHECK(char_poly(Matroid::direct_sum(a, b)) == char_poly(a) * char_poly(b));
    // loops kill the characteristic polynomial
    CHECK(char_poly(Matroid::direct_sum(Matroid::uniform(0, 1), Matroid::boolean_(2)))
              .is_zero());
}

TEST_CASE("uniform minors are boolean restrictions and uniform contractions") {
    Matroid u = Matroid::uniform(3, 6);
    Bits f = 0b000011;  // a rank-2 flat
    CHECK(isomorphic(u.restrict_to(f), Matroid::boolean_(2)));
    CHECK(isomorphic(u.contract(f), Matroid::uniform(1, 4)));
}

TEST_CASE("stressed hyperplanes and relaxation") {
    Matroid m = Matroid::sparse_paving(6, 3, {0b000111, 0b111000});
    CHECK(m.is_stressed_hyperplane(0b000111));
    CHECK(!m.is_stressed_hyperplane(0b001111));
    Matroid r = m.relax(0b000111);
    CHECK(r.bases().size() == 19);
    Matroid r2 = r.relax(0b111000);
    CHECK(isomorphic(r2, Matroid::uniform(3, 6)));
    CHECK_THROWS_AS(m.relax(0b001111), std::invalid_argument);
}

TEST_CASE("paving detection and profiles") {
    Matroid sp = Matroid::sparse_paving(6, 3, {0b000111});
    CHECK(sp.is_paving());
    PavingProfile prof = paving_profile(sp);
    CHECK(prof.k == 3);
    CHECK(prof.n == 6);
    const std::map<int, int> expect_sp{{3, 1}};
    CHECK(prof.lambda == expect_sp);

    Matroid mkh = Matroid::direct_sum(Matroid::uniform(2, 5), Matroid::boolean_(1));
    PavingProfile p2 = paving_profile(mkh);
    CHECK(p2.k == 3);
    const std::map<int, int> expect_mkh{{5, 1}};
    CHECK(p2.lambda == expect_mkh);

    Matroid not_paving = Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3));
    Bits witness = 0;
    CHECK(!not_paving.is_paving(&witness));
    CHECK(popcount(witness) == 2);  // the 2-circuit inside the U_{1,2} part
    CHECK_THROWS_AS(paving_profile(not_paving), std::invalid_argument);
}

TEST_CASE("qniform matroids match their defining truncations") {
    CHECK(Matroid::qniform(2, 2, 2).ground_size() == 3);
    CHECK(Matroid::qniform(2, 3, 2).ground_size() == 7);
    CHECK(Matroid::qniform(3, 3, 2).ground_size() == 7);
    CHECK(Matroid::qniform(2, 2, 3).ground_size() == 4);
    // rank-2 truncation on 3 points over F_2 is U_{2,3}
    CHECK(isomorphic(Matroid::qniform(2, 2, 2), Matroid::uniform(2, 3)));
    // U_{2,2}(3): 4 points, rank 2, every pair a basis
    CHECK(isomorphic(Matroid::qniform(2, 2, 3), Matroid::uniform(2, 4)));
    // full-rank PG(2,2) is the Fano matroid: 7 points, 28 bases
    CHECK(Matroid::qniform(3, 3, 2).bases().size() == 28);
}

TEST_CASE("random sparse paving generation is valid and reproducible") {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        Matroid ma = random_sparse_paving(a, 4, 9);
        Matroid mb = random_sparse_paving(b, 4, 9);
        CHECK(ma.ground_size() == mb.ground_size());
        CHECK(ma.rank() == mb.rank());
        CHECK(ma.listed_hyperplanes() == mb.listed_hyperplanes());
        CHECK(ma.is_paving());
    }
}
