#include <catch2/catch_amalgamated.hpp>

#include "mkls/checks.hpp"
#include "mkls/json_io.hpp"
#include "mkls/kls.hpp"

using namespace mkls;

TEST_CASE("uniform Y closed form at small parameters") {
    GradedRep y = equiv_Y_uniform(2, 3);
    CHECK(y.degree() == 2);
    CHECK(y.coeff(0) == SchurVector::schur(Partition({2, 1})));
    SchurVector mid = SchurVector::schur(Partition({2, 1})) + SchurVector::schur(Partition({3}));
    CHECK(y.coeff(1) == mid);
    CHECK(y.coeff(2) == y.coeff(0));
    CHECK(dimension_poly(y) == IntPolynomial({2, 3, 2}));
}

TEST_CASE("the three uniform Y routes agree beyond the sweep defaults") {
    for (int n = 10; n <= 11; ++n)
        for (int k : {1, n / 2, n}) {
            GradedRep a = equiv_Y_uniform(k, n);
            CHECK(a == equiv_Y_uniform_irreducible(k, n));
            CHECK(a == equiv_Y_uniform_via_definition(k, n));
        }
}

TEST_CASE("uniform Q closed form matches the lattice oracle dimensions") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            KlsEngine e(Matroid::uniform(k, n));
            CHECK(dimension_poly(equiv_Q_uniform(k, n)) == e.inverse_kl_poly());
        }
}

TEST_CASE("equivariant mobius dimensions match the lattice mobius invariant") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            FlatLattice lat(Matroid::uniform(k, n));
            CHECK(sv_dimension(equiv_mobius_uniform(k, n)) ==
                  lat.mobius(lat.bottom(), lat.top()));
        }
}

TEST_CASE("paving delta for odd rank is the whole uniform Y") {
    CHECK(paving_delta(3, 4) == equiv_Y_uniform(3, 4));
    CHECK(paving_delta(5, 8) == equiv_Y_uniform(5, 8));
    CHECK(!(paving_delta(4, 6) == equiv_Y_uniform(4, 6)));
}

TEST_CASE("relaxation identity spot checks") {
    CHECK(relaxation_identity_check(2, 2).pass);
    CHECK(relaxation_identity_check(3, 5).pass);
    CHECK(relaxation_identity_check(4, 4).pass);
}

TEST_CASE("q-niform dimensions against the projective lattice oracle") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k) {
            KlsEngine e(Matroid::qniform(k, n, 2));
            CHECK(ordinary_Y_qniform(k, n, 2) == e.inv_z_poly());
            CHECK(qdimension_poly(equiv_Y_qniform(k, n), QContext(2)) == e.inv_z_poly());
        }
    CHECK(ordinary_Y_qniform(1, 5, 3) == IntPolynomial({1, 1}));
}

TEST_CASE("equivariant characteristic polynomial of the q-niform matroid") {
    // q-dimensions reproduce the characteristic polynomial of the truncation
    for (int q : {2, 3})
        for (int n = 2; n <= 3; ++n)
            for (int k = 1; k <= n; ++k) {
                GradedRep h = equiv_char_qniform(k, n);
                CHECK(qdimension_poly(h, QContext(q)) ==
                      char_poly(Matroid::qniform(k, n, q)));
            }
}

TEST_CASE("paving formula on a profile with two hyperplane sizes") {
    // hyperplanes {0,1,2} (size 3) and {3,4,5,6} (size 4) in a rank-3 matroid on 8
    Matroid m = Matroid::paving_from_hyperplanes(8, 3, {0b00000111, 0b01111000});
    PavingProfile prof = paving_profile(m);
    const std::map<int, int> expect{{3, 1}, {4, 1}};
    CHECK(prof.lambda == expect);
    KlsEngine e(m);
    CHECK(ordinary_paving_Y(prof) == e.inv_z_poly());
}

TEST_CASE("theorem report merging") {
    TheoremReport a{"x", "p"};
    TheoremReport b{"x", "q"};
    b.fail("w1");
    a.merge(b);
    CHECK(!a.pass);
    REQUIRE(a.witnesses.size() == 1);
    CHECK(a.witnesses[0] == "w1");
}

TEST_CASE("verification sweeps are deterministic in their seed") {
    CheckOptions o1, o2;
    o1.seed = o2.seed = 99;
    o1.count = o2.count = 25;
    TheoremReport a = run_check("conj1.2-dim", o1), b = run_check("conj1.2-dim", o2);
    CHECK(a.pass == b.pass);
    CHECK(a.witnesses == b.witnesses);
    CHECK_THROWS_AS(run_check("nope"), std::invalid_argument);
}

TEST_CASE("json round trips") {
    Partition la({4, 2, 1});
    CHECK(partition_from_json(partition_to_json(la)) == la);

    SchurVector v = SchurVector::schur(la, 5) - SchurVector::schur(Partition({7}), 2);
    CHECK(schur_vector_from_json(schur_vector_to_json(v)) == v);

    IntPolynomial p({3, 0, -2, 7});
    CHECK(poly_from_json(poly_to_json(p)) == p);

    GradedRep f = equiv_Y_uniform(3, 5);
    CHECK(graded_rep_from_json(graded_rep_to_json(f)) == f);
    GradedRep g = equiv_Y_qniform(2, 4);
    CHECK(graded_rep_from_json(graded_rep_to_json(g)) == g);

    for (const auto& m :
         {Matroid::uniform(2, 5), Matroid::boolean_(3), Matroid::qniform(2, 3, 2),
          Matroid::sparse_paving(6, 3, {0b000111}),
          Matroid::paving_from_hyperplanes(7, 3, {0b0001111}),
          Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::boolean_(2)),
          Matroid::from_bases(3, 2, {0b011, 0b101, 0b110}),
          Matroid::linear(3, 2, {{1, 0}, {0, 1}, {1, 1}})}) {
        Matroid back = matroid_from_json(matroid_to_json(m));
        CHECK(back.kind() == m.kind());
        CHECK(back.ground_size() == m.ground_size());
        CHECK(back.rank() == m.rank());
        CHECK(back.bases() == m.bases());
    }
}

TEST_CASE("big integers survive json") {
    Int big = factorial(40);
    json j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    CHECK(int_from_json(int_to_json(Int(-17))) == -17);
}
