#include <catch2/catch_amalgamated.hpp>

#include "mkls/kls.hpp"

using namespace mkls;

TEST_CASE("kl polynomial anchors") {
    KlsEngine u23(Matroid::uniform(2, 3));
    CHECK(u23.kl_poly() == IntPolynomial({1}));
    CHECK(u23.inverse_kl_poly() == IntPolynomial({2}));
    CHECK(u23.z_poly() == IntPolynomial({1, 3, 1}));
    CHECK(u23.inv_z_poly() == IntPolynomial({2, 3, 2}));

    KlsEngine u45(Matroid::uniform(4, 5));
    CHECK(u45.kl_poly() == IntPolynomial({1, 5}));
    KlsEngine u34(Matroid::uniform(3, 4));
    CHECK(u34.inverse_kl_poly() == IntPolynomial({3, 2}));
}

TEST_CASE("boolean matroids are trivial for P and Q") {
    for (int n = 1; n <= 6; ++n) {
        KlsEngine e(Matroid::boolean_(n));
        CHECK(e.kl_poly() == IntPolynomial({1}));
        CHECK(e.inverse_kl_poly() == IntPolynomial({1}));
        // Y of B_n is (1+t)^n
        IntPolynomial expect;
        for (int i = 0; i <= n; ++i) expect.set_coeff(i, binomial(n, i));
        CHECK(e.inv_z_poly() == expect);
    }
}

TEST_CASE("P, Q, Z, Y are multiplicative over direct sums") {
    std::vector<std::pair<Matroid, Matroid>> cases;
    cases.emplace_back(Matroid::uniform(2, 4), Matroid::uniform(2, 3));
    cases.emplace_back(Matroid::uniform(1, 3), Matroid::boolean_(3));
    cases.emplace_back(Matroid::sparse_paving(5, 2, {0b00011}), Matroid::uniform(2, 3));
    for (const auto& [a, b] : cases) {
        KlsEngine ea(a), eb(b), es(Matroid::direct_sum(a, b));
        CHECK(es.kl_poly() == ea.kl_poly() * eb.kl_poly());
        CHECK(es.inverse_kl_poly() == ea.inverse_kl_poly() * eb.inverse_kl_poly());
        CHECK(es.z_poly() == ea.z_poly() * eb.z_poly());
        CHECK(es.inv_z_poly() == ea.inv_z_poly() * eb.inv_z_poly());
    }
}

TEST_CASE("memo cache is transparent") {
    Matroid m = Matroid::sparse_paving(6, 3, {0b000111});
    KlsEngine cached(m, true), raw(m, false);
    CHECK(cached.kl_poly() == raw.kl_poly());
    CHECK(cached.inverse_kl_poly() == raw.inverse_kl_poly());
    CHECK(cached.z_poly() == raw.z_poly());
    CHECK(cached.inv_z_poly() == raw.inv_z_poly());
    // repeated queries return identical values
    CHECK(cached.inv_z_poly() == cached.inv_z_poly());
}

TEST_CASE("degree bounds hold on every interval") {
    Matroid m = Matroid::uniform(3, 6);
    KlsEngine e(m);
    const FlatLattice& lat = e.lattice();
    for (int a = 0; a < lat.size(); ++a)
        for (int b : lat.interval(a, lat.top())) {
            const int r = lat.rank_of_flat(b) - lat.rank_of_flat(a);
            IntPolynomial p = e.P(a, b), q = e.Q(a, b);
            CHECK(p.coeff(0) == 1);
            if (!p.is_zero() && r > 0) CHECK(2 * p.degree() < r);
            if (!q.is_zero() && r > 0) CHECK(2 * q.degree() < r);
        }
}

TEST_CASE("Z and Y are palindromic of degree rank") {
    for (const auto& m :
         {Matroid::uniform(3, 7), Matroid::sparse_paving(7, 3, {0b0000111, 0b1110000}),
          Matroid::qniform(2, 3, 2)}) {
        KlsEngine e(m);
        CHECK(e.z_poly().is_palindromic(m.rank()));
        CHECK(e.inv_z_poly().is_palindromic(m.rank()));
        CHECK(e.inv_z_poly().all_nonneg());
    }
}

TEST_CASE("projective plane truncation oracle") {
    // rank-2 truncation of PG(2,2): 7 points in a line-free rank-2 matroid,
    // i.e. U_{2,7}; Y = [6,7,6]
    KlsEngine e(Matroid::qniform(2, 3, 2));
    CHECK(e.inv_z_poly() == IntPolynomial({6, 7, 6}));
    KlsEngine u27(Matroid::uniform(2, 7));
    CHECK(e.inv_z_poly() == u27.inv_z_poly());
}
