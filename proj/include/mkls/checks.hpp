#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mkls/formulas.hpp"
#include "mkls/kls.hpp"
#include "mkls/random_matroid.hpp"

namespace mkls {

struct CheckOptions {
    int n_max = 0;  // 0 = per-check default
    std::uint64_t seed = 1;
    int count = 200;  // instances for the randomized conjecture shadows
};

namespace detail {

inline int nmax_or(const CheckOptions& o, int dflt) { return o.n_max > 0 ? o.n_max : dflt; }

inline std::string kn(int k, int n) {
    return "k=" + std::to_string(k) + ",n=" + std::to_string(n);
}

// Visit every family of 1..max_count pairwise-compatible circuit-hyperplanes
// (k-subsets intersecting in <= k-2 elements), in lexicographic order.
template <typename Fn>
void for_each_ch_family(int n, int k, int max_count, Fn&& fn) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<Bits> subsets;
    for_each_subset_of_size(all, k, [&](Bits s) { subsets.push_back(s); });
    std::vector<Bits> family;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!family.empty()) fn(family);
        if (static_cast<int>(family.size()) == max_count) return;
        for (std::size_t i = start; i < subsets.size(); ++i) {
            bool ok = true;
            for (Bits h : family)
                if (popcount(h & subsets[i]) > k - 2) ok = false;
            if (!ok) continue;
            family.push_back(subsets[i]);
            rec(i + 1);
            family.pop_back();
        }
    };
    rec(0);
}

}  // namespace detail

// Triple agreement of the three routes to the equivariant inverse Z-polynomial
// of uniform matroids.
inline TheoremReport check_thm11(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 9);
    TheoremReport r{"thm1.1", "1<=k<=n<=" + std::to_string(N)};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            GradedRep a = equiv_Y_uniform(k, n);
            if (!(a == equiv_Y_uniform_irreducible(k, n)))
                r.fail("irreducible route differs at " + detail::kn(k, n));
            if (!(a == equiv_Y_uniform_via_definition(k, n)))
                r.fail("definitional route differs at " + detail::kn(k, n));
        }
    return r;
}

inline TheoremReport check_prop32(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 9);
    TheoremReport r{"prop3.2", "1<=k<=n<=" + std::to_string(N)};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            if (!(equiv_Y_uniform(k, n) == equiv_Y_uniform_irreducible(k, n)))
                r.fail("decomposition differs at " + detail::kn(k, n));
    return r;
}

// Equivariant unimodality of the uniform Y, plus the known negative control:
// the graded sequence [s_(5), s_(3,2)] is not equivariantly unimodal.
inline TheoremReport check_thm13(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 12);
    TheoremReport r{"thm1.3", "1<=k<=n<=" + std::to_string(N)};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            if (!is_equivariantly_unimodal(equiv_Y_uniform(k, n)))
                r.fail("not unimodal at " + detail::kn(k, n));
    GradedRep ctrl(5);
    ctrl.add(0, SchurVector::schur(Partition({5})));
    ctrl.add(1, SchurVector::schur(Partition({3, 2})));
    if (is_equivariantly_unimodal(ctrl))
        r.fail("negative control [s_(5), s_(3,2)] reported unimodal");
    return r;
}

inline TheoremReport check_thm14(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 7);
    TheoremReport r{"thm1.4", "1<=k<=n<=" + std::to_string(N)};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            if (!strongly_induced_logconcave(equiv_Y_uniform(k, n)))
                r.fail("not strongly induced log-concave at " + detail::kn(k, n));
    return r;
}

// Relaxation identity, both symbolically and against the lattice oracle on
// M_{k,h} = U_{k-1,h} + B_1.
inline TheoremReport check_thm15(const CheckOptions& o = {}) {
    const int H = detail::nmax_or(o, 8);
    const int Horacle = std::min(H, 7);
    TheoremReport r{"thm1.5", "2<=k<=h<=" + std::to_string(H)};
    for (int h = 2; h <= H; ++h)
        for (int k = 2; k <= h; ++k) r.merge(relaxation_identity_check(k, h));
    for (int h = 2; h <= Horacle; ++h)
        for (int k = 2; k <= h; ++k) {
            Matroid m = Matroid::direct_sum(Matroid::uniform(k - 1, h), Matroid::boolean_(1));
            Bits hyp = (Bits(1) << h) - 1;  // the uniform summand
            Matroid rel = m.relax(hyp);
            KlsEngine e1(m), e2(rel);
            IntPolynomial diff = e2.inv_z_poly() - e1.inv_z_poly();
            if (!(diff == dimension_poly(paving_delta(k, h))))
                r.fail("oracle delta differs at k=" + std::to_string(k) +
                       ",h=" + std::to_string(h));
        }
    return r;
}

// Paving formula vs the lattice oracle: exhaustive sparse-paving families for
// small n, all pairs plus a seeded sample of triples at n = 8, 9, the
// one-large-hyperplane matroids M_{k,h}, and the Catalan specialization.
inline TheoremReport check_thm16(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 9);
    TheoremReport r{"thm1.6", "paving matroids up to n=" + std::to_string(N)};
    auto test_matroid = [&](const Matroid& m, const std::string& what) {
        KlsEngine e(m);
        if (!(ordinary_paving_Y(paving_profile(m)) == e.inv_z_poly()))
            r.fail("formula differs from oracle on " + what);
    };
    const int full_n = std::min(N, 7);
    for (int n = 3; n <= full_n; ++n)
        for (int k = 2; k < n; ++k)
            detail::for_each_ch_family(n, k, 3, [&](const std::vector<Bits>& fam) {
                test_matroid(Matroid::sparse_paving(n, k, fam),
                             "sparse_paving n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                 " count=" + std::to_string(fam.size()));
            });
    std::mt19937_64 rng(o.seed);
    for (int n = 8; n <= N; ++n)
        for (int k = 2; k < n; ++k) {
            detail::for_each_ch_family(n, k, 2, [&](const std::vector<Bits>& fam) {
                test_matroid(Matroid::sparse_paving(n, k, fam),
                             "sparse_paving n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                 " count=" + std::to_string(fam.size()));
            });
            // seeded sample of 3-hyperplane families
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            std::vector<Bits> subsets;
            for_each_subset_of_size(all, k, [&](Bits s) { subsets.push_back(s); });
            std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
            int found = 0, tries = 0;
            while (found < 60 && tries < 4000) {
                ++tries;
                std::vector<Bits> fam{subsets[pick(rng)], subsets[pick(rng)], subsets[pick(rng)]};
                bool ok = true;
                for (int a = 0; a < 3 && ok; ++a)
                    for (int b = a + 1; b < 3 && ok; ++b)
                        if (popcount(fam[a] & fam[b]) > k - 2) ok = false;
                if (!ok) continue;
                ++found;
                test_matroid(Matroid::sparse_paving(n, k, fam),
                             "sampled sparse_paving n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
            }
        }
    for (int h = 2; h <= 7; ++h)
        for (int k = 2; k <= h; ++k)
            test_matroid(Matroid::direct_sum(Matroid::uniform(k - 1, h), Matroid::boolean_(1)),
                         "M_{" + std::to_string(k) + "," + std::to_string(h) + "}");
    // Catalan specialization: for all-size-k profiles the correction term is
    // (1+t)^k - [k even] Catalan(k/2) t^{k/2} per hyperplane.
    for (int k = 2; k <= 6; ++k)
        for (int lam = 1; lam <= 3; ++lam) {
            const int n = 2 * k + 1;
            PavingProfile prof;
            prof.k = k;
            prof.n = n;
            prof.lambda[k] = lam;
            IntPolynomial corr;
            for (int i = 0; i <= k; ++i) corr.set_coeff(i, binomial(k, i));
            if (k % 2 == 0) corr.set_coeff(k / 2, corr.coeff(k / 2) - catalan(k / 2));
            IntPolynomial expected = ordinary_Y_uniform(k, n) - corr * Int(lam);
            if (!(ordinary_paving_Y(prof) == expected))
                r.fail("Catalan specialization differs at k=" + std::to_string(k) +
                       ",lambda=" + std::to_string(lam));
        }
    for (int k = 2; k <= 6; k += 2)
        for (int h = k; h <= 10; ++h) r.merge(hook_dim_identity_check(k, h));
    return r;
}

inline TheoremReport check_thm17(const CheckOptions& o = {}) {
    const int H = detail::nmax_or(o, 9);
    TheoremReport r{"thm1.7", "1<=k<=h<=" + std::to_string(H)};
    for (int h = 1; h <= H; ++h)
        for (int k = 1; k <= h; ++k) r.merge(uniform_dominance_check(k, h));
    return r;
}

inline TheoremReport check_prop21(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 9);
    TheoremReport r{"prop2.1", "uniform n<=" + std::to_string(N) + ", deltas h<=9"};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            if (!is_honest(equiv_Y_uniform(k, n)))
                r.fail("Y not honest at " + detail::kn(k, n));
    for (int h = 1; h <= 9; ++h)
        for (int k = 1; k <= h; ++k)
            if (!is_honest(paving_delta(k, h)))
                r.fail("delta not honest at k=" + std::to_string(k) + ",h=" + std::to_string(h));
    return r;
}

inline TheoremReport check_prop22(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 9);
    TheoremReport r{"prop2.2", "uniform n<=" + std::to_string(N)};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            if (!is_palindromic(equiv_Y_uniform(k, n), k))
                r.fail("Y not palindromic at " + detail::kn(k, n));
    return r;
}

// Schur positivity grid of the quoted product inequalities.
inline TheoremReport check_lem34(const CheckOptions& o = {}) {
    const int M = detail::nmax_or(o, 5);
    TheoremReport r{"lem3.4", "m<=j<=" + std::to_string(M) + ", u,v<=" + std::to_string(M)};
    auto hook_prod = [](int m, int u, int j, int v) {
        return lr_product(SchurVector::schur_shape(ShapeExpr{m, 0, u}),
                          SchurVector::schur_shape(ShapeExpr{j, 0, v}));
    };
    for (int m = 1; m <= M; ++m)
        for (int j = m; j <= M; ++j)
            for (int u = 0; u <= M; ++u)
                for (int v = 0; v <= M; ++v) {
                    std::string at = "m=" + std::to_string(m) + ",j=" + std::to_string(j) +
                                     ",u=" + std::to_string(u) + ",v=" + std::to_string(v);
                    if (u < v &&
                        !schur_geq(hook_prod(m, v - 1, j, u + 1), hook_prod(m, u, j, v)))
                        r.fail("(1) fails at " + at);
                    if (v <= u && !schur_geq(hook_prod(m, v, j, u), hook_prod(m, u, j, v)))
                        r.fail("(2) fails at " + at);
                }
    return r;
}

inline TheoremReport check_lem35(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 9);
    TheoremReport r{"lem3.5", "n<=" + std::to_string(N)};
    auto a = [](int i) { return SchurVector::schur(column_shape(i)); };
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            auto b = [&](int i) {
                return SchurVector::schur_shape(ShapeExpr{n - k + 1, 0, k - i - 1});
            };
            for (int i = 1; 2 * i <= k; ++i)
                if (!schur_geq(lr_product(a(i), b(i)), lr_product(a(i - 1), b(i - 1))))
                    r.fail("(1) fails at " + detail::kn(k, n) + ",i=" + std::to_string(i));
            for (int i = 1; i <= k / 2 - 1; ++i)
                for (int j = i; j <= k / 2 - 1; ++j) {
                    SchurVector lhs = lr_product(lr_product(a(i), a(j)),
                                                 lr_product(b(i), b(j)));
                    SchurVector rhs = lr_product(lr_product(a(i - 1), a(j + 1)),
                                                 lr_product(b(i - 1), b(j + 1)));
                    if (!schur_geq(lhs, rhs))
                        r.fail("(2) fails at " + detail::kn(k, n) + ",i=" + std::to_string(i) +
                               ",j=" + std::to_string(j));
                }
        }
    return r;
}

// Comparison-theorem route: unipotent dimensions of the q-niform Y reproduce
// the lattice oracle on the projective-points model.
inline TheoremReport check_thm38(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 4);
    TheoremReport r{"thm3.8", "n<=" + std::to_string(N) + ", q=2"};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            GradedRep f = equiv_Y_qniform(k, n);
            if (!(f.with_flavor(Flavor::SymmetricGroup) == equiv_Y_uniform_irreducible(k, n)))
                r.fail("multiplicities differ from the symmetric-group case at " +
                       detail::kn(k, n));
            KlsEngine e(Matroid::qniform(k, n, 2));
            if (!(qdimension_poly(f, QContext(2)) == e.inv_z_poly()))
                r.fail("q-dimensions differ from the lattice oracle at " + detail::kn(k, n));
        }
    return r;
}

inline TheoremReport check_prop_qY(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 4);
    TheoremReport r{"prop-qY", "n<=" + std::to_string(N) + " oracle, n<=7 degeneration"};
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            KlsEngine e(Matroid::qniform(k, n, 2));
            if (!(ordinary_Y_qniform(k, n, 2) == e.inv_z_poly()))
                r.fail("closed form differs from oracle at " + detail::kn(k, n) + ",q=2");
        }
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            if (!(ordinary_Y_qniform(k, n, 1) == ordinary_Y_uniform(k, n)))
                r.fail("q->1 degeneration differs at " + detail::kn(k, n));
    return r;
}

inline TheoremReport check_cor311(const CheckOptions& o = {}) {
    const int N = detail::nmax_or(o, 6);
    TheoremReport r{"cor3.11", "n<=" + std::to_string(N) + ", q in {2,3}"};
    for (int q : {2, 3})
        for (int n = 1; n <= N; ++n)
            for (int k = 1; k <= n; ++k)
                if (!ordinary_Y_qniform(k, n, q).strongly_log_concave())
                    r.fail("not strongly log-concave at " + detail::kn(k, n) +
                           ",q=" + std::to_string(q));
    return r;
}

// Conjecture shadows over seeded random sparse paving matroids; failures are
// findings, not implementation bugs, and carry the full matroid parameters.
inline TheoremReport check_conj12_dim(const CheckOptions& o = {}) {
    TheoremReport r{"conj1.2-dim",
                    "seed=" + std::to_string(o.seed) + ", count=" + std::to_string(o.count)};
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.count; ++i) {
        Matroid m = random_sparse_paving(rng, 4, detail::nmax_or(o, 9));
        KlsEngine e(m);
        if (!e.inv_z_poly().unimodal())
            r.fail("counterexample: sparse paving n=" + std::to_string(m.ground_size()) +
                   " k=" + std::to_string(m.rank()) + " instance " + std::to_string(i));
    }
    return r;
}

inline TheoremReport check_conj14_induced(const CheckOptions& o = {}) {
    TheoremReport r{"conj1.4-induced",
                    "seed=" + std::to_string(o.seed) + ", count=" + std::to_string(o.count)};
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.count; ++i) {
        Matroid m = random_sparse_paving(rng, 4, detail::nmax_or(o, 9));
        KlsEngine e(m);
        if (!e.inv_z_poly().strongly_log_concave())
            r.fail("counterexample: sparse paving n=" + std::to_string(m.ground_size()) +
                   " k=" + std::to_string(m.rank()) + " instance " + std::to_string(i));
    }
    return r;
}

inline std::vector<std::string> known_check_ids() {
    return {"thm1.1", "prop3.2", "thm1.3",  "thm1.4",  "thm1.5",      "thm1.6",
            "thm1.7", "prop2.1", "prop2.2", "lem3.4",  "lem3.5",      "thm3.8",
            "prop-qY", "cor3.11", "conj1.2-dim", "conj1.4-induced"};
}

inline TheoremReport run_check(const std::string& id, const CheckOptions& o = {}) {
    if (id == "thm1.1") return check_thm11(o);
    if (id == "prop3.2") return check_prop32(o);
    if (id == "thm1.3") return check_thm13(o);
    if (id == "thm1.4") return check_thm14(o);
    if (id == "thm1.5") return check_thm15(o);
    if (id == "thm1.6") return check_thm16(o);
    if (id == "thm1.7") return check_thm17(o);
    if (id == "prop2.1") return check_prop21(o);
    if (id == "prop2.2") return check_prop22(o);
    if (id == "lem3.4") return check_lem34(o);
    if (id == "lem3.5") return check_lem35(o);
    if (id == "thm3.8") return check_thm38(o);
    if (id == "prop-qY") return check_prop_qY(o);
    if (id == "cor3.11") return check_cor311(o);
    if (id == "conj1.2-dim") return check_conj12_dim(o);
    if (id == "conj1.4-induced") return check_conj14_induced(o);
    throw std::invalid_argument("unknown theorem id: " + id);
}

}  // namespace mkls
