#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mkls/graded_rep.hpp"
#include "mkls/matroid.hpp"

namespace mkls {

// Outcome of a single closed-form identity check; a failed check always
// carries at least one witness describing the offending parameters.
struct TheoremReport {
    std::string theorem_id;
    std::string params;
    bool pass = true;
    std::vector<std::string> witnesses;

    void fail(std::string witness) {
        pass = false;
        witnesses.push_back(std::move(witness));
    }
    void merge(const TheoremReport& o) {
        if (!o.pass) {
            pass = false;
            for (const auto& w : o.witnesses) witnesses.push_back(w);
        }
    }
};

namespace detail {
inline void require_kn(int k, int n) {
    if (!(n >= k && k >= 1)) throw std::invalid_argument("formulas: need n >= k >= 1");
}
}  // namespace detail

// Hook shape (a, 1^c); zero when degenerate.
inline SchurVector hook_sv(int a, int c, Int coeff = 1) {
    return SchurVector::schur_shape(ShapeExpr{a, 0, c}, std::move(coeff));
}

// Three-block shape (a, 2^b, 1^c); zero when degenerate.
inline SchurVector block_sv(int a, int b, int c, Int coeff = 1) {
    return SchurVector::schur_shape(ShapeExpr{a, b, c}, std::move(coeff));
}

// Equivariant Mobius invariant of U_{k,n}: (-1)^k s_(n-k+1, 1^{k-1}).
inline SchurVector equiv_mobius_uniform(int k, int n) {
    detail::require_kn(k, n);
    return hook_sv(n - k + 1, k - 1, (k % 2 == 0) ? Int(1) : Int(-1));
}

// Equivariant inverse KL polynomial of U_{k,n}:
// sum_{i=0}^{floor((k-1)/2)} s_(n-k+1, 2^i, 1^{k-2i-1}) t^i.
inline GradedRep equiv_Q_uniform(int k, int n) {
    detail::require_kn(k, n);
    GradedRep q(n);
    for (int i = 0; 2 * i <= k - 1; ++i) q.add(i, block_sv(n - k + 1, i, k - 2 * i - 1));
    return q;
}

// Equivariant inverse Z-polynomial of U_{k,n}: the induced-product form with
// coefficient lr(s_(1^i), s_(n-k+1,1^{k-i-1})) at t^i and, mirrored, t^{k-i}.
inline GradedRep equiv_Y_uniform(int k, int n) {
    detail::require_kn(k, n);
    GradedRep y(n);
    for (int i = 0; 2 * i <= k; ++i) {
        SchurVector c = lr_product(SchurVector::schur(column_shape(i)),
                                   hook_sv(n - k + 1, k - i - 1));
        y.add(i, c);
        if (2 * i <= k - 1) y.add(k - i, c);
    }
    return y;
}

// Same polynomial with coefficients fully decomposed into irreducibles:
// [t^i] = sum_{x=0}^{i} s_(n-k+1,2^x,1^{k-2x-1}) + s_(n-k+2,2^{x-1},1^{k-2x}).
inline GradedRep equiv_Y_uniform_irreducible(int k, int n) {
    detail::require_kn(k, n);
    GradedRep y(n);
    for (int i = 0; 2 * i <= k; ++i) {
        SchurVector c;
        for (int x = 0; x <= i; ++x) {
            c += block_sv(n - k + 1, x, k - 2 * x - 1);
            c += block_sv(n - k + 2, x - 1, k - 2 * x);
        }
        y.add(i, c);
        if (2 * i <= k - 1) y.add(k - i, c);
    }
    return y;
}

// The definitional flat-orbit expansion: rank-i flats contribute
// lr(s_(1^i), mobius-shape of U_{k-i,n-i}) at t^{k-i}, plus Q of the top flat;
// the signs cancel so every term enters positively. The low half below k/2 is
// then filled in by the degree-k palindromic reflection, exactly as in the
// derivation. This path never consults the two closed forms above.
inline GradedRep equiv_Y_uniform_via_definition(int k, int n) {
    detail::require_kn(k, n);
    GradedRep y = equiv_Q_uniform(k, n);
    for (int i = 0; i <= k - 1; ++i) {
        SchurVector mob = hook_sv((n - i) - (k - i) + 1, (k - i) - 1);
        y.add(k - i, lr_product(SchurVector::schur(column_shape(i)), mob));
    }
    // reflect: coefficients of t^j for j < k/2 are read off from t^{k-j}
    GradedRep out(n);
    for (int j = 0; j <= k; ++j)
        out.add(j, 2 * j < k ? y.coeff(k - j) : y.coeff(j));
    return out;
}

// Ordinary inverse Z-polynomial of U_{k,n} via dimensions.
inline IntPolynomial ordinary_Y_uniform(int k, int n) {
    return dimension_poly(equiv_Y_uniform(k, n));
}

// q-niform equivariant inverse Z-polynomial: identical multiplicity vectors,
// unipotent flavor (Comparison Theorem).
inline GradedRep equiv_Y_qniform(int k, int n) {
    return equiv_Y_uniform_irreducible(k, n).with_flavor(Flavor::Unipotent);
}

// Closed Gaussian-binomial form of the ordinary inverse Z-polynomial of the
// q-niform matroid U_{k,n}(q).
inline IntPolynomial ordinary_Y_qniform(int k, int n, int q) {
    detail::require_kn(k, n);
    if (q < 1) throw std::invalid_argument("ordinary_Y_qniform: q must be >= 1");
    IntPolynomial y;
    for (int i = 0; 2 * i <= k; ++i) {
        Int pw = 1;
        const long e = binomial(i, 2).convert_to<long>() + binomial(k - i, 2).convert_to<long>();
        for (long j = 0; j < e; ++j) pw *= q;
        Int c = pw * gauss_binom(n, i, q) * gauss_binom(n - i - 1, k - i - 1, q);
        y.set_coeff(i, y.coeff(i) + c);
        if (2 * i <= k - 1) y.set_coeff(k - i, y.coeff(k - i) + c);
    }
    return y;
}

inline IntPolynomial ordinary_Y_qniform(int k, int n, const QContext& ctx) {
    return ordinary_Y_qniform(k, n, ctx.q);
}

// Single-relaxation delta at the symmetric-group specialization:
// y_{k,h} = Y_{U_{k,h}} - [k even] s_(h-k+2, 2^{k/2-1}) t^{k/2}.
inline GradedRep paving_delta(int k, int h) {
    detail::require_kn(k, h);
    GradedRep d = equiv_Y_uniform(k, h);
    if (k % 2 == 0) {
        GradedRep corr(h);
        corr.add(k / 2, block_sv(h - k + 2, k / 2 - 1, 0));
        d -= corr;
    }
    return d;
}

// Multiply a GradedRep by a scalar integer polynomial in t.
inline GradedRep scalar_poly_mul(const GradedRep& f, const IntPolynomial& p) {
    GradedRep out(f.group_degree(), f.flavor());
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= p.degree(); ++j)
            out.add(i + j, f.coeff(i) * p.coeff(j));
    return out;
}

// Res^{S_{h+1}}_{S_h} Y_{U_{k,h+1}} - (1+t) Y_{U_{k-1,h}} = y_{k,h}.
inline TheoremReport relaxation_identity_check(int k, int h) {
    TheoremReport r{"thm1.5", "k=" + std::to_string(k) + ",h=" + std::to_string(h)};
    if (!(h >= k && k >= 2)) throw std::invalid_argument("relaxation_identity_check: need h >= k >= 2");
    GradedRep lhs = restrict_one(equiv_Y_uniform(k, h + 1)) -
                    scalar_poly_mul(equiv_Y_uniform(k - 1, h), IntPolynomial({1, 1}));
    if (!(lhs == paving_delta(k, h)))
        r.fail("identity fails at " + r.params);
    return r;
}

// Ordinary inverse Z-polynomial of a paving matroid from its profile:
// Y_{U_{k,n}} - sum_h lambda_h (Y_{U_{k,h}} - [k even] dim-correction t^{k/2}).
inline IntPolynomial ordinary_paving_Y(const PavingProfile& prof) {
    const int k = prof.k, n = prof.n;
    IntPolynomial y = ordinary_Y_uniform(k, n);
    for (const auto& [h, lam] : prof.lambda) {
        IntPolynomial d = ordinary_Y_uniform(k, h);
        if (k % 2 == 0) {
            Int num = Int(4) * h * multinomial(h - 1, {k / 2, k / 2 - 1, h - k});
            Int den = Int(2 * h - k) * (2 * h - k + 2);
            if (num % den != 0) throw std::logic_error("ordinary_paving_Y: non-exact division");
            d.set_coeff(k / 2, d.coeff(k / 2) - num / den);
        }
        y -= d * Int(lam);
    }
    return y;
}

// Hook-length dimension identity behind the paving formula:
// dim V_(h-k+2, 2^{k/2-1}) = 4h/((2h-k)(2h-k+2)) * multinomial(h-1; k/2, k/2-1, h-k).
inline TheoremReport hook_dim_identity_check(int k, int h) {
    TheoremReport r{"thm1.6", "k=" + std::to_string(k) + ",h=" + std::to_string(h)};
    if (k % 2 != 0 || !(h >= k && k >= 2))
        throw std::invalid_argument("hook_dim_identity_check: need k even, h >= k >= 2");
    auto shape = normalize_shape(ShapeExpr{h - k + 2, k / 2 - 1, 0});
    if (!shape) {
        r.fail("degenerate shape at " + r.params);
        return r;
    }
    Int lhs = dim_syt(*shape);
    Int num = Int(4) * h * multinomial(h - 1, {k / 2, k / 2 - 1, h - k});
    Int den = Int(2 * h - k) * (2 * h - k + 2);
    if (num % den != 0 || lhs != num / den)
        r.fail("mismatch at " + r.params + ": dim=" + lhs.str());
    return r;
}

// Uniform dominance reduces to honesty of the relaxation delta.
inline TheoremReport uniform_dominance_check(int k, int h) {
    TheoremReport r{"thm1.7", "k=" + std::to_string(k) + ",h=" + std::to_string(h)};
    if (!is_honest(paving_delta(k, h))) r.fail("delta not honest at " + r.params);
    return r;
}

// Equivariant characteristic polynomial of U_{k,n}(q) as unipotent
// multiplicity vectors:
// sum_{i=0}^{k-1} (-1)^i (m_(n-i,1^i) + m_(n-i+1,1^{i-1})) t^{k-i}
//   + (-1)^k m_(n-k+1,1^{k-1}).
inline GradedRep equiv_char_qniform(int k, int n) {
    detail::require_kn(k, n);
    GradedRep h(n, Flavor::Unipotent);
    for (int i = 0; i <= k - 1; ++i) {
        Int sgn = (i % 2 == 0) ? 1 : -1;
        SchurVector c = hook_sv(n - i, i, sgn);
        c += SchurVector::schur_shape(ShapeExpr{n - i + 1, 0, i - 1}, sgn);
        h.add(k - i, c);
    }
    h.add(0, hook_sv(n - k + 1, k - 1, (k % 2 == 0) ? Int(1) : Int(-1)));
    return h;
}

}  // namespace mkls
