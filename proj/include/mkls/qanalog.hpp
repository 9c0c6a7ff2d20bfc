#pragma once

#include <stdexcept>

#include "mkls/common.hpp"
#include "mkls/partition.hpp"

namespace mkls {

// Evaluation point for q-analogs. Any q >= 2 is allowed for polynomial
// evaluation; matroid realizations additionally require q prime. q = 1 is
// permitted only through the explicit degeneration helpers below.
struct QContext {
    int q;
    explicit QContext(int q_) : q(q_) {
        if (q < 2) throw std::invalid_argument("QContext: q must be >= 2");
    }
};

inline Int q_integer(int m, int q) {
    Int r = 0, pw = 1;
    for (int i = 0; i < m; ++i) {
        r += pw;
        pw *= q;
    }
    return r;
}

inline Int q_factorial(int m, int q) {
    Int r = 1;
    for (int i = 1; i <= m; ++i) r *= q_integer(i, q);
    return r;
}

// Gaussian binomial [n k]_q, 0 outside 0 <= k <= n. At q = 1 this degenerates
// to the ordinary binomial coefficient.
inline Int gauss_binom(int n, int k, int q) {
    if (k < 0 || k > n || n < 0) return 0;
    Int num = q_factorial(n, q);
    return num / (q_factorial(k, q) * q_factorial(n - k, q));
}

inline Int gauss_binom(int n, int k, const QContext& ctx) {
    return gauss_binom(n, k, ctx.q);
}

inline Int q_factorial(int m, const QContext& ctx) { return q_factorial(m, ctx.q); }

// Dimension of the irreducible unipotent representation V_la(q) of
// GL_{|la|}(F_q): the principal-specialization hook formula
// q^{n(la)} [m]_q! / prod_cells [hook]_q. The two hook-shape cases are pinned
// against closed forms in the tests; use on non-hook shapes is an
// extrapolation beyond those anchors and is flagged as such in reports.
inline Int unipotent_dim(const Partition& la, const QContext& ctx) {
    Int num = q_factorial(la.size(), ctx.q);
    for (int h : hook_lengths(la)) {
        Int d = q_integer(h, ctx.q);
        if (num % d != 0)
            throw std::logic_error("unipotent_dim: non-exact division");
        num /= d;
    }
    Int pw = 1;
    for (int i = 0; i < n_stat(la); ++i) pw *= ctx.q;
    return pw * num;
}

}  // namespace mkls
