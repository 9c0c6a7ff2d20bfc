#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "mkls/flat_lattice.hpp"

namespace mkls {

// Kazhdan-Lusztig-Stanley invariants computed from the lattice of flats.
//
// P on an interval [a, b] of rank r is the unique polynomial with constant
// term 1 and degree < r/2 satisfying
//     t^r P(1/t) - P(t) = sum over flats F, a < F <= b, of
//                         chi([a, F]) * P([F, b]).
// Only the low coefficients are forced by this identity; the high half is an
// overdetermined consistency condition which this engine re-checks on every
// interval and turns into a hard error on failure.
//
// Q is defined by inverting P in the incidence algebra with a sign twist:
//     sum over F in [a, b] of (-1)^{rk F - rk a} Q([a, F]) * P([F, b]) = 0
// for a < b, with Q = 1 on trivial intervals.
class KlsEngine {
public:
    explicit KlsEngine(const Matroid& m, bool use_cache = true)
        : lat_(m), use_cache_(use_cache) {}

    const FlatLattice& lattice() const { return lat_; }

    IntPolynomial P(int a, int b) {
        if (use_cache_) {
            auto it = p_.find({a, b});
            if (it != p_.end()) return it->second;
        }
        IntPolynomial p = compute_P(a, b);
        if (use_cache_) p_.emplace(std::make_pair(a, b), p);
        return p;
    }

    IntPolynomial Q(int a, int b) {
        if (use_cache_) {
            auto it = q_.find({a, b});
            if (it != q_.end()) return it->second;
        }
        IntPolynomial q = compute_Q(a, b);
        if (use_cache_) q_.emplace(std::make_pair(a, b), q);
        return q;
    }

    IntPolynomial kl_poly() { return P(lat_.bottom(), lat_.top()); }
    IntPolynomial inverse_kl_poly() { return Q(lat_.bottom(), lat_.top()); }

    // Z = sum over flats F of t^{rk F} P(M/F).
    IntPolynomial z_poly() {
        IntPolynomial z;
        for (int h = 0; h < lat_.size(); ++h)
            z += P(h, lat_.top()).shifted(lat_.rank_of_flat(h));
        return z;
    }

    // Inverse Z: Y = sum over flats F of t^{crk F} Q(M|_F) |mu(F, top)|.
    // Palindromicity and coefficient nonnegativity are structural here; their
    // failure means the engine itself is wrong, so both are hard errors.
    IntPolynomial inv_z_poly() {
        IntPolynomial y;
        const int r = lat_.rank();
        for (int h = 0; h < lat_.size(); ++h) {
            const int crk = r - lat_.rank_of_flat(h);
            Int mu = lat_.mobius(h, lat_.top());
            if (crk % 2 == 1) mu = -mu;
            y += (Q(lat_.bottom(), h) * mu).shifted(crk);
        }
        if (!y.is_palindromic(r)) throw std::logic_error("inv_z_poly: not palindromic");
        if (!y.all_nonneg()) throw std::logic_error("inv_z_poly: negative coefficient");
        return y;
    }

    IntPolynomial interval_char_poly(int a, int b) {
        if (use_cache_) {
            auto it = chi_.find({a, b});
            if (it != chi_.end()) return it->second;
        }
        IntPolynomial c = lat_.char_poly(a, b);
        if (use_cache_) chi_.emplace(std::make_pair(a, b), c);
        return c;
    }

private:
    IntPolynomial compute_P(int a, int b) {
        if (a == b) return IntPolynomial::one();
        const int r = lat_.rank_of_flat(b) - lat_.rank_of_flat(a);
        IntPolynomial rhs;
        for (int h : lat_.interval(a, b))
            if (h != a) rhs += interval_char_poly(a, h) * P(h, b);
        IntPolynomial p;
        for (int j = 0; 2 * j < r; ++j) p.set_coeff(j, -rhs.coeff(j));
        if (p.coeff(0) != 1) throw std::logic_error("kls: constant term of P is not 1");
        if (p.reversed(r) - p != rhs)
            throw std::logic_error("kls: defining identity for P fails in the high half");
        return p;
    }

    IntPolynomial compute_Q(int a, int b) {
        if (a == b) return IntPolynomial::one();
        const int r = lat_.rank_of_flat(b) - lat_.rank_of_flat(a);
        IntPolynomial s;
        for (int h : lat_.interval(a, b)) {
            if (h == b) continue;
            IntPolynomial term = Q(a, h) * P(h, b);
            if ((lat_.rank_of_flat(h) - lat_.rank_of_flat(a)) % 2 == 1) term = term * Int(-1);
            s += term;
        }
        IntPolynomial q = (r % 2 == 0) ? s * Int(-1) : s;
        if (!q.is_zero() && 2 * q.degree() >= r)
            throw std::logic_error("kls: degree bound for Q fails");
        return q;
    }

    FlatLattice lat_;
    bool use_cache_;
    std::map<std::pair<int, int>, IntPolynomial> p_, q_, chi_;
};

}  // namespace mkls
