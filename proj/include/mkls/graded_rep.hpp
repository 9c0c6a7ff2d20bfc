#pragma once

#include <stdexcept>
#include <vector>

#include "mkls/polynomial.hpp"
#include "mkls/qanalog.hpp"
#include "mkls/schur.hpp"

namespace mkls {

// Whether the coefficients are Frobenius images of symmetric-group
// representations or multiplicity vectors of unipotent GL_n(F_q)
// representations. The two share all Schur-vector arithmetic; only the
// dimension map differs.
enum class Flavor { SymmetricGroup, Unipotent };

// Polynomial in t with SchurVector coefficients, all homogeneous of the same
// group degree n. Trailing zero coefficients are trimmed.
class GradedRep {
public:
    GradedRep(int group_degree, Flavor flavor = Flavor::SymmetricGroup)
        : n_(group_degree), flavor_(flavor) {
        if (group_degree < 0) throw std::invalid_argument("GradedRep: negative group degree");
    }

    GradedRep(int group_degree, std::vector<SchurVector> coeffs,
              Flavor flavor = Flavor::SymmetricGroup)
        : n_(group_degree), flavor_(flavor), c_(std::move(coeffs)) {
        for (const auto& v : c_) {
            auto d = v.degree();
            if (d && *d != n_)
                throw std::invalid_argument("GradedRep: coefficient degree mismatch");
        }
        trim();
    }

    int group_degree() const { return n_; }
    Flavor flavor() const { return flavor_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }

    const SchurVector& coeff(int i) const {
        static const SchurVector zero;
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
    }

    void add(int t_deg, const SchurVector& v) {
        if (v.is_zero()) return;
        auto d = v.degree();
        if (d && *d != n_)
            throw std::invalid_argument("GradedRep: coefficient degree mismatch");
        if (t_deg >= static_cast<int>(c_.size())) c_.resize(t_deg + 1);
        c_[t_deg] += v;
        trim();
    }

    GradedRep with_flavor(Flavor f) const {
        GradedRep r = *this;
        r.flavor_ = f;
        return r;
    }

    GradedRep& operator+=(const GradedRep& o) {
        require_compatible(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    GradedRep& operator-=(const GradedRep& o) {
        require_compatible(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend GradedRep operator+(GradedRep a, const GradedRep& b) { return a += b; }
    friend GradedRep operator-(GradedRep a, const GradedRep& b) { return a -= b; }

    friend bool operator==(const GradedRep&, const GradedRep&) = default;

private:
    void require_compatible(const GradedRep& o) const {
        if (n_ != o.n_ || flavor_ != o.flavor_)
            throw std::invalid_argument("GradedRep: incompatible operands");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int n_;
    Flavor flavor_;
    std::vector<SchurVector> c_;
};

// Induction product: group degrees add, t-degrees convolve, coefficients
// multiply by the Littlewood-Richardson rule.
inline GradedRep induct_product(const GradedRep& f, const GradedRep& g) {
    if (f.flavor() != Flavor::SymmetricGroup || g.flavor() != Flavor::SymmetricGroup)
        throw std::invalid_argument("induct_product: symmetric-group flavor required");
    GradedRep out(f.group_degree() + g.group_degree());
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j)
            out.add(i + j, lr_product(f.coeff(i), g.coeff(j)));
    return out;
}

// One-box branching restriction applied coefficientwise.
inline GradedRep restrict_one(const GradedRep& f) {
    if (f.group_degree() == 0)
        throw std::invalid_argument("restrict_one: group degree 0");
    GradedRep out(f.group_degree() - 1, f.flavor());
    for (int i = 0; i <= f.degree(); ++i)
        out.add(i, branch_restrict(f.coeff(i)));
    return out;
}

inline bool is_honest(const GradedRep& f) {
    for (int i = 0; i <= f.degree(); ++i)
        if (!is_schur_nonneg(f.coeff(i))) return false;
    return true;
}

inline bool is_palindromic(const GradedRep& f, int d) {
    if (f.degree() > d) return false;
    for (int i = 0; 2 * i <= d; ++i)
        if (f.coeff(i) != f.coeff(d - i)) return false;
    return true;
}

// Scan all pivots 0..d; the sequence is equivariantly unimodal iff some pivot
// makes every difference up to it and down from it Schur-nonnegative.
inline bool is_equivariantly_unimodal(const GradedRep& f) {
    const int d = f.degree();
    std::vector<bool> up(d + 1, true), down(d + 1, true);
    for (int i = 1; i <= d; ++i)
        up[i] = up[i - 1] && is_schur_nonneg(f.coeff(i) - f.coeff(i - 1));
    for (int i = d - 1; i >= 0; --i)
        down[i] = down[i + 1] && is_schur_nonneg(f.coeff(i) - f.coeff(i + 1));
    for (int p = 0; p <= d; ++p)
        if (up[p] && down[p]) return true;
    return false;
}

// c_i c_j - c_{i-1} c_{j+1} Schur-nonnegative for all 1 <= i <= j <= d-1,
// products taken in the induced (LR) sense.
inline bool strongly_induced_logconcave(const GradedRep& f) {
    if (f.flavor() != Flavor::SymmetricGroup)
        throw std::invalid_argument("strongly_induced_logconcave: symmetric-group flavor required");
    const int d = f.degree();
    for (int i = 1; i <= d - 1; ++i)
        for (int j = i; j <= d - 1; ++j) {
            SchurVector diff = lr_product(f.coeff(i), f.coeff(j)) -
                               lr_product(f.coeff(i - 1), f.coeff(j + 1));
            if (!is_schur_nonneg(diff)) return false;
        }
    return true;
}

inline IntPolynomial dimension_poly(const GradedRep& f) {
    if (f.flavor() != Flavor::SymmetricGroup)
        throw std::invalid_argument("dimension_poly: symmetric-group flavor required");
    std::vector<Int> c(f.degree() + 1, Int(0));
    for (int i = 0; i <= f.degree(); ++i) c[i] = sv_dimension(f.coeff(i));
    return IntPolynomial(std::move(c));
}

// Dimension map for unipotent multiplicity vectors. Induction is already
// accounted for by the full irreducible decomposition, so the coefficient
// dimension is plainly sum(multiplicity * dim V_la(q)).
inline IntPolynomial qdimension_poly(const GradedRep& f, const QContext& ctx) {
    if (f.flavor() != Flavor::Unipotent)
        throw std::invalid_argument("qdimension_poly: unipotent flavor required");
    std::vector<Int> c(f.degree() + 1, Int(0));
    for (int i = 0; i <= f.degree(); ++i) {
        Int d = 0;
        for (const auto& [la, m] : f.coeff(i).coeffs()) d += m * unipotent_dim(la, ctx);
        c[i] = d;
    }
    return IntPolynomial(std::move(c));
}

}  // namespace mkls
