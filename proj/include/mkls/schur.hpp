#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mkls/partition.hpp"

namespace mkls {

// Integer linear combination of Schur functions, homogeneous by construction:
// all supported partitions must have the same size. The empty vector is the
// zero of every degree.
class SchurVector {
public:
    SchurVector() = default;

    static SchurVector schur(const Partition& la, Int coeff = 1) {
        SchurVector v;
        if (coeff != 0) v.coeffs_[la] = std::move(coeff);
        return v;
    }

    // Zero when the shape does not normalize.
    static SchurVector schur_shape(const ShapeExpr& s, Int coeff = 1) {
        auto p = normalize_shape(s);
        return p ? schur(*p, std::move(coeff)) : SchurVector{};
    }

    const std::map<Partition, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.begin()->first.size();
    }

    Int coeff(const Partition& la) const {
        auto it = coeffs_.find(la);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add(const Partition& la, const Int& c) {
        if (c == 0) return;
        if (!coeffs_.empty() && coeffs_.begin()->first.size() != la.size())
            throw std::invalid_argument("SchurVector: mixed degrees");
        auto it = coeffs_.find(la);
        if (it == coeffs_.end()) {
            coeffs_[la] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    SchurVector& operator+=(const SchurVector& o) {
        for (const auto& [la, c] : o.coeffs_) add(la, c);
        return *this;
    }
    SchurVector& operator-=(const SchurVector& o) {
        for (const auto& [la, c] : o.coeffs_) add(la, -c);
        return *this;
    }
    SchurVector& operator*=(const Int& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [la, c] : coeffs_) c *= s;
        return *this;
    }

    friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
    friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
    friend SchurVector operator*(SchurVector a, const Int& s) { return a *= s; }

    friend bool operator==(const SchurVector&, const SchurVector&) = default;

private:
    std::map<Partition, Int> coeffs_;  // no explicit zeros
};

namespace detail {

// s_la * s_mu expanded by enumerating Littlewood-Richardson tableaux as
// chains of horizontal strips labelled by the rows of mu, with the lattice
// condition enforced in its row-prefix (ballot) form: the number of labels r
// in rows <= i never exceeds the number of labels r-1 in rows <= i-1.
inline void lr_single(const Partition& la, const Partition& mu,
                      std::map<Partition, Int>& out) {
    const auto& mup = mu.parts();
    const int maxrows = la.rows() + mu.rows();
    std::vector<int> shape(la.parts());
    shape.resize(maxrows, 0);
    std::vector<int> prev_counts(maxrows, 0);  // per-row counts of previous label

    auto record = [&](const std::vector<int>& sh) {
        std::vector<int> trimmed(sh);
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out[Partition(std::move(trimmed))] += 1;
    };

    // place_label(r): distribute mup[r] boxes of label r+1 as a horizontal strip
    std::function<void(std::size_t)> place_label = [&](std::size_t r) {
        if (r == mup.size()) {
            record(shape);
            return;
        }
        const int total = mup[r];
        std::vector<int> old_shape(shape);
        std::vector<int> counts(maxrows, 0);
        // row_rec(i, rem, cum_cur, cum_prev): choose boxes for row i
        std::function<void(int, int, int, int)> row_rec = [&](int i, int rem,
                                                              int cum_cur, int cum_prev) {
            if (rem == 0) {
                std::vector<int> saved_prev(prev_counts);
                prev_counts = counts;
                place_label(r + 1);
                prev_counts = saved_prev;
                return;
            }
            if (i >= maxrows) return;
            int cap = (i == 0 ? rem : old_shape[i - 1] - old_shape[i]);
            cap = std::min(cap, rem);
            // partition condition: shape[i] + a <= shape[i-1] (already updated)
            if (i > 0) cap = std::min(cap, shape[i - 1] - old_shape[i]);
            int next_cum_prev = cum_prev + prev_counts[i];
            for (int a = 0; a <= cap; ++a) {
                // ballot: labels r+1 in rows <= i vs labels r in rows <= i-1
                if (r > 0 && cum_cur + a > cum_prev) break;
                shape[i] = old_shape[i] + a;
                counts[i] = a;
                row_rec(i + 1, rem - a, cum_cur + a, next_cum_prev);
            }
            shape[i] = old_shape[i];
            counts[i] = 0;
        };
        row_rec(0, total, 0, 0);
    };
    place_label(0);
}

inline const std::map<Partition, Int>& lr_single_cached(const Partition& la,
                                                        const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, std::map<Partition, Int>> cache;
    auto key = la <= mu ? std::make_pair(la, mu) : std::make_pair(mu, la);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<Partition, Int> out;
    lr_single(key.first, key.second, out);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace detail

// Littlewood-Richardson product of homogeneous vectors.
inline SchurVector lr_product(const SchurVector& f, const SchurVector& g) {
    if (f.is_zero() || g.is_zero()) return {};
    SchurVector out;
    for (const auto& [la, cf] : f.coeffs())
        for (const auto& [mu, cg] : g.coeffs())
            for (const auto& [nu, m] : detail::lr_single_cached(la, mu))
                out.add(nu, cf * cg * m);
    return out;
}

// e_r * s_la: sum over mu obtained from la by adding a vertical strip of size r.
inline SchurVector dual_pieri(int r, const Partition& la) {
    if (r < 0) throw std::invalid_argument("dual_pieri: negative strip size");
    SchurVector out;
    const int maxrows = la.rows() + r;
    std::vector<int> shape(la.parts());
    shape.resize(maxrows, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (rem == 0) {
            std::vector<int> trimmed(shape);
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.add(Partition(std::move(trimmed)), 1);
            return;
        }
        if (i >= maxrows || maxrows - i < rem) return;
        rec(i + 1, rem);  // no box in row i
        int newv = la.part(i) + 1;
        bool ok = (i == 0) || newv <= shape[i - 1];
        if (ok && newv >= 1) {
            shape[i] = newv;
            rec(i + 1, rem - 1);
            shape[i] = la.part(i);
        }
    };
    rec(0, r);
    return out;
}

// Restriction from S_m to S_{m-1}: remove one box in every possible way.
inline SchurVector branch_restrict(const SchurVector& f) {
    auto deg = f.degree();
    if (deg && *deg == 0)
        throw std::invalid_argument("branch_restrict: degree-0 input");
    SchurVector out;
    for (const auto& [la, c] : f.coeffs()) {
        for (int r = 0; r < la.rows(); ++r) {
            if (la.part(r) > la.part(r + 1)) {
                std::vector<int> parts(la.parts());
                --parts[r];
                out.add(Partition(std::move(parts)), c);
            }
        }
    }
    return out;
}

inline bool is_schur_nonneg(const SchurVector& f) {
    for (const auto& [la, c] : f.coeffs())
        if (c < 0) return false;
    return true;
}

// f >=_s g, defined on equal degrees (or with either side zero).
inline bool schur_geq(const SchurVector& f, const SchurVector& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree())
        throw std::invalid_argument("schur_geq: mixed degrees");
    return is_schur_nonneg(f - g);
}

inline Int sv_dimension(const SchurVector& f) {
    Int d = 0;
    for (const auto& [la, c] : f.coeffs()) d += c * dim_syt(la);
    return d;
}

}  // namespace mkls
