#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mkls/common.hpp"

namespace mkls {

// Ground sets are at most 64 elements; subsets are machine-word bitsets.
using Bits = std::uint64_t;

inline int popcount(Bits b) { return std::popcount(b); }

inline std::vector<int> bit_elements(Bits b) {
    std::vector<int> out;
    while (b) {
        out.push_back(std::countr_zero(b));
        b &= b - 1;
    }
    return out;
}

// Visit all size-r subsets of the element list `elems`.
template <typename Fn>
void for_each_subset_of_size(const std::vector<int>& elems, int r, Fn&& fn) {
    const int m = static_cast<int>(elems.size());
    if (r < 0 || r > m) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        Bits s = 0;
        for (int i : idx) s |= Bits(1) << elems[i];
        fn(s);
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Stressed-hyperplane counts of a paving matroid, keyed by hyperplane size.
struct PavingProfile {
    int k = 0;
    int n = 0;
    std::map<int, int> lambda;  // size h >= k -> count
};

class Matroid {
public:
    enum class Kind { Bases, Uniform, Boolean, SparsePaving, Paving, DirectSum, QNiform, Linear };

    int ground_size() const { return n_; }
    int rank() const { return k_; }
    Kind kind() const { return kind_; }
    Bits full_set() const { return n_ == 64 ? ~Bits(0) : (Bits(1) << n_) - 1; }

    // --- constructors -----------------------------------------------------

    static Matroid uniform(int k, int n) {
        check_kn(k, n);
        Matroid m(n, k, Kind::Uniform);
        return m;
    }

    static Matroid boolean_(int n) {
        Matroid m(n, n, Kind::Boolean);
        m.kind_ = Kind::Boolean;
        return m;
    }

    static Matroid from_bases(int n, int k, std::vector<Bits> bases) {
        check_kn(k, n);
        Matroid m(n, k, Kind::Bases);
        m.set_bases(std::move(bases));
        m.validate_bases();
        return m;
    }

    static Matroid direct_sum(const Matroid& a, const Matroid& b) {
        if (a.ground_size() + b.ground_size() > 64)
            throw std::invalid_argument("direct_sum: ground set too large");
        Matroid m(a.ground_size() + b.ground_size(), a.rank() + b.rank(), Kind::DirectSum);
        m.left_ = std::make_shared<Matroid>(a);
        m.right_ = std::make_shared<Matroid>(b);
        return m;
    }

    // Sparse paving matroid: bases are all k-subsets except the listed
    // circuit-hyperplanes, which must pairwise intersect in <= k-2 elements.
    static Matroid sparse_paving(int n, int k, const std::vector<Bits>& circuit_hyperplanes) {
        check_kn(k, n);
        for (Bits h : circuit_hyperplanes)
            if (popcount(h) != k)
                throw std::invalid_argument("sparse_paving: circuit-hyperplane is not a k-set");
        check_hyperplane_overlaps(k, circuit_hyperplanes);
        Matroid m(n, k, Kind::SparsePaving);
        m.hyps_ = circuit_hyperplanes;
        std::sort(m.hyps_.begin(), m.hyps_.end());
        return m;
    }

    // Paving matroid from a list of prospective stressed hyperplanes of sizes
    // >= k: bases are the k-subsets contained in none of them.
    static Matroid paving_from_hyperplanes(int n, int k, const std::vector<Bits>& hyperplanes) {
        check_kn(k, n);
        for (Bits h : hyperplanes) {
            if (popcount(h) < k)
                throw std::invalid_argument("paving_from_hyperplanes: hyperplane smaller than k");
            if (popcount(h) >= n)
                throw std::invalid_argument("paving_from_hyperplanes: hyperplane covers the ground set");
        }
        check_hyperplane_overlaps(k, hyperplanes);
        Matroid m(n, k, Kind::Paving);
        m.hyps_ = hyperplanes;
        std::sort(m.hyps_.begin(), m.hyps_.end());
        return m;
    }

    // Matrix-realized matroid over F_p (p prime), rank capped at `truncation`.
    // Zero columns are rejected and parallel columns are collapsed is NOT done
    // here: the caller chooses; qniform() supplies deduplicated columns.
    static Matroid linear(int p, int truncation, std::vector<std::vector<int>> columns) {
        if (!is_prime(p)) throw std::invalid_argument("linear: p must be prime");
        if (columns.empty()) throw std::invalid_argument("linear: no columns");
        const std::size_t dim = columns[0].size();
        for (auto& c : columns) {
            if (c.size() != dim) throw std::invalid_argument("linear: ragged columns");
            bool zero = true;
            for (auto& v : c) {
                v = ((v % p) + p) % p;
                if (v != 0) zero = false;
            }
            if (zero) throw std::invalid_argument("linear: zero column (loop)");
        }
        // reject duplicate parallel classes: normalize first nonzero entry to 1
        std::vector<std::vector<int>> normed;
        for (const auto& c : columns) normed.push_back(normalize_column(c, p));
        for (std::size_t i = 0; i < normed.size(); ++i)
            for (std::size_t j = i + 1; j < normed.size(); ++j)
                if (normed[i] == normed[j])
                    throw std::invalid_argument("linear: parallel columns");
        Matroid m(static_cast<int>(columns.size()),
                  std::min<int>(truncation, static_cast<int>(dim)), Kind::Linear);
        m.p_ = p;
        m.trunc_ = m.k_;
        m.cols_ = std::move(columns);
        m.dim_ = static_cast<int>(dim);
        // true rank may be below the truncation if the columns do not span
        std::vector<int> all(m.n_);
        for (int i = 0; i < m.n_; ++i) all[i] = i;
        m.k_ = m.linear_rank(m.full_set());
        return m;
    }

    // Rank-k truncation of the projective geometry PG(n-1, q): one column per
    // projective point of F_q^n (dual-points model of the q-niform matroid).
    static Matroid qniform(int k, int n, int q) {
        check_kn(k, n);
        if (!is_prime(q)) throw std::invalid_argument("qniform: q must be prime");
        std::vector<std::vector<int>> cols;
        std::vector<int> v(n, 0);
        // vectors with first nonzero coordinate equal to 1
        for (int lead = n - 1; lead >= 0; --lead) {
            std::vector<int> c(n, 0);
            c[lead] = 1;
            std::function<void(int)> rec = [&](int pos) {
                if (pos == n) {
                    cols.push_back(c);
                    return;
                }
                for (int d = 0; d < q; ++d) {
                    c[pos] = d;
                    rec(pos + 1);
                }
                c[pos] = 0;
            };
            rec(lead + 1);
        }
        if (static_cast<int>(cols.size()) > 64)
            throw std::invalid_argument("qniform: projective space exceeds 64 points");
        Matroid m = linear(q, k, std::move(cols));
        m.kind_ = Kind::QNiform;
        m.q_ = q;
        m.qn_ = n;
        return m;
    }

    // --- rank oracle ------------------------------------------------------

    int rank_of(Bits a) const {
        if (a & ~full_set()) throw std::invalid_argument("rank_of: element out of range");
        switch (kind_) {
            case Kind::Uniform:
                return std::min(popcount(a), k_);
            case Kind::Boolean:
                return popcount(a);
            case Kind::SparsePaving:
            case Kind::Paving: {
                const int sz = popcount(a);
                if (sz < k_) return sz;
                for (Bits h : hyps_)
                    if ((a & ~h) == 0) return k_ - 1;
                return k_;
            }
            case Kind::DirectSum: {
                const int nl = left_->ground_size();
                const Bits maskl = (Bits(1) << nl) - 1;
                return left_->rank_of(a & maskl) + right_->rank_of(a >> nl);
            }
            case Kind::Linear:
                return linear_rank(a);
            case Kind::QNiform:
                return linear_rank(a);
            case Kind::Bases: {
                int best = 0;
                for (Bits b : bases_) best = std::max(best, popcount(a & b));
                return best;
            }
        }
        return 0;
    }

    bool independent(Bits a) const { return rank_of(a) == popcount(a); }

    Bits closure(Bits a) const {
        const int r = rank_of(a);
        Bits cl = a;
        for (int e = 0; e < n_; ++e) {
            const Bits be = Bits(1) << e;
            if ((a & be) == 0 && rank_of(a | be) == r) cl |= be;
        }
        return cl;
    }

    // --- bases ------------------------------------------------------------

    const std::vector<Bits>& bases() const {
        if (bases_.empty() && k_ >= 0 && kind_ != Kind::Bases) {
            std::vector<int> all(n_);
            for (int i = 0; i < n_; ++i) all[i] = i;
            auto& mut = const_cast<Matroid&>(*this);
            for_each_subset_of_size(all, k_, [&](Bits s) {
                if (independent(s)) mut.bases_.push_back(s);
            });
        }
        return bases_;
    }

    // --- minors -----------------------------------------------------------

    // Restriction to a subset F, reindexed to ground set 0..|F|-1.
    Matroid restrict_to(Bits f) const {
        const auto elems = bit_elements(f);
        const int r = rank_of(f);
        std::vector<Bits> bb;
        for_each_subset_of_size(elems, r, [&](Bits s) {
            if (independent(s)) bb.push_back(reindex(s, elems));
        });
        return from_bases(static_cast<int>(elems.size()), r, std::move(bb));
    }

    // Contraction by a subset F (normally a flat), ground set E \ F reindexed.
    Matroid contract(Bits f) const {
        const int rf = rank_of(f);
        const auto elems = bit_elements(full_set() & ~f);
        const int r = k_ - rf;
        std::vector<Bits> bb;
        for_each_subset_of_size(elems, r, [&](Bits s) {
            if (rank_of(f | s) == rf + r) bb.push_back(reindex(s, elems));
        });
        return from_bases(static_cast<int>(elems.size()), r, std::move(bb));
    }

    // --- paving machinery -------------------------------------------------

    // A flat H of rank k-1 is stressed iff all its (k-1)-subsets are
    // independent (its k-subsets are automatically dependent).
    bool is_stressed_hyperplane(Bits h) const {
        if (rank_of(h) != k_ - 1 || closure(h) != h) return false;
        bool ok = true;
        for_each_subset_of_size(bit_elements(h), k_ - 1, [&](Bits s) {
            if (!independent(s)) ok = false;
        });
        return ok;
    }

    // Every matroid with `paving` structure: all circuits have size >= k,
    // i.e. every (k-1)-subset is independent. On failure returns a witness
    // circuit of size < k.
    bool is_paving(Bits* witness_circuit = nullptr) const {
        std::vector<int> all(n_);
        for (int i = 0; i < n_; ++i) all[i] = i;
        for (int sz = 1; sz < k_; ++sz) {
            Bits bad = 0;
            for_each_subset_of_size(all, sz, [&](Bits s) {
                if (!bad && !independent(s)) bad = s;
            });
            if (bad) {
                if (witness_circuit) *witness_circuit = shrink_to_circuit(bad);
                return false;
            }
        }
        return true;
    }

    // Relaxation along a stressed hyperplane of size >= k.
    Matroid relax(Bits h) const {
        if (!is_stressed_hyperplane(h))
            throw std::invalid_argument("relax: not a stressed hyperplane");
        if (popcount(h) < k_)
            throw std::invalid_argument("relax: hyperplane smaller than the rank");
        std::vector<Bits> bb = bases();
        for_each_subset_of_size(bit_elements(h), k_, [&](Bits s) { bb.push_back(s); });
        return from_bases(n_, k_, std::move(bb));
    }

    friend PavingProfile paving_profile(const Matroid& m);

    // Descriptor access for serialization.
    const std::vector<Bits>& listed_hyperplanes() const { return hyps_; }
    const Matroid* sum_left() const { return left_.get(); }
    const Matroid* sum_right() const { return right_.get(); }
    int field_char() const { return p_; }
    int truncation() const { return trunc_; }
    const std::vector<std::vector<int>>& columns() const { return cols_; }
    int qniform_q() const { return q_; }
    int qniform_n() const { return qn_; }

private:
    Matroid(int n, int k, Kind kind) : n_(n), k_(k), kind_(kind) {
        if (n < 0 || n > 64) throw std::invalid_argument("Matroid: ground size out of range");
        if (k < 0 || k > n) throw std::invalid_argument("Matroid: rank out of range");
    }

    static void check_kn(int k, int n) {
        if (n < 0 || n > 64 || k < 0 || k > n)
            throw std::invalid_argument("Matroid: invalid (k, n)");
    }

    static void check_hyperplane_overlaps(int k, const std::vector<Bits>& hyps) {
        for (std::size_t i = 0; i < hyps.size(); ++i)
            for (std::size_t j = i + 1; j < hyps.size(); ++j)
                if (popcount(hyps[i] & hyps[j]) > k - 2)
                    throw std::invalid_argument(
                        "hyperplanes " + std::to_string(i) + " and " + std::to_string(j) +
                        " intersect in more than k-2 elements");
    }

    static bool is_prime(int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    static std::vector<int> normalize_column(std::vector<int> c, int p) {
        int lead = -1;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) {
                lead = static_cast<int>(i);
                break;
            }
        if (lead < 0) return c;
        // multiply by the inverse of the leading entry
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if (c[lead] * x % p == 1) inv = x;
        for (auto& v : c) v = v * inv % p;
        return c;
    }

    static Bits reindex(Bits s, const std::vector<int>& elems) {
        Bits out = 0;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (s & (Bits(1) << elems[i])) out |= Bits(1) << i;
        return out;
    }

    Bits shrink_to_circuit(Bits dep) const {
        for (int e : bit_elements(dep)) {
            Bits cand = dep & ~(Bits(1) << e);
            if (cand && !independent(cand)) return shrink_to_circuit(cand);
        }
        return dep;
    }

    void set_bases(std::vector<Bits> bases) {
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        bases_ = std::move(bases);
    }

    void validate_bases() const {
        if (bases_.empty()) throw std::invalid_argument("Matroid: empty basis family");
        for (Bits b : bases_) {
            if (b & ~full_set()) throw std::invalid_argument("Matroid: basis out of range");
            if (popcount(b) != k_) throw std::invalid_argument("Matroid: basis of wrong size");
        }
        // exchange axiom; eager at desk scale, sampled above it
        if (n_ <= 12 || bases_.size() <= 2000) {
            std::unordered_set<Bits> bs(bases_.begin(), bases_.end());
            for (Bits b1 : bases_)
                for (Bits b2 : bases_) {
                    if (b1 == b2) continue;
                    for (int e : bit_elements(b1 & ~b2)) {
                        bool found = false;
                        for (int f : bit_elements(b2 & ~b1)) {
                            Bits cand = (b1 & ~(Bits(1) << e)) | (Bits(1) << f);
                            if (bs.count(cand)) {
                                found = true;
                                break;
                            }
                        }
                        if (!found)
                            throw std::invalid_argument("Matroid: basis exchange axiom fails");
                    }
                }
        }
    }

    int linear_rank(Bits a) const {
        // Gaussian elimination over F_p on the selected columns.
        std::vector<std::vector<int>> rows;  // row echelon of the transpose
        int r = 0;
        std::vector<std::vector<int>> mat;
        for (int e : bit_elements(a)) mat.push_back(cols_[e]);
        std::vector<int> pivot_col;
        for (auto& row : mat) {
            // reduce by existing pivots
            for (std::size_t i = 0; i < rows.size(); ++i) {
                int c = pivot_col[i];
                if (row[c] != 0) {
                    int factor = row[c];
                    for (int j = 0; j < dim_; ++j)
                        row[j] = ((row[j] - factor * rows[i][j]) % p_ + p_) % p_;
                }
            }
            int lead = -1;
            for (int j = 0; j < dim_; ++j)
                if (row[j] != 0) {
                    lead = j;
                    break;
                }
            if (lead < 0) continue;
            // scale pivot to 1
            int inv = 1;
            for (int x = 1; x < p_; ++x)
                if (row[lead] * x % p_ == 1) inv = x;
            for (int j = 0; j < dim_; ++j) row[j] = row[j] * inv % p_;
            rows.push_back(row);
            pivot_col.push_back(lead);
            ++r;
            if (r >= trunc_) return trunc_;
        }
        return std::min(r, trunc_);
    }

    int n_;
    int k_;
    Kind kind_;
    std::vector<Bits> bases_;
    std::vector<Bits> hyps_;
    std::shared_ptr<const Matroid> left_, right_;
    std::vector<std::vector<int>> cols_;
    int p_ = 0, trunc_ = 0, dim_ = 0, q_ = 0, qn_ = 0;
};

inline PavingProfile paving_profile(const Matroid& m) {
    Bits witness = 0;
    if (!m.is_paving(&witness))
        throw std::invalid_argument("paving_profile: not paving, witness circuit " +
                                    std::to_string(witness));
    PavingProfile prof;
    prof.k = m.rank();
    prof.n = m.ground_size();
    // enumerate rank-(k-1) flats by closing (k-1)-subsets
    std::vector<int> all(m.ground_size());
    for (int i = 0; i < m.ground_size(); ++i) all[i] = i;
    std::unordered_set<Bits> seen;
    for_each_subset_of_size(all, m.rank() - 1, [&](Bits s) {
        Bits h = m.closure(s);
        if (m.rank_of(h) != m.rank() - 1 || !seen.insert(h).second) return;
        if (popcount(h) >= m.rank() && m.is_stressed_hyperplane(h)) ++prof.lambda[popcount(h)];
    });
    return prof;
}

// All stressed hyperplanes, including corank-1 flats of size k-1 (vacuously
// stressed; only sizes >= k are relaxable).
inline std::vector<Bits> stressed_hyperplanes(const Matroid& m) {
    std::vector<int> all(m.ground_size());
    for (int i = 0; i < m.ground_size(); ++i) all[i] = i;
    std::unordered_set<Bits> seen;
    std::vector<Bits> out;
    for_each_subset_of_size(all, m.rank() - 1, [&](Bits s) {
        Bits h = m.closure(s);
        if (!seen.insert(h).second) return;
        if (m.is_stressed_hyperplane(h)) out.push_back(h);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Brute-force isomorphism by permutation search; test plumbing only (n <= 8).
inline bool isomorphic(const Matroid& a, const Matroid& b) {
    if (a.ground_size() != b.ground_size() || a.rank() != b.rank()) return false;
    const int n = a.ground_size();
    std::vector<Bits> ba = a.bases(), bb = b.bases();
    if (ba.size() != bb.size()) return false;
    std::sort(ba.begin(), ba.end());
    std::sort(bb.begin(), bb.end());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<Bits> mapped;
        mapped.reserve(ba.size());
        for (Bits s : ba) {
            Bits t = 0;
            for (int e : bit_elements(s)) t |= Bits(1) << perm[e];
            mapped.push_back(t);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == bb) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace mkls
