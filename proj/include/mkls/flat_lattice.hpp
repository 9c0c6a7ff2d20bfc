#pragma once

#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mkls/matroid.hpp"
#include "mkls/polynomial.hpp"

namespace mkls {

// The lattice of flats, enumerated by breadth-first closure search from the
// bottom flat (the closure of the empty set). Flats are indexed in order of
// increasing rank, bottom first, top last.
class FlatLattice {
public:
    explicit FlatLattice(const Matroid& m) : rank_(m.rank()) {
        const Bits bottom = m.closure(0);
        std::unordered_map<Bits, int> seen;
        std::queue<Bits> work;
        auto push = [&](Bits f) {
            if (seen.emplace(f, 0).second) work.push(f);
        };
        push(bottom);
        while (!work.empty()) {
            Bits f = work.front();
            work.pop();
            flats_.push_back(f);
            // covers: close f + e for each e outside f
            for (int e = 0; e < m.ground_size(); ++e) {
                Bits be = Bits(1) << e;
                if (!(f & be)) push(m.closure(f | be));
            }
        }
        ranks_.resize(flats_.size());
        for (std::size_t i = 0; i < flats_.size(); ++i) ranks_[i] = m.rank_of(flats_[i]);
        // sort by (rank, value)
        std::vector<int> order(flats_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return ranks_[a] != ranks_[b] ? ranks_[a] < ranks_[b] : flats_[a] < flats_[b];
        });
        std::vector<Bits> sf(flats_.size());
        std::vector<int> sr(flats_.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sf[i] = flats_[order[i]];
            sr[i] = ranks_[order[i]];
        }
        flats_ = std::move(sf);
        ranks_ = std::move(sr);
        for (std::size_t i = 0; i < flats_.size(); ++i) index_[flats_[i]] = static_cast<int>(i);
        by_rank_.assign(rank_ + 1, {});
        for (std::size_t i = 0; i < flats_.size(); ++i)
            by_rank_[ranks_[i]].push_back(static_cast<int>(i));
        loopless_ = (bottom == 0);
    }

    int size() const { return static_cast<int>(flats_.size()); }
    int rank() const { return rank_; }
    bool loopless() const { return loopless_; }
    Bits flat(int i) const { return flats_[i]; }
    int rank_of_flat(int i) const { return ranks_[i]; }
    const std::vector<int>& flats_of_rank(int r) const { return by_rank_[r]; }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }

    int index_of(Bits f) const {
        auto it = index_.find(f);
        if (it == index_.end()) throw std::invalid_argument("FlatLattice: not a flat");
        return it->second;
    }

    bool leq(int a, int b) const { return (flats_[a] & ~flats_[b]) == 0; }

    // Indices of flats in the closed interval [a, b].
    std::vector<int> interval(int a, int b) const {
        std::vector<int> out;
        for (int h = a; h <= b; ++h)
            if (leq(a, h) && leq(h, b)) out.push_back(h);
        return out;
    }

    // Mobius function of the interval [a, b]; zero unless a <= b.
    Int mobius(int a, int b) const {
        if (!leq(a, b)) return 0;
        if (a == b) return 1;
        const std::uint64_t key = std::uint64_t(a) * flats_.size() + b;
        auto it = mob_.find(key);
        if (it != mob_.end()) return it->second;
        Int s = 0;
        for (int h = a; h < b; ++h)
            if (leq(a, h) && leq(h, b)) s -= mobius(a, h);
        mob_[key] = s;
        return s;
    }

    Int mobius_to_top(int a) const { return mobius(a, top()); }

    // Characteristic polynomial of the interval [a, b] viewed as the lattice
    // of flats of the minor: sum over flats F in [a, b] of mu(a, F) t^{rk b - rk F}.
    IntPolynomial char_poly(int a, int b) const {
        IntPolynomial p;
        const int rb = ranks_[b];
        for (int h : interval(a, b)) p.set_coeff(rb - ranks_[h], p.coeff(rb - ranks_[h]) + mobius(a, h));
        return p;
    }

    IntPolynomial char_poly() const { return char_poly(bottom(), top()); }

private:
    int rank_;
    bool loopless_ = true;
    std::vector<Bits> flats_;
    std::vector<int> ranks_;
    std::vector<std::vector<int>> by_rank_;
    std::unordered_map<Bits, int> index_;
    mutable std::unordered_map<std::uint64_t, Int> mob_;
};

// Characteristic polynomial of a matroid: zero if the matroid has loops.
inline IntPolynomial char_poly(const Matroid& m) {
    FlatLattice l(m);
    if (!l.loopless()) return {};
    return l.char_poly();
}

}  // namespace mkls
