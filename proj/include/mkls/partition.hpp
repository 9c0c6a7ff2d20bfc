#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mkls/common.hpp"

namespace mkls {

// An integer partition: weakly decreasing tuple of positive parts.
// The empty tuple is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    // Zero parts in the input are dropped; a strictly increasing step or a
    // negative part is an error.
    explicit Partition(std::vector<int> parts) {
        std::erase(parts, 0);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts not weakly decreasing");
        }
        parts_ = std::move(parts);
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool empty() const { return parts_.empty(); }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(parts_[0]);
            for (int p : parts_)
                for (int c = 0; c < p; ++c) ++cols[c];
        }
        return Partition(std::move(cols));
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// The three-block shapes (a, 2^b, 1^c) in which every closed formula here is
// written. b and c may come out negative from a formula, in which case the
// shape denotes the zero representation.
struct ShapeExpr {
    int head = 0;
    int twos = 0;
    int ones = 0;
};

// Some(partition) iff the shape is a genuine partition; None encodes the
// convention that out-of-range shapes contribute nothing.
inline std::optional<Partition> normalize_shape(const ShapeExpr& s) {
    if (s.twos < 0 || s.ones < 0) return std::nullopt;
    if (s.head < 0) return std::nullopt;
    if (s.head == 0) {
        if (s.twos != 0 || s.ones != 0) return std::nullopt;
        return Partition{};
    }
    if (s.head == 1 && s.twos != 0) return std::nullopt;
    std::vector<int> parts;
    parts.reserve(1 + s.twos + s.ones);
    parts.push_back(s.head);
    parts.insert(parts.end(), s.twos, 2);
    parts.insert(parts.end(), s.ones, 1);
    return Partition(std::move(parts));
}

// Hook lengths, one per cell, row-major.
inline std::vector<int> hook_lengths(const Partition& la) {
    const Partition conj = la.conjugate();
    std::vector<int> hooks;
    hooks.reserve(la.size());
    for (int r = 0; r < la.rows(); ++r)
        for (int c = 0; c < la.part(r); ++c)
            hooks.push_back((la.part(r) - c) + (conj.part(c) - r) - 1);
    return hooks;
}

// Number of standard Young tableaux of shape la (hook-length formula).
inline Int dim_syt(const Partition& la) {
    Int num = factorial(la.size());
    for (int h : hook_lengths(la)) num /= h;
    return num;
}

// n(la) = sum_i (i-1) la_i, the exponent in the unipotent dimension formula.
inline int n_stat(const Partition& la) {
    int s = 0;
    for (int r = 0; r < la.rows(); ++r) s += r * la.part(r);
    return s;
}

inline Partition conjugate(const Partition& la) { return la.conjugate(); }

// Convenience builders for the shapes used throughout.
inline Partition hook_shape(int arm, int leg) {
    auto p = normalize_shape({arm, 0, leg});
    if (!p) throw std::invalid_argument("hook_shape: invalid (arm,leg)");
    return *p;
}

inline Partition column_shape(int i) {
    return Partition(std::vector<int>(static_cast<std::size_t>(i), 1));
}

// All partitions of n, lexicographically decreasing first part.
inline void partitions_of(int n, const std::function<void(const Partition&)>& fn) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            fn(Partition(parts));
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            parts.push_back(p);
            self(self, rem - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

}  // namespace mkls
