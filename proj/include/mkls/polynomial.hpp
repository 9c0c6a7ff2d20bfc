#pragma once

#include <stdexcept>
#include <string>
#include <sstream>
#include <vector>

#include "mkls/common.hpp"

namespace mkls {

// Exact integer-coefficient polynomial in t, constant term first, trailing
// zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static IntPolynomial one() { return IntPolynomial({Int(1)}); }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }

    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
    }

    void set_coeff(int i, const Int& v) {
        if (i < 0) throw std::invalid_argument("IntPolynomial: negative index");
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, Int(0));
        c_[i] = v;
        trim();
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(IntPolynomial a, const Int& s) {
        for (auto& v : a.c_) v *= s;
        a.trim();
        return a;
    }

    // t^d * p(1/t) as a polynomial; requires deg <= d.
    IntPolynomial reversed(int d) const {
        if (degree() > d) throw std::invalid_argument("IntPolynomial: reversal degree too small");
        std::vector<Int> c(d + 1, Int(0));
        for (int i = 0; i < static_cast<int>(c_.size()); ++i) c[d - i] = c_[i];
        return IntPolynomial(std::move(c));
    }

    IntPolynomial shifted(int k) const {  // multiply by t^k
        if (is_zero()) return {};
        std::vector<Int> c(c_.size() + k, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return IntPolynomial(std::move(c));
    }

    Int eval(const Int& x) const {
        Int v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    bool is_palindromic(int d) const {
        if (degree() > d) return false;
        for (int i = 0; 2 * i <= d; ++i)
            if (coeff(i) != coeff(d - i)) return false;
        return true;
    }

    bool all_nonneg() const {
        for (const auto& v : c_) if (v < 0) return false;
        return true;
    }

    // c_i c_j >= c_{i-1} c_{j+1} for all 1 <= i <= j <= d-1.
    bool strongly_log_concave() const {
        const int d = degree();
        for (int i = 1; i <= d - 1; ++i)
            for (int j = i; j <= d - 1; ++j)
                if (coeff(i) * coeff(j) < coeff(i - 1) * coeff(j + 1)) return false;
        return true;
    }

    bool unimodal() const {
        const int d = degree();
        int i = 0;
        while (i < d && coeff(i) <= coeff(i + 1)) ++i;
        while (i < d && coeff(i) >= coeff(i + 1)) ++i;
        return i == d;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            os << c_[i];
        }
        os << ']';
        return os.str();
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

}  // namespace mkls
