#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkls {

// All invariants in this library are exact; coefficients routinely exceed
// 64-bit range (factorials up to 24!, q-factorials), so everything runs on
// arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// binomial(n, k) with the usual convention of 0 outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// n! / (k1! k2! ... km!), requiring k1 + ... + km == n.
inline Int multinomial(int n, const std::vector<int>& ks) {
    int sum = 0;
    for (int k : ks) {
        if (k < 0) throw std::invalid_argument("multinomial: negative part");
        sum += k;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    Int r = factorial(n);
    for (int k : ks) r /= factorial(k);
    return r;
}

inline Int catalan(int m) { return binomial(2L * m, m) / (m + 1); }

}  // namespace mkls
