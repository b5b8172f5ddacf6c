#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace oalg {

/// Exact integer coefficient type used throughout the library.
using Int = boost::multiprecision::cpp_int;

/// {k}: 1 if k is odd, 0 if k is even (the q = -1 unbalanced quantum integer).
inline int brace(long long k) { return static_cast<int>(((k % 2) + 2) % 2); }

/// (-1)^e.
inline int neg_one_pow(long long e) { return (((e % 2) + 2) % 2) ? -1 : 1; }

/// Binomial coefficient, 0 outside the Pascal triangle.
inline Int binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

/// n choose 2 as a plain integer, defined to be 0 for n < 2.
inline long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// n choose 3 as a plain integer, defined to be 0 for n < 3.
inline long long choose3(long long n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

inline std::string to_string(const Int& v) { return v.str(); }

} // namespace oalg
