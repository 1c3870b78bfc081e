#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stuffle {

// Coefficient type of the word algebra. All products in this library have
// integer coefficients, so no rational normalization is ever needed.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient as an exact integer. Returns 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace stuffle
