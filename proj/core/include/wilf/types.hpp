#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wilf {

// All invariants fit comfortably in 64 bits at the scales this library
// targets (conductors up to a few hundred million, genus up to ~40).
using Int = std::int64_t;

// Exact rational, always kept in lowest terms with positive denominator.
// Comparisons are exact (no floating point anywhere in the library).
using Rational = boost::rational<Int>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in rational arithmetic");
    return out;
}

// base^exp with overflow detection on numerator and denominator. exp >= 0.
inline Rational rational_pow(const Rational& base, Int exp) {
    if (exp < 0) throw std::invalid_argument("rational_pow: negative exponent");
    Int num = 1, den = 1;
    for (Int i = 0; i < exp; ++i) {
        num = checked_mul(num, base.numerator());
        den = checked_mul(den, base.denominator());
    }
    return Rational(num, den);
}

}  // namespace wilf
