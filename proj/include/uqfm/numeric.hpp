#pragma once

#include <gmpxx.h>
#include <string>

namespace uqfm {

// Arbitrary-precision integers and rationals. GMP backs both; everything
// downstream treats them as plain value types.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Parses "p" or "p/q" with arbitrary-precision parts.
Rational parse_rational(const std::string& text);

} // namespace uqfm
