#pragma once

#include <map>
#include <string>

#include "uqfm/numeric.hpp"

namespace uqfm {

/// Univariate polynomial in q with BigInt coefficients, stored sparsely.
/// The empty map is the zero polynomial; no zero coefficient is ever stored.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long value) : IntPoly(BigInt(value)) {}
    explicit IntPoly(const BigInt& constant);

    static IntPoly monomial(const BigInt& coeff, long exponent);

    bool is_zero() const { return coef_.empty(); }
    bool is_one() const;
    long degree() const;      // degree of 0 is -1 by convention
    long low_degree() const;  // smallest exponent with a nonzero coefficient
    const BigInt& leading_coeff() const;
    BigInt coeff(long exponent) const;
    const std::map<long, BigInt>& terms() const { return coef_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& c) const;
    bool operator==(const IntPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly shifted(long k) const; // multiply by q^k, k >= 0

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    IntPoly primitive_part() const;

    /// Quotient of an exact division. Aborts the invariant if o does not
    /// divide *this over the integers.
    IntPoly divide_exact(const IntPoly& o) const;

    /// Full gcd over Z[q]: positive leading coefficient, includes the
    /// integer content gcd. gcd(0, b) = |b| normalized.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    Rational eval(const Rational& q0) const;

    void add_term(long exponent, const BigInt& coeff);

private:
    std::map<long, BigInt> coef_;
};

} // namespace uqfm
