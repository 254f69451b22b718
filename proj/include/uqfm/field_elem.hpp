#pragma once

#include <string>

#include "uqfm/int_poly.hpp"

namespace uqfm {

/// Element of Q(q): a reduced fraction of integer polynomials.
///
/// Canonical form: gcd(num, den) = 1 over Z[q] (polynomial and integer
/// content), the denominator has a positive leading coefficient, and zero
/// is 0/1. Equality is therefore representation equality, and values are
/// immutable after construction.
class FieldElem {
public:
    FieldElem() : num_(), den_(1) {}
    FieldElem(long value) : num_(value), den_(1) {}
    explicit FieldElem(const BigInt& value) : num_(value), den_(1) {}
    explicit FieldElem(const Rational& value);
    FieldElem(IntPoly num, IntPoly den);

    static FieldElem q() { return q_pow(1); }
    static FieldElem q_pow(long n);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inv() const;
    FieldElem pow(long n) const;
    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// degree(num) - degree(den). Throws ZeroElement on 0.
    long net_degree() const;
    /// Order of vanishing at q = 0 (negative for a pole there).
    long valuation() const;

    /// Exact value at q = q0; throws PoleAtPoint when the denominator vanishes.
    Rational eval_at(const Rational& q0) const;

    std::string to_string() const;
    static FieldElem parse(const std::string& text);

private:
    void reduce();

    IntPoly num_, den_;
};

inline FieldElem operator*(long c, const FieldElem& x) { return FieldElem(c) * x; }

std::string poly_to_string(const IntPoly& p);

} // namespace uqfm
