#pragma once

#include <map>
#include <string>
#include <tuple>

#include "uqfm/algebra.hpp"

namespace uqfm {

/// Element of the commutative base ring R = Q(q)[xi, K^{\pm1}, H^{\pm1}]
/// of the hyperbolic realization, with xi = EF.
class RElement {
public:
    using Key = std::tuple<int, int, int>; // (xi exponent >= 0, K exponent, H exponent)

    RElement() = default;

    static RElement zero() { return RElement(); }
    static RElement one() { return term(0, 0, 0, FieldElem(1)); }
    static RElement xi() { return term(1, 0, 0, FieldElem(1)); }
    static RElement K(int power = 1) { return term(0, power, 0, FieldElem(1)); }
    static RElement H(int power = 1) { return term(0, 0, power, FieldElem(1)); }
    static RElement term(int p, int i, int j, FieldElem c);

    const std::map<Key, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RElement operator+(const RElement& o) const;
    RElement operator-(const RElement& o) const;
    RElement operator-() const;
    RElement operator*(const RElement& o) const;
    RElement scaled(const FieldElem& c) const;
    RElement pow(int n) const; // n >= 0
    bool operator==(const RElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RElement& o) const { return !(*this == o); }

    void add_term(int p, int i, int j, const FieldElem& c);

    std::string to_string() const;

private:
    std::map<Key, FieldElem> terms_;
};

/// theta^n on R for the f_m family: K -> q^{-2n} K, H -> q^{2n} H, and
/// xi -> xi + (geometric sums in q^{2m}) K^m/H^m from the closed form.
/// Works for both signs of n.
RElement theta_apply(const RElement& r, long n, int m);

/// The xi-shift theta^n(xi) - xi as an RElement (no xi part).
RElement theta_shift_of_xi(long n, int m);

/// Embeds R into the algebra: xi -> normal form of EF, K,H -> generators.
AlgElement embed_in_algebra(const RElement& r, AlgebraParams params);

} // namespace uqfm
