#include "uqfm/int_poly.hpp"

#include "uqfm/error.hpp"

namespace uqfm {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Rational(n);
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) raise(Err::DivisionByZero, "rational with zero denominator: " + text);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        raise(Err::ParseError, "not a rational number: " + text);
    }
}

IntPoly::IntPoly(const BigInt& constant) {
    if (constant != 0) coef_[0] = constant;
}

IntPoly IntPoly::monomial(const BigInt& coeff, long exponent) {
    IntPoly p;
    if (coeff != 0) p.coef_[exponent] = coeff;
    return p;
}

bool IntPoly::is_one() const {
    return coef_.size() == 1 && coef_.begin()->first == 0 && coef_.begin()->second == 1;
}

long IntPoly::degree() const { return coef_.empty() ? -1 : coef_.rbegin()->first; }

long IntPoly::low_degree() const { return coef_.empty() ? 0 : coef_.begin()->first; }

const BigInt& IntPoly::leading_coeff() const {
    static const BigInt zero(0);
    return coef_.empty() ? zero : coef_.rbegin()->second;
}

BigInt IntPoly::coeff(long exponent) const {
    auto it = coef_.find(exponent);
    return it == coef_.end() ? BigInt(0) : it->second;
}

void IntPoly::add_term(long exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = coef_.find(exponent);
    if (it == coef_.end()) {
        coef_[exponent] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) coef_.erase(it);
    }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [e, c] : o.coef_) r.add_term(e, c);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [e, c] : o.coef_) r.add_term(e, -c);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (const auto& [e, c] : coef_) r.coef_[e] = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    for (const auto& [ea, ca] : coef_)
        for (const auto& [eb, cb] : o.coef_) r.add_term(ea + eb, ca * cb);
    return r;
}

IntPoly IntPoly::operator*(const BigInt& c) const {
    IntPoly r;
    if (c == 0) return r;
    for (const auto& [e, a] : coef_) r.coef_[e] = a * c;
    return r;
}

IntPoly IntPoly::shifted(long k) const {
    IntPoly r;
    for (const auto& [e, c] : coef_) r.coef_[e + k] = c;
    return r;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& [e, c] : coef_) {
        g = big_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    IntPoly r;
    for (const auto& [e, c] : coef_) r.coef_[e] = c / g;
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& o) const {
    if (o.is_zero()) raise(Err::DivisionByZero, "exact division by zero polynomial");
    IntPoly rem = *this;
    IntPoly quot;
    const long dego = o.degree();
    const BigInt& lco = o.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= dego) {
        BigInt lc = rem.leading_coeff();
        if (!mpz_divisible_p(lc.get_mpz_t(), lco.get_mpz_t()))
            raise(Err::Internal, "divide_exact: inexact leading coefficient");
        BigInt qc = lc / lco;
        long qe = rem.degree() - dego;
        quot.add_term(qe, qc);
        rem = rem - o.shifted(qe) * qc;
    }
    if (!rem.is_zero()) raise(Err::Internal, "divide_exact: nonzero remainder");
    return quot;
}

namespace {

// Pseudo-remainder of primitive parts; used by the primitive PRS below.
IntPoly pseudo_rem(IntPoly u, const IntPoly& v) {
    const long degv = v.degree();
    const BigInt& lcv = v.leading_coeff();
    while (!u.is_zero() && u.degree() >= degv) {
        long shift = u.degree() - degv;
        BigInt lcu = u.leading_coeff();
        u = u * lcv - v.shifted(shift) * lcu;
    }
    return u;
}

} // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.leading_coeff() < 0 ? -b : b;
    if (b.is_zero()) return a.leading_coeff() < 0 ? -a : a;

    BigInt cont = big_gcd(a.content(), b.content());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v);
        u = v;
        v = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    IntPoly g = u * cont;
    if (g.leading_coeff() < 0) g = -g;
    return g;
}

Rational IntPoly::eval(const Rational& q0) const {
    Rational acc(0);
    long prev = -1;
    Rational power(1);
    // Horner over the sparse support, ascending exponents.
    for (const auto& [e, c] : coef_) {
        if (prev < 0) {
            power = 1;
            for (long k = 0; k < e; ++k) power *= q0;
        } else {
            for (long k = prev; k < e; ++k) power *= q0;
        }
        acc += Rational(c) * power;
        prev = e;
    }
    return acc;
}

} // namespace uqfm
