#include "uqfm/field_elem.hpp"

#include <cctype>

#include "uqfm/error.hpp"

namespace uqfm {

FieldElem::FieldElem(const Rational& value)
    : num_(BigInt(value.get_num())), den_(BigInt(value.get_den())) {
    reduce();
}

FieldElem::FieldElem(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) raise(Err::DivisionByZero, "zero denominator");
    reduce();
}

FieldElem FieldElem::q_pow(long n) {
    if (n >= 0) return FieldElem(IntPoly::monomial(1, n), IntPoly(1));
    return FieldElem(IntPoly(1), IntPoly::monomial(1, -n));
}

void FieldElem::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    if (o.is_zero()) return *this;
    return FieldElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) return FieldElem();
    if (is_one()) return o;
    if (o.is_one()) return *this;
    // Cross-reduce first to keep the single gcd calls small.
    IntPoly g1 = IntPoly::gcd(num_, o.den_);
    IntPoly g2 = IntPoly::gcd(o.num_, den_);
    IntPoly a = g1.is_one() ? num_ : num_.divide_exact(g1);
    IntPoly d = g1.is_one() ? o.den_ : o.den_.divide_exact(g1);
    IntPoly c = g2.is_one() ? o.num_ : o.num_.divide_exact(g2);
    IntPoly b = g2.is_one() ? den_ : den_.divide_exact(g2);
    return FieldElem(a * c, b * d);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    if (o.is_zero()) raise(Err::DivisionByZero, "division by zero field element");
    return *this * o.inv();
}

FieldElem FieldElem::inv() const {
    if (is_zero()) raise(Err::DivisionByZero, "inverse of zero");
    return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    FieldElem acc(1);
    FieldElem base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

long FieldElem::net_degree() const {
    if (is_zero()) raise(Err::ZeroElement, "net_degree of zero");
    return num_.degree() - den_.degree();
}

long FieldElem::valuation() const {
    if (is_zero()) raise(Err::ZeroElement, "valuation of zero");
    return num_.low_degree() - den_.low_degree();
}

Rational FieldElem::eval_at(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0) raise(Err::PoleAtPoint, "denominator vanishes at q = " + uqfm::to_string(q0));
    return num_.eval(q0) / d;
}

std::string poly_to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Descending exponents, compact signs: q^4+1, 3*q^2-q+5, -2*q.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? "-" : "+";
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

bool needs_parens(const IntPoly& p) { return p.terms().size() > 1; }

// Denominators render bare only when they would re-parse as a single
// factor: a positive constant or a plain power of q.
bool den_is_bare(const IntPoly& p) {
    if (p.terms().size() != 1) return false;
    const auto& [e, c] = *p.terms().begin();
    return c == 1 || e == 0;
}

} // namespace

std::string FieldElem::to_string() const {
    if (den_.is_one()) return poly_to_string(num_);
    std::string n = poly_to_string(num_);
    if (needs_parens(num_)) n = "(" + n + ")";
    std::string d = poly_to_string(den_);
    if (!den_is_bare(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Parser for the field-element grammar: integers, q, ^, + - * /, parentheses.

namespace {

class FieldParser {
public:
    explicit FieldParser(const std::string& text) : s_(text) {}

    FieldElem run() {
        FieldElem v = expr();
        skip_ws();
        if (pos_ != s_.size()) raise(Err::ParseError, "trailing input at '" + rest() + "'");
        return v;
    }

private:
    FieldElem expr() {
        FieldElem v = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    FieldElem term() {
        FieldElem v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                v = v / factor();
            } else {
                return v;
            }
        }
    }

    FieldElem factor() {
        skip_ws();
        if (accept('-')) return -factor();
        FieldElem v = atom();
        skip_ws();
        if (accept('^')) {
            long e = integer();
            v = v.pow(e);
        }
        return v;
    }

    FieldElem atom() {
        skip_ws();
        if (accept('(')) {
            FieldElem v = expr();
            skip_ws();
            if (!accept(')')) raise(Err::ParseError, "expected ')' at '" + rest() + "'");
            return v;
        }
        if (pos_ < s_.size() && s_[pos_] == 'q') {
            ++pos_;
            return FieldElem::q();
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return FieldElem(BigInt(s_.substr(start, pos_ - start)));
        }
        raise(Err::ParseError, "unexpected input at '" + rest() + "'");
    }

    long integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            raise(Err::ParseError, "expected integer exponent at '" + rest() + "'");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string rest() const { return s_.substr(pos_, 16); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

FieldElem FieldElem::parse(const std::string& text) { return FieldParser(text).run(); }

} // namespace uqfm
