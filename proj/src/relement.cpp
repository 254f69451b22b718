#include "uqfm/relement.hpp"

#include "uqfm/error.hpp"

namespace uqfm {

RElement RElement::term(int p, int i, int j, FieldElem c) {
    RElement r;
    r.add_term(p, i, j, c);
    return r;
}

void RElement::add_term(int p, int i, int j, const FieldElem& c) {
    if (p < 0) raise(Err::Internal, "negative xi exponent");
    if (c.is_zero()) return;
    Key key{p, i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RElement RElement::operator+(const RElement& o) const {
    RElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    return r;
}

RElement RElement::operator-(const RElement& o) const {
    RElement r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return r;
}

RElement RElement::operator-() const {
    RElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

RElement RElement::operator*(const RElement& o) const {
    RElement r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
                       std::get<2>(ka) + std::get<2>(kb), ca * cb);
    return r;
}

RElement RElement::scaled(const FieldElem& c) const {
    RElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

RElement RElement::pow(int n) const {
    if (n < 0) raise(Err::DomainViolation, "RElement::pow needs n >= 0");
    RElement acc = one();
    RElement base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

std::string RElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    auto append_pow = [](std::string& s, const char* name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += " ";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    };
    for (const auto& [k, c] : terms_) {
        auto [p, i, j] = k;
        std::string gens;
        append_pow(gens, "xi", p);
        append_pow(gens, "K", i);
        append_pow(gens, "H", j);
        std::string t = gens.empty() ? c.to_string()
                        : c.is_one() ? gens
                                     : c.to_string() + " * " + gens;
        out += out.empty() ? t : " + " + t;
    }
    return out;
}

RElement theta_shift_of_xi(long n, int m) {
    FieldElem qmq = FieldElem::q_pow(1) - FieldElem::q_pow(-1);
    FieldElem ck, ch;
    if (n >= 0) {
        // theta^n(xi) = xi + (sum_{k=1..n} q^{-2km} K^m - sum_{k=1..n} q^{2km} H^m)/(q - q^-1)
        for (long k = 1; k <= n; ++k) {
            ck = ck + FieldElem::q_pow(-2 * k * m);
            ch = ch + FieldElem::q_pow(2 * k * m);
        }
    } else {
        // theta^{-n}(xi) = xi - (sum_{k=0..n-1} q^{2km} K^m - sum_{k=0..n-1} q^{-2km} H^m)/(q - q^-1)
        for (long k = 0; k < -n; ++k) {
            ck = ck - FieldElem::q_pow(2 * k * m);
            ch = ch - FieldElem::q_pow(-2 * k * m);
        }
    }
    RElement shift;
    shift.add_term(0, m, 0, ck / qmq);
    shift.add_term(0, 0, m, -(ch / qmq));
    return shift;
}

RElement theta_apply(const RElement& r, long n, int m) {
    if (n == 0) return r;
    RElement xi_n = RElement::xi() + theta_shift_of_xi(n, m);
    RElement out;
    for (const auto& [k, c] : r.terms()) {
        auto [p, i, j] = k;
        FieldElem scale = c * FieldElem::q_pow(-2 * n * i + 2 * n * j);
        out = out + xi_n.pow(p).scaled(scale) * RElement::term(0, i, j, FieldElem(1));
    }
    return out;
}

AlgElement embed_in_algebra(const RElement& r, AlgebraParams params) {
    AlgElement xi_alg = AlgElement::gen_E(params) * AlgElement::gen_F(params);
    AlgElement out(params);
    for (const auto& [k, c] : r.terms()) {
        auto [p, i, j] = k;
        AlgElement t = xi_alg.pow(p).scaled(c);
        Monomial kh = (params.variant == Variant::TwoParam) ? Monomial{0, i, j, 0}
                                                            : Monomial{0, i - j, 0, 0};
        out = out + t * AlgElement::term(params, kh, FieldElem(1));
    }
    return out;
}

} // namespace uqfm
