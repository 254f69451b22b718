#include "uqfm/tensor.hpp"

#include "uqfm/error.hpp"

namespace uqfm {

TensorElement TensorElement::one(AlgebraParams p) {
    TensorElement t(p);
    t.add_term(Monomial{}, Monomial{}, FieldElem(1));
    return t;
}

TensorElement TensorElement::of(const AlgElement& left, const AlgElement& right) {
    if (!(left.params() == right.params()))
        raise(Err::ParamMismatch, "tensor legs live in different algebras");
    TensorElement t(left.params());
    for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) t.add_term(ml, mr, cl * cr);
    return t;
}

void TensorElement::add_term(const Monomial& l, const Monomial& r, const FieldElem& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [mm, c] : o.terms_) r.add_term(mm.first, mm.second, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [mm, c] : o.terms_) r.add_term(mm.first, mm.second, -c);
    return r;
}

TensorElement TensorElement::scaled(const FieldElem& c) const {
    TensorElement r(params_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm, k * c);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement r(params_);
    for (const auto& [ma, ca] : terms_) {
        AlgElement la = AlgElement::term(params_, ma.first, FieldElem(1));
        AlgElement ra = AlgElement::term(params_, ma.second, FieldElem(1));
        for (const auto& [mb, cb] : o.terms_) {
            AlgElement lprod = la * AlgElement::term(params_, mb.first, FieldElem(1));
            AlgElement rprod = ra * AlgElement::term(params_, mb.second, FieldElem(1));
            FieldElem cc = ca * cb;
            for (const auto& [ml, cl] : lprod.terms())
                for (const auto& [mr, cr] : rprod.terms()) r.add_term(ml, mr, cc * cl * cr);
        }
    }
    return r;
}

TensorElement TensorElement::pow(int n) const {
    if (n < 0) {
        if (terms_.size() != 1) raise(Err::DomainViolation, "tensor pow: negative power");
        const auto& [mm, c] = *terms_.begin();
        const auto& [l, r] = mm;
        if (l.a || l.b || r.a || r.b)
            raise(Err::DomainViolation, "tensor pow: E/F legs are not invertible");
        TensorElement inv(params_);
        inv.add_term(Monomial{0, -l.i, -l.j, 0}, Monomial{0, -r.i, -r.j, 0}, c.inv());
        return inv.pow(-n);
    }
    TensorElement acc = one(params_);
    TensorElement base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

bool TensorElement::operator==(const TensorElement& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
}

AlgElement TensorElement::multiply_legs() const {
    AlgElement out(params_);
    for (const auto& [mm, c] : terms_) {
        AlgElement prod = AlgElement::term(params_, mm.first, c) *
                          AlgElement::term(params_, mm.second, FieldElem(1));
        out = out + prod;
    }
    return out;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mm, c] : terms_) {
        AlgElement l = AlgElement::term(params_, mm.first, c);
        AlgElement r = AlgElement::term(params_, mm.second, FieldElem(1));
        std::string t = "(" + l.to_string() + ") (x) (" + r.to_string() + ")";
        out += out.empty() ? t : " + " + t;
    }
    return out;
}

bool Tensor3::operator==(const Tensor3& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
}

void Tensor3::add_term(const std::array<Monomial, 3>& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

} // namespace uqfm
