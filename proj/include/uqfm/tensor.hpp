#pragma once

#include <array>
#include <map>

#include "uqfm/algebra.hpp"

namespace uqfm {

/// Element of U (x) U with both legs in normal form; multiplication is
/// legwise through the rewriting engine.
class TensorElement {
public:
    explicit TensorElement(AlgebraParams params) : params_(params) {}

    static TensorElement zero(AlgebraParams p) { return TensorElement(p); }
    static TensorElement one(AlgebraParams p);
    static TensorElement of(const AlgElement& left, const AlgElement& right);

    const AlgebraParams& params() const { return params_; }
    const std::map<std::pair<Monomial, Monomial>, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;
    TensorElement scaled(const FieldElem& c) const;
    TensorElement pow(int n) const;
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    TensorElement commutator(const TensorElement& o) const { return *this * o - o * *this; }

    /// Collapses u (x) v to u*v.
    AlgElement multiply_legs() const;

    /// Applies a function to one leg, distributing over terms. Used for
    /// (eps (x) id) and (S (x) id) style maps.
    template <class Fn>
    TensorElement map_leg(int leg, Fn&& fn) const;

    void add_term(const Monomial& l, const Monomial& r, const FieldElem& c);

    std::string to_string() const;

private:
    AlgebraParams params_;
    std::map<std::pair<Monomial, Monomial>, FieldElem> terms_;
};

/// Triple tensors, used only to state coassociativity checks.
class Tensor3 {
public:
    explicit Tensor3(AlgebraParams params) : params_(params) {}

    const std::map<std::array<Monomial, 3>, FieldElem>& terms() const { return terms_; }
    bool operator==(const Tensor3& o) const;
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    void add_term(const std::array<Monomial, 3>& m, const FieldElem& c);

private:
    AlgebraParams params_;
    std::map<std::array<Monomial, 3>, FieldElem> terms_;
};

template <class Fn>
TensorElement TensorElement::map_leg(int leg, Fn&& fn) const {
    TensorElement out(params_);
    for (const auto& [mm, c] : terms_) {
        AlgElement image = fn(AlgElement::term(params_, leg == 0 ? mm.first : mm.second, FieldElem(1)));
        for (const auto& [m2, c2] : image.terms()) {
            if (leg == 0)
                out.add_term(m2, mm.second, c * c2);
            else
                out.add_term(mm.first, m2, c * c2);
        }
    }
    return out;
}

} // namespace uqfm
