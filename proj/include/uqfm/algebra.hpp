#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqfm/field_elem.hpp"

namespace uqfm {

enum class Variant { TwoParam, OneParam };

/// Which algebra we are in: U_q(f_m(K,H)) for TwoParam, U_q(f_m(K)) for
/// OneParam (H folded into K^-1, so monomials carry no H exponent).
struct AlgebraParams {
    int m = 1;
    Variant variant = Variant::TwoParam;

    bool operator==(const AlgebraParams& o) const = default;
};

/// Canonical word F^a K^i H^j E^b. OneParam keeps j = 0.
struct Monomial {
    int a = 0; // F exponent, >= 0
    int i = 0; // K exponent
    int j = 0; // H exponent
    int b = 0; // E exponent, >= 0

    bool operator==(const Monomial& o) const = default;
    auto operator<=>(const Monomial& o) const = default;

    bool is_identity() const { return a == 0 && i == 0 && j == 0 && b == 0; }
};

/// Element of the algebra in normal form: a finite Monomial -> Q(q) map
/// with no stored zeros. All operations are pure; products rewrite
/// everything back into canonical order.
class AlgElement {
public:
    explicit AlgElement(AlgebraParams params) : params_(params) {}

    static AlgElement zero(AlgebraParams p) { return AlgElement(p); }
    static AlgElement one(AlgebraParams p);
    static AlgElement term(AlgebraParams p, Monomial m, FieldElem c);
    static AlgElement gen_E(AlgebraParams p) { return term(p, {0, 0, 0, 1}, FieldElem(1)); }
    static AlgElement gen_F(AlgebraParams p) { return term(p, {1, 0, 0, 0}, FieldElem(1)); }
    static AlgElement gen_K(AlgebraParams p, int power = 1);
    static AlgElement gen_H(AlgebraParams p, int power = 1);

    /// f_m: (K^m - H^m)/(q - q^-1), with H^m read as K^-m in OneParam.
    static AlgElement f_m(AlgebraParams p);

    /// Casimir in FE form. Both variants supported; OneParam substitutes
    /// H^m -> K^-m.
    static AlgElement casimir(AlgebraParams p);
    /// The equivalent EF form of the Casimir; must normalize equal to
    /// casimir(), which the verification suites check.
    static AlgElement casimir_ef_form(AlgebraParams p);

    const AlgebraParams& params() const { return params_; }
    const std::map<Monomial, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_e_degree() const;
    int max_f_degree() const;

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator-() const;
    AlgElement operator*(const AlgElement& o) const; // normal_form_product
    AlgElement scaled(const FieldElem& c) const;
    AlgElement pow(int n) const;
    bool operator==(const AlgElement& o) const;
    bool operator!=(const AlgElement& o) const { return !(*this == o); }

    AlgElement commutator(const AlgElement& o) const { return *this * o - o * *this; }

    void add_term(const Monomial& m, const FieldElem& c);

    std::string to_string() const;
    static AlgElement parse(AlgebraParams p, const std::string& text);

private:
    void check_params(const AlgElement& o) const;

    AlgebraParams params_;
    std::map<Monomial, FieldElem> terms_;
};

/// Polynomial in the Casimir with Laurent coefficients in KH:
/// coeffs[(k, l)] * Omega^k * (KH)^l summed over the map.
struct CenterPoly {
    std::map<std::pair<int, int>, FieldElem> coeffs;

    AlgElement to_alg_element(AlgebraParams p) const;
    std::string to_string() const;
};

/// Some(p) iff x = p(Omega, (KH)^{\pm 1}); None for non-central input.
std::optional<CenterPoly> center_membership(const AlgElement& x);

/// Substitutes E -> e in the normal form (the projection onto
/// U_q(F, K^{\pm1}, H^{\pm1}) along U_q(f)·ker(eta)). e must be nonzero.
AlgElement eta_projection(const AlgElement& x, const FieldElem& e);

/// Twisted action x • v = (x v)^eta - eta(x) v for x in U_q(E) and v of
/// E-degree zero.
AlgElement eta_reduced_action(const AlgElement& x, const AlgElement& v, const FieldElem& e);

/// eta extended to U_q(E): E^b -> e^b.
FieldElem eta_character(const AlgElement& x, const FieldElem& e);

/// The surjection U_q(f_m(K,H)) -> U_q(f_m(K)): E,F,K fixed, H -> K^-1.
AlgElement project_to_one_param(const AlgElement& x);

} // namespace uqfm
