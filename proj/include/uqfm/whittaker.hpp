#pragma once

#include <map>
#include <vector>

#include "uqfm/algebra.hpp"
#include "uqfm/module.hpp"

namespace uqfm {

/// Data of an irreducible Whittaker module: eta(E) = e, central character
/// (Omega, KH) -> (a, b), with e and b nonzero.
struct WhittakerData {
    FieldElem e;
    FieldElem a;
    FieldElem b;
    int m = 1;
    int window = 12;

    void validate() const;
};

/// Windowed realization of Y_{xi,eta} on the basis
/// { K^i w : 0 <= i <= window } u { H^j w : 1 <= j <= window }.
/// K and H act by shifts (this is not a weight module); E is diagonal.
/// K^-1 and H^-1 act through KH = b.
struct WhittakerModule {
    WhittakerData data;
    AlgebraParams params;
    std::vector<std::string> labels;
    SparseMat actE, actF, actK, actH;
    std::vector<bool> interior;
    std::vector<bool> safeK, safeH, safeF; // E is diagonal, always safe

    int dim() const { return static_cast<int>(labels.size()); }
    int pos_k(int i) const { return i; }
    int pos_h(int j) const { return data.window + j; }
    std::vector<int> interior_positions() const;
};

WhittakerModule build_whittaker_module(const WhittakerData& d);

/// Action of a normal-form element; negative K/H powers go through
/// KH = b. Raises BoundaryOverflow when a shift would leave the window.
Vec whittaker_act(const WhittakerModule& m, const AlgElement& u, const Vec& v);

/// Defining relations on the interior, plus Omega = a and KH = b.
RelationReport verify_whittaker_relations(const WhittakerModule& m);

/// Exact kernel of (E - e id) on the window; the expected answer is the
/// one-dimensional span of w.
std::vector<Vec> whittaker_vectors(const WhittakerModule& m);

/// True iff repeated safe applications of E, F, K, H to v span every
/// interior basis vector.
bool cyclicity_check(const WhittakerModule& m, const Vec& v);

/// For random small-degree u, checks u (Omega - a) w = 0, u (KH - b) w = 0
/// and u (E - e) w = 0 inside the window.
RelationReport annihilator_inclusion_check(const WhittakerModule& m, int samples,
                                           std::uint64_t seed);

/// One term of the A~ (x) W expansion: K^{k_exponent} times a polynomial
/// in pi(Omega) with Laurent coefficients in KH.
struct WFiltrationTerm {
    int k_exponent = 0;
    std::map<std::pair<int, int>, FieldElem> w_part; // (Omega^eta degree, KH exponent) -> c
};

/// Unique expansion of an E-degree-0 element over the Whittaker image of
/// the center, by descending induction on the F degree.
std::vector<WFiltrationTerm> filtration_decompose(const AlgElement& u, const FieldElem& e);

/// Expands the terms back through the algebra engine; must reproduce the
/// decomposed element exactly.
AlgElement filtration_reconstruct(const std::vector<WFiltrationTerm>& terms, const FieldElem& e,
                                  AlgebraParams params);

/// True iff { pi(Omega^k (KH)^l) : 0 <= k <= max_deg, |l| <= max_deg } is
/// linearly independent, by exact rank computation.
bool center_image_independence(int max_deg, const FieldElem& e, int m);

/// Dimension of the space of interior-supported linear maps commuting
/// with all four actions (window model of the endomorphism algebra).
int commutant_dimension(const WhittakerModule& m);

} // namespace uqfm
