#pragma once

#include "uqfm/hopf.hpp"
#include "uqfm/module.hpp"

namespace uqfm {

/// Pullback along pi_z with z = w^2 kept inside Q(q): E -> w^m E, F -> F,
/// K -> w K, H -> w K^-1. Input must be OneParam; output is TwoParam.
WeightModule pullback_pi_w(const WeightModule& m, const FieldElem& w);

/// One-dimensional TwoParam module with E = F = 0 and K = H = w.
WeightModule epsilon_w(int m, const FieldElem& w);

/// Module structure on A (x) B through a certified coproduct preset.
WeightModule tensor_product(const WeightModule& a, const WeightModule& b,
                            const HopfPreset& preset);

WeightModule direct_sum(const WeightModule& a, const WeightModule& b);

struct Summand {
    WeightModule module;
    int multiplicity = 0;
};

/// Splits a finite-dimensional weight module into irreducible chains:
/// highest weight vectors per weight space, F-ladders below each, exact
/// directness bookkeeping. Raises DecompositionFailure if the chains do
/// not exhaust the module.
std::vector<Summand> decompose_completely(const WeightModule& m);

/// Finite-dimensional isomorphism test through canonical chain signatures
/// (weights plus E-ladder coefficients with F normalized to index shifts).
bool modules_isomorphic(const WeightModule& a, const WeightModule& b);

/// The (n+1)-dimensional irreducible of U_q(f_m(K)) with beta = q^n,
/// realized at the TwoParam point (f-condition alpha, q^n, q^-n) and folded.
WeightModule one_param_finite_irrep(int m, int n);

/// Reinterprets a TwoParam module with actH = actK^-1 as OneParam.
WeightModule to_one_param(const WeightModule& m);

/// Matrix of a normal-form element on a finite module.
SparseMat element_matrix(const WeightModule& m, const AlgElement& u);

} // namespace uqfm
