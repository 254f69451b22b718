#pragma once

#include <string>
#include <vector>

#include "uqfm/tensor.hpp"

namespace uqfm {

/// Skew-primitive legs for U_q(f_m(K)): Delta(E) = K^s (x) E + E (x) K^t
/// with t - s = m.
struct HopfParams {
    int s = 0;
    int t = 1;

    int m() const { return t - s; }
};

/// A candidate Hopf structure: coproduct images of the generators plus
/// antipode images. Presets are data; nothing downstream will apply one
/// that has not passed certify().
struct HopfPreset {
    AlgebraParams params;
    std::string name;
    TensorElement dE, dF, dK, dH;
    AlgElement sE, sF, sK, sH;
    bool certified = false;
    std::vector<std::string> certification_failures;

    HopfPreset(AlgebraParams p)
        : params(p), dE(p), dF(p), dK(p), dH(p), sE(p), sF(p), sK(p), sH(p) {}
};

/// Standard OneParam preset with the group-like K^s first leg.
HopfPreset one_param_preset(int m, HopfParams hp);

/// The skew-primitive form with an E^s first leg. Only constructible for
/// s >= 0; certification is expected to fail for s >= 1.
HopfPreset one_param_e_leg_preset(int m, HopfParams hp);

/// Default TwoParam preset: Delta(E) = E (x) 1 + H^m (x) E,
/// Delta(F) = F (x) K^m + 1 (x) F, K and H group-like.
HopfPreset two_param_default_preset(int m);

/// Checks every defining relation under the coproduct images, exactly.
/// Fills certified / certification_failures on the returned copy.
HopfPreset certify(HopfPreset preset);

/// Multiplicative extension of the preset coproduct to any element.
TensorElement coproduct(const HopfPreset& preset, const AlgElement& x);

/// Counit: E, F -> 0 and K, H -> 1, extended multiplicatively.
FieldElem counit(const AlgElement& x);

/// Anti-multiplicative extension of the preset antipode.
AlgElement antipode(const HopfPreset& preset, const AlgElement& x);

struct HopfAxiomReport {
    bool coassociative = false;
    bool counit_ok = false;
    bool antipode_ok = false;
    std::vector<std::string> failures;

    bool all_ok() const { return coassociative && counit_ok && antipode_ok; }
};

/// Coassociativity, counit and antipode axioms on the generators.
HopfAxiomReport check_hopf_axioms(const HopfPreset& preset);

struct MisprintProbe {
    int s = 0, t = 0;
    bool k_leg_certifies = false;
    bool e_leg_constructible = false;
    bool e_leg_certifies = false;
    bool legs_coincide = false; // s = 0 makes E^s and K^s the same leg
};

/// Compares the K^s-leg and E^s-leg coproduct candidates at several (s,t)
/// and reports which certify. Settles the first tensor factor of Delta(E)
/// computationally instead of by fiat.
std::vector<MisprintProbe> coproduct_leg_probe(int m);

} // namespace uqfm
