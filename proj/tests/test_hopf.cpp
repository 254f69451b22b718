#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqfm/error.hpp"
#include "uqfm/hopf.hpp"
#include "uqfm/rand.hpp"

using namespace uqfm;

TEST_CASE("K-leg preset certifies for (s,t) = (0,m)") {
    for (int m : {1, 2}) {
        HopfPreset preset = certify(one_param_preset(m, {0, m}));
        CHECK(preset.certified);
        CHECK(preset.certification_failures.empty());
    }
}

TEST_CASE("generator images") {
    HopfPreset preset = certify(one_param_preset(1, {0, 1}));
    AlgebraParams p = preset.params;

    CHECK(coproduct(preset, AlgElement::gen_K(p)) ==
          TensorElement::of(AlgElement::gen_K(p), AlgElement::gen_K(p)));
    CHECK(counit(AlgElement::gen_E(p)).is_zero());
    CHECK(counit(AlgElement::gen_F(p)).is_zero());
    CHECK(counit(AlgElement::gen_K(p)).is_one());
    CHECK(counit(AlgElement::gen_K(p, -1)).is_one());
    // S(E) = -K^{-s} E K^{-t} with s=0, t=1
    CHECK(antipode(preset, AlgElement::gen_E(p)) ==
          -(AlgElement::gen_E(p) * AlgElement::gen_K(p, -1)));
    CHECK(antipode(preset, AlgElement::gen_K(p)) == AlgElement::gen_K(p, -1));
}

TEST_CASE("hopf axioms hold on generators") {
    for (int m : {1, 2}) {
        for (HopfParams hp : {HopfParams{0, m}, HopfParams{-1, m - 1}}) {
            HopfPreset preset = certify(one_param_preset(m, hp));
            REQUIRE(preset.certified);
            HopfAxiomReport report = check_hopf_axioms(preset);
            CHECK(report.coassociative);
            CHECK(report.counit_ok);
            CHECK(report.antipode_ok);
        }
    }
}

TEST_CASE("coproduct and antipode are (anti)multiplicative") {
    RandomSource rng(606);
    HopfPreset preset = certify(one_param_preset(1, {0, 1}));
    AlgebraParams p = preset.params;
    for (int t = 0; t < 15; ++t) {
        AlgElement x = rng.element(p, 2, 2, 2);
        AlgElement y = rng.element(p, 2, 2, 2);
        CHECK(coproduct(preset, x * y) == coproduct(preset, x) * coproduct(preset, y));
        CHECK(antipode(preset, x * y) == antipode(preset, y) * antipode(preset, x));
    }
}

TEST_CASE("the E^s leg fails where it differs from K^s") {
    for (int m : {1, 2}) {
        auto probes = coproduct_leg_probe(m);
        REQUIRE(probes.size() == 2);

        CHECK(probes[0].s == 0);
        CHECK(probes[0].k_leg_certifies);
        CHECK(probes[0].legs_coincide);
        CHECK(probes[0].e_leg_certifies); // E^0 = K^0, same preset

        CHECK(probes[1].s == 1);
        CHECK(probes[1].k_leg_certifies);
        CHECK(probes[1].e_leg_constructible);
        CHECK_FALSE(probes[1].e_leg_certifies);
    }
}

TEST_CASE("two-param default preset certifies and satisfies the axioms") {
    for (int m : {1, 2}) {
        HopfPreset preset = certify(two_param_default_preset(m));
        CHECK(preset.certified);
        HopfAxiomReport report = check_hopf_axioms(preset);
        CHECK(report.all_ok());
    }
}

TEST_CASE("delta of [E,F] reproduces delta of f_m") {
    for (int m : {1, 2}) {
        HopfPreset preset = certify(one_param_preset(m, {0, m}));
        TensorElement lhs = preset.dE.commutator(preset.dF);
        TensorElement rhs = coproduct(preset, AlgElement::f_m(preset.params));
        CHECK(lhs == rhs);
    }
}
