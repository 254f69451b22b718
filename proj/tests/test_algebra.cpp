#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/step_rewriter.hpp"
#include "uqfm/error.hpp"
#include "uqfm/parallel.hpp"
#include "uqfm/rand.hpp"

using namespace uqfm;

namespace {

const AlgebraParams TP1{1, Variant::TwoParam};

AlgElement el(AlgebraParams p, const std::string& s) { return AlgElement::parse(p, s); }

FieldElem fe(const std::string& s) { return FieldElem::parse(s); }

} // namespace

TEST_CASE("defining relations normalize to zero") {
    for (int m : {1, 2, 3}) {
        for (Variant v : {Variant::TwoParam, Variant::OneParam}) {
            AlgebraParams p{m, v};
            AlgElement E = AlgElement::gen_E(p), F = AlgElement::gen_F(p);
            AlgElement K = AlgElement::gen_K(p), Ki = AlgElement::gen_K(p, -1);
            AlgElement H = AlgElement::gen_H(p), Hi = AlgElement::gen_H(p, -1);
            FieldElem q2 = FieldElem::q_pow(2);

            CHECK((K * E - E.scaled(q2) * K).is_zero());
            CHECK((K * F - F.scaled(q2.inv()) * K).is_zero());
            CHECK((H * E - E.scaled(q2.inv()) * H).is_zero());
            CHECK((H * F - F.scaled(q2) * H).is_zero());
            CHECK((K * Ki - AlgElement::one(p)).is_zero());
            CHECK((H * Hi - AlgElement::one(p)).is_zero());
            CHECK((K * H - H * K).is_zero());
            CHECK((E * F - F * E - AlgElement::f_m(p)).is_zero());
        }
    }
}

TEST_CASE("worked products") {
    AlgElement E = AlgElement::gen_E(TP1), F = AlgElement::gen_F(TP1);
    AlgElement K = AlgElement::gen_K(TP1);

    CHECK(E * F == F * E + AlgElement::f_m(TP1));
    CHECK(AlgElement::gen_K(TP1) * AlgElement::gen_K(TP1, -1) == AlgElement::one(TP1));

    // E K = q^-2 K E, stored on the monomial (0,1,0,1)
    AlgElement ek = E * K;
    REQUIRE(ek.terms().size() == 1);
    CHECK(ek.terms().begin()->first == Monomial{0, 1, 0, 1});
    CHECK(ek.terms().begin()->second == FieldElem::q_pow(-2));

    // E F^2 = F^2 E + F ((1+q^-2)K - (1+q^2)H)/(q - q^-1), m = 1
    AlgElement lhs = E * (F * F);
    AlgElement expected =
        el(TP1, "F^2 E") +
        el(TP1, "F K").scaled(fe("(1+q^-2)/(q-q^-1)")) -
        el(TP1, "F H").scaled(fe("(1+q^2)/(q-q^-1)"));
    CHECK(lhs == expected);
    CHECK(lhs == testsupport::step_rewrite_product(E, F * F));
}

TEST_CASE("engine agrees with the single-step rewriter") {
    RandomSource rng(424242);
    for (int t = 0; t < 60; ++t) {
        AlgebraParams p{static_cast<int>(rng.int_in(1, 3)),
                        rng.coin() ? Variant::TwoParam : Variant::OneParam};
        AlgElement x = rng.element(p, 2, 2, 2);
        AlgElement y = rng.element(p, 2, 2, 2);
        CHECK(x * y == testsupport::step_rewrite_product(x, y));
    }
}

TEST_CASE("associativity on random monomial triples") {
    RandomSource rng(1618);
    for (int t = 0; t < 200; ++t) {
        AlgebraParams p{static_cast<int>(rng.int_in(1, 3)),
                        rng.coin() ? Variant::TwoParam : Variant::OneParam};
        AlgElement x = AlgElement::term(p, rng.monomial(p, 3, 3), rng.field_elem(1, 2));
        AlgElement y = AlgElement::term(p, rng.monomial(p, 3, 3), rng.field_elem(1, 2));
        AlgElement z = AlgElement::term(p, rng.monomial(p, 3, 3), rng.field_elem(1, 2));
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("serial and OpenMP product paths are bit-identical") {
    RandomSource rng(31337);
    AlgebraParams p{2, Variant::TwoParam};
    AlgElement x = rng.element(p, 4, 3, 2);
    AlgElement y = rng.element(p, 4, 3, 2);
    par::set_mode(par::Mode::Serial);
    AlgElement serial = x * y;
    par::set_mode(par::Mode::OpenMP);
    AlgElement parallel = x * y;
    par::set_mode(par::Mode::OpenMP);
    CHECK(serial == parallel);
}

TEST_CASE("param mismatch is rejected") {
    AlgebraParams p2{2, Variant::TwoParam};
    CHECK_THROWS_AS(AlgElement::gen_E(TP1) * AlgElement::gen_F(p2), const Error&);
}

TEST_CASE("commutators") {
    AlgElement E = AlgElement::gen_E(TP1), F = AlgElement::gen_F(TP1);
    AlgElement K = AlgElement::gen_K(TP1), H = AlgElement::gen_H(TP1);
    CHECK(E.commutator(F) == AlgElement::f_m(TP1));
    CHECK(K.commutator(H).is_zero());

    for (int m : {1, 2}) {
        AlgebraParams p{m, Variant::TwoParam};
        AlgElement omega = AlgElement::casimir(p);
        CHECK(omega.commutator(AlgElement::gen_E(p)).is_zero());
        CHECK(omega.commutator(AlgElement::gen_F(p)).is_zero());
        CHECK(omega.commutator(AlgElement::gen_K(p)).is_zero());
        CHECK(omega.commutator(AlgElement::gen_H(p)).is_zero());
    }
}

TEST_CASE("casimir forms agree") {
    for (int m : {1, 2, 3}) {
        for (Variant v : {Variant::TwoParam, Variant::OneParam}) {
            AlgebraParams p{m, v};
            CHECK(AlgElement::casimir(p) == AlgElement::casimir_ef_form(p));
        }
    }
    // m = 1 display: FE + (q^2 K + H)/((q^2-1)*(q-q^-1))
    AlgElement omega = AlgElement::casimir(TP1);
    AlgElement expected = el(TP1, "F E") + el(TP1, "K").scaled(fe("q^2/((q^2-1)*(q-q^-1))")) +
                          el(TP1, "H").scaled(fe("1/((q^2-1)*(q-q^-1))"));
    CHECK(omega == expected);
}

TEST_CASE("center membership") {
    for (int m : {1, 2}) {
        AlgebraParams p{m, Variant::TwoParam};
        AlgElement omega = AlgElement::casimir(p);

        auto c1 = center_membership(omega);
        REQUIRE(c1.has_value());
        CHECK(c1->coeffs.size() == 1);
        CHECK(c1->coeffs.count({1, 0}) == 1);
        CHECK(c1->to_alg_element(p) == omega);

        CHECK_FALSE(center_membership(AlgElement::gen_E(p)).has_value());
        CHECK_FALSE(center_membership(AlgElement::gen_F(p)).has_value());
        CHECK_FALSE(center_membership(AlgElement::gen_K(p)).has_value());

        // Omega^2 (KH)^-1 and mixed polynomials reconstruct exactly
        AlgElement kh_inv = AlgElement::term(p, {0, -1, -1, 0}, FieldElem(1));
        AlgElement x = omega * omega * kh_inv;
        auto c2 = center_membership(x);
        REQUIRE(c2.has_value());
        CHECK(c2->coeffs.size() == 1);
        CHECK(c2->coeffs.count({2, -1}) == 1);
        CHECK(c2->to_alg_element(p) == x);

        for (int k = 0; k <= 3; ++k) {
            for (int l = -3; l <= 3; ++l) {
                AlgElement y =
                    omega.pow(k) * AlgElement::term(p, {0, l, l, 0}, FieldElem(2)) + omega;
                auto c3 = center_membership(y);
                REQUIRE(c3.has_value());
                CHECK(c3->to_alg_element(p) == y);
            }
        }
    }
}

TEST_CASE("eta projection") {
    FieldElem e = fe("q+2");
    // pi(F K E) = e F K, certified by factoring out (E - e)
    AlgElement fke = el(TP1, "F K E");
    AlgElement proj = eta_projection(fke, e);
    CHECK(proj == el(TP1, "F K").scaled(e));
    AlgElement rem = fke - proj;
    CHECK(rem == el(TP1, "F K") * (AlgElement::gen_E(TP1) - AlgElement::one(TP1).scaled(e)));

    // pi(Omega) = e F + (q^{2m} K^m + H^m)/((q^{2m}-1)*(q-q^-1))
    for (int m : {1, 2}) {
        AlgebraParams p{m, Variant::TwoParam};
        AlgElement pi_omega = eta_projection(AlgElement::casimir(p), e);
        AlgElement expected =
            AlgElement::gen_F(p).scaled(e) +
            AlgElement::gen_K(p, m).scaled(
                fe("q^" + std::to_string(2 * m) + "/((q^" + std::to_string(2 * m) + "-1)*(q-q^-1))")) +
            AlgElement::gen_H(p, m).scaled(
                fe("1/((q^" + std::to_string(2 * m) + "-1)*(q-q^-1))"));
        CHECK(pi_omega == expected);
    }

    CHECK(eta_projection(AlgElement::gen_K(TP1), e) == AlgElement::gen_K(TP1));
    CHECK_THROWS_AS(eta_projection(fke, FieldElem()), const Error&);
}

TEST_CASE("eta reduced action") {
    FieldElem e = fe("3/(q-1)");
    AlgElement E = AlgElement::gen_E(TP1);

    CHECK(eta_reduced_action(E, AlgElement::one(TP1), e).is_zero());

    AlgElement k_image = eta_reduced_action(E, AlgElement::gen_K(TP1), e);
    CHECK(k_image == AlgElement::gen_K(TP1).scaled(e * fe("q^-2-1")));

    AlgElement pi_omega = eta_projection(AlgElement::casimir(TP1), e);
    CHECK(eta_reduced_action(E, pi_omega, e).is_zero());

    CHECK_THROWS_AS(eta_reduced_action(AlgElement::gen_F(TP1), AlgElement::one(TP1), e),
                    const Error&);
    CHECK_THROWS_AS(eta_reduced_action(E, AlgElement::gen_E(TP1), e), const Error&);
}

TEST_CASE("eta multiplicativity lemmas") {
    RandomSource rng(777);
    FieldElem e = fe("q");
    AlgebraParams p{1, Variant::TwoParam};
    AlgElement omega = AlgElement::casimir(p);
    for (int t = 0; t < 25; ++t) {
        AlgElement u = rng.element(p, 3, 2, 2);
        // v central
        AlgElement v = omega.scaled(rng.field_elem(1, 2)) +
                       AlgElement::term(p, {0, 1, 1, 0}, rng.field_elem(1, 2));
        CHECK(eta_projection(u * v, e) == eta_projection(u, e) * eta_projection(v, e));
        // u already projected (E-degree 0)
        AlgElement u0 = eta_projection(u, e);
        AlgElement w = rng.element(p, 3, 2, 2);
        CHECK(eta_projection(u0 * w, e) == u0 * eta_projection(w, e));
    }
}

TEST_CASE("projection onto the one-parameter algebra") {
    AlgebraParams p1{1, Variant::OneParam};
    CHECK(project_to_one_param(AlgElement::gen_H(TP1)) == AlgElement::gen_K(p1, -1));
    CHECK(project_to_one_param(AlgElement::f_m(TP1)) == AlgElement::f_m(p1));
    CHECK(project_to_one_param(el(TP1, "K H")) == AlgElement::one(p1));

    RandomSource rng(888);
    for (int m : {1, 2}) {
        AlgebraParams p{m, Variant::TwoParam};
        for (int t = 0; t < 100; ++t) {
            AlgElement x = rng.element(p, 2, 2, 2);
            AlgElement y = rng.element(p, 2, 2, 2);
            CHECK(project_to_one_param(x * y) ==
                  project_to_one_param(x) * project_to_one_param(y));
        }
    }
}

TEST_CASE("canonical form is stable under identity operations") {
    RandomSource rng(4096);
    for (int t = 0; t < 100; ++t) {
        AlgebraParams p{static_cast<int>(rng.int_in(1, 3)),
                        rng.coin() ? Variant::TwoParam : Variant::OneParam};
        AlgElement x = rng.element(p, 4, 3, 3);
        AlgElement rebuilt(p);
        for (const auto& [m, c] : x.terms()) rebuilt.add_term(m, c);
        rebuilt = rebuilt + AlgElement::zero(p);
        rebuilt = rebuilt * AlgElement::one(p);
        rebuilt = AlgElement::one(p) * rebuilt;
        CHECK(rebuilt == x);
    }
}

TEST_CASE("element text round trip and normalization on input") {
    RandomSource rng(2025);
    for (int t = 0; t < 50; ++t) {
        AlgebraParams p{static_cast<int>(rng.int_in(1, 2)),
                        rng.coin() ? Variant::TwoParam : Variant::OneParam};
        AlgElement x = rng.element(p, 3, 2, 2);
        CHECK(AlgElement::parse(p, x.to_string()) == x);
    }
    // unnormalized input comes back in canonical order
    CHECK(el(TP1, "E F") == el(TP1, "F E") + AlgElement::f_m(TP1));
    CHECK(el(TP1, "3/(q-1) * F^2 K^-1 H^3 E") ==
          AlgElement::term(TP1, {2, -1, 3, 1}, fe("3/(q-1)")));
}
