#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqfm/error.hpp"
#include "uqfm/modcat.hpp"
#include "uqfm/rand.hpp"

using namespace uqfm;

namespace {

FieldElem fe(const std::string& s) { return FieldElem::parse(s); }

HopfPreset certified_one_param(int m) { return certify(one_param_preset(m, {0, m})); }
HopfPreset certified_two_param(int m) { return certify(two_param_default_preset(m)); }

std::vector<int> summand_dims(const std::vector<Summand>& s) {
    std::vector<int> dims;
    for (const auto& x : s)
        for (int k = 0; k < x.multiplicity; ++k) dims.push_back(x.module.dim());
    std::sort(dims.begin(), dims.end(), std::greater<int>());
    return dims;
}

} // namespace

TEST_CASE("one-parameter irreducibles") {
    for (int m : {1, 2}) {
        for (int n = 0; n <= 3; ++n) {
            WeightModule mod = one_param_finite_irrep(m, n);
            CHECK(mod.dim() == n + 1);
            CHECK(mod.params.variant == Variant::OneParam);
            CHECK(verify_relations(mod).all_ok());
            CHECK(is_irreducible(mod));
        }
    }
}

TEST_CASE("tensor product structure") {
    HopfPreset preset = certified_one_param(1);
    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule three = one_param_finite_irrep(1, 2);

    WeightModule prod = tensor_product(two, two, preset);
    CHECK(prod.dim() == 4);
    CHECK(verify_relations(prod).all_ok());

    // weights multiply; beta1 beta2 q^-2 shows up twice
    auto weights = weight_decomposition(prod);
    REQUIRE(weights.size() == 3);
    CHECK(weights[0].k_eig == fe("q^2"));
    CHECK(weights[0].multiplicity == 1);
    CHECK(weights[1].k_eig == fe("1"));
    CHECK(weights[1].multiplicity == 2);
    CHECK(weights[2].k_eig == fe("q^-2"));

    CHECK(tensor_product(two, three, preset).dim() == 6);

    HopfPreset raw = one_param_preset(1, {0, 1});
    CHECK_THROWS_AS(tensor_product(two, two, raw), const Error&);
}

TEST_CASE("tensor products decompose with exact bookkeeping") {
    HopfPreset preset = certified_one_param(1);
    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule three = one_param_finite_irrep(1, 2);

    auto d22 = decompose_completely(tensor_product(two, two, preset));
    CHECK(summand_dims(d22) == std::vector<int>{3, 1});
    auto d23 = decompose_completely(tensor_product(two, three, preset));
    CHECK(summand_dims(d23) == std::vector<int>{4, 2});
    auto d33 = decompose_completely(tensor_product(three, three, preset));
    CHECK(summand_dims(d33) == std::vector<int>{5, 3, 1});

    for (const auto& s : d33) {
        CHECK(is_irreducible(s.module));
        CHECK(verify_relations(s.module).all_ok());
    }
}

TEST_CASE("decomposition of sums and reassembly") {
    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule three = one_param_finite_irrep(1, 2);

    auto single = decompose_completely(three);
    REQUIRE(single.size() == 1);
    CHECK(single[0].multiplicity == 1);
    CHECK(modules_isomorphic(single[0].module, three));

    WeightModule mm = direct_sum(two, two);
    auto dmm = decompose_completely(mm);
    REQUIRE(dmm.size() == 1);
    CHECK(dmm[0].multiplicity == 2);
    CHECK(modules_isomorphic(dmm[0].module, two));

    WeightModule mixed = direct_sum(two, three);
    auto dmx = decompose_completely(mixed);
    CHECK(summand_dims(dmx) == std::vector<int>{3, 2});
    // reassembling the summands is isomorphic to the input
    WeightModule rebuilt = direct_sum(dmx[0].module, dmx[1].module);
    if (rebuilt.dim() != mixed.dim()) rebuilt = direct_sum(dmx[1].module, dmx[0].module);
    CHECK(modules_isomorphic(rebuilt, mixed));

    CHECK_FALSE(is_irreducible(mm));
    CHECK_FALSE(casimir_scalar(direct_sum(one_param_finite_irrep(1, 0), two)).has_value());
}

TEST_CASE("tensor associativity on dims (2,2,2)") {
    HopfPreset preset = certified_one_param(1);
    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule left = tensor_product(tensor_product(two, two, preset), two, preset);
    WeightModule right = tensor_product(two, tensor_product(two, two, preset), preset);
    CHECK(left.dim() == 8);
    CHECK(modules_isomorphic(left, right));
}

TEST_CASE("pullback laws") {
    WeightModule two = one_param_finite_irrep(1, 1);

    WeightModule at_one = pullback_pi_w(two, fe("1"));
    CHECK(at_one.params.variant == Variant::TwoParam);
    CHECK(at_one.actH == at_one.actK.diagonal_inverse());
    CHECK(verify_relations(at_one).all_ok());

    for (const char* ws : {"q", "2", "q+1"}) {
        FieldElem w = fe(ws);
        WeightModule pulled = pullback_pi_w(two, w);
        CHECK(verify_relations(pulled).all_ok());
        CHECK(is_irreducible(pulled));
        // KH acts by w^2
        for (int k = 0; k < pulled.dim(); ++k)
            CHECK(pulled.actK.at(k, k) * pulled.actH.at(k, k) == w * w);
    }
    CHECK_THROWS_AS(pullback_pi_w(two, FieldElem()), const Error&);
    CHECK_THROWS_AS(pullback_pi_w(at_one, fe("q")), const Error&);
}

TEST_CASE("epsilon modules") {
    CHECK_THROWS_AS(epsilon_w(1, FieldElem()), const Error&);
    WeightModule eps1 = epsilon_w(1, fe("1"));
    CHECK(eps1.dim() == 1);
    CHECK(eps1.actK.at(0, 0).is_one());
    CHECK(eps1.actH.at(0, 0).is_one());
    WeightModule epsw = epsilon_w(1, fe("q^2"));
    CHECK(epsw.actK.at(0, 0) == fe("q^2"));
    CHECK(verify_relations(epsw).all_ok());
}

TEST_CASE("pullbacks factor through epsilon twists") {
    HopfPreset preset2 = certified_two_param(1);
    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule at_one = pullback_pi_w(two, fe("1"));

    for (const char* ws : {"q", "3", "q^2+1"}) {
        FieldElem w = fe(ws);
        WeightModule lhs = pullback_pi_w(two, w);
        WeightModule rhs = tensor_product(epsilon_w(1, w), at_one, preset2);
        CHECK(modules_isomorphic(lhs, rhs));
    }

    // pullback at w w' is the epsilon_{w'} twist of the pullback at w
    FieldElem w = fe("q"), wp = fe("2");
    WeightModule lhs = pullback_pi_w(two, w * wp);
    WeightModule rhs = tensor_product(epsilon_w(1, wp), pullback_pi_w(two, w), preset2);
    CHECK(modules_isomorphic(lhs, rhs));
}

TEST_CASE("tensor pullback compatibility") {
    HopfPreset preset1 = certified_one_param(1);
    HopfPreset preset2 = certified_two_param(1);
    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule three = one_param_finite_irrep(1, 2);
    FieldElem w = fe("q"), wp = fe("q+1");

    WeightModule lhs = tensor_product(pullback_pi_w(two, w), pullback_pi_w(three, wp), preset2);
    WeightModule rhs = pullback_pi_w(tensor_product(two, three, preset1), w * wp);
    CHECK(modules_isomorphic(lhs, rhs));
}

TEST_CASE("pullbacks of tensor modules decompose identically") {
    HopfPreset preset1 = certified_one_param(1);
    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule three = one_param_finite_irrep(1, 2);
    WeightModule prod = tensor_product(two, three, preset1);
    auto base_dims = summand_dims(decompose_completely(prod));
    for (const char* ws : {"1", "q", "5"}) {
        auto dims = summand_dims(decompose_completely(pullback_pi_w(prod, fe(ws))));
        CHECK(dims == base_dims);
    }
}

TEST_CASE("isomorphism distinguishes weights and survives rescaling") {
    WeightModule two = one_param_finite_irrep(1, 1);
    CHECK(modules_isomorphic(two, two));

    // same shape, different weights
    MaxIdealPoint p1{fe("q"), fe("q^2"), fe("1"), 1};
    MaxIdealPoint p2{(fe("q^3") - fe("q")) / (fe("q") - fe("q^-1")), fe("q^3"), fe("q"), 1};
    WeightModule m1 = build_module(p1, classify_spectrum(p1));
    WeightModule m2 = build_module(p2, classify_spectrum(p2));
    REQUIRE(m2.dim() == 2);
    CHECK_FALSE(modules_isomorphic(m1, m2));

    // conjugating by a diagonal change of basis preserves the class
    RandomSource rng(8080);
    WeightModule rescaled = m1;
    Vec d(2);
    for (auto& x : d) x = rng.field_elem(1, 2);
    SparseMat dm = SparseMat::diagonal(d), dinv = dm.diagonal_inverse();
    rescaled.actE = dm * m1.actE * dinv;
    rescaled.actF = dm * m1.actF * dinv;
    rescaled.actK = dm * m1.actK * dinv;
    rescaled.actH = dm * m1.actH * dinv;
    CHECK(modules_isomorphic(m1, rescaled));
}

TEST_CASE("to_one_param rejects genuinely two-parameter modules") {
    MaxIdealPoint p{fe("q"), fe("q^2"), fe("1"), 1};
    WeightModule m = build_module(p, classify_spectrum(p));
    CHECK_THROWS_AS(to_one_param(m), const Error&);
}
