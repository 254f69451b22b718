#include "uqfm/hopf.hpp"

#include "uqfm/error.hpp"

namespace uqfm {

namespace {

FieldElem q_minus_qinv() {
    IntPoly num;
    num.add_term(2, 1);
    num.add_term(0, -1);
    return FieldElem(num, IntPoly::monomial(1, 1));
}

TensorElement group_like(AlgebraParams p, const AlgElement& g) { return TensorElement::of(g, g); }

} // namespace

HopfPreset one_param_preset(int m, HopfParams hp) {
    if (hp.m() != m) raise(Err::InvalidData, "hopf params need t - s = m");
    AlgebraParams p{m, Variant::OneParam};
    HopfPreset preset(p);
    preset.name = "one_param_K_leg(s=" + std::to_string(hp.s) + ",t=" + std::to_string(hp.t) + ")";
    AlgElement one = AlgElement::one(p);
    preset.dK = group_like(p, AlgElement::gen_K(p));
    preset.dH = preset.dK.pow(-1);
    preset.dE = TensorElement::of(AlgElement::gen_K(p, hp.s), AlgElement::gen_E(p)) +
                TensorElement::of(AlgElement::gen_E(p), AlgElement::gen_K(p, hp.t));
    preset.dF = TensorElement::of(AlgElement::gen_K(p, -hp.t), AlgElement::gen_F(p)) +
                TensorElement::of(AlgElement::gen_F(p), AlgElement::gen_K(p, -hp.s));
    preset.sK = AlgElement::gen_K(p, -1);
    preset.sH = AlgElement::gen_K(p, 1);
    preset.sE = -(AlgElement::gen_K(p, -hp.s) * AlgElement::gen_E(p) * AlgElement::gen_K(p, -hp.t));
    preset.sF = -(AlgElement::gen_K(p, hp.t) * AlgElement::gen_F(p) * AlgElement::gen_K(p, hp.s));
    return preset;
}

HopfPreset one_param_e_leg_preset(int m, HopfParams hp) {
    if (hp.m() != m) raise(Err::InvalidData, "hopf params need t - s = m");
    if (hp.s < 0) raise(Err::DomainViolation, "E^s leg needs s >= 0");
    AlgebraParams p{m, Variant::OneParam};
    HopfPreset preset = one_param_preset(m, hp);
    preset.name = "one_param_E_leg(s=" + std::to_string(hp.s) + ",t=" + std::to_string(hp.t) + ")";
    preset.dE = TensorElement::of(AlgElement::gen_E(p).pow(hp.s), AlgElement::gen_E(p)) +
                TensorElement::of(AlgElement::gen_E(p), AlgElement::gen_K(p, hp.t));
    return preset;
}

HopfPreset two_param_default_preset(int m) {
    AlgebraParams p{m, Variant::TwoParam};
    HopfPreset preset(p);
    preset.name = "two_param_default(m=" + std::to_string(m) + ")";
    preset.dK = group_like(p, AlgElement::gen_K(p));
    preset.dH = group_like(p, AlgElement::gen_H(p));
    preset.dE = TensorElement::of(AlgElement::gen_E(p), AlgElement::one(p)) +
                TensorElement::of(AlgElement::gen_H(p, m), AlgElement::gen_E(p));
    preset.dF = TensorElement::of(AlgElement::gen_F(p), AlgElement::gen_K(p, m)) +
                TensorElement::of(AlgElement::one(p), AlgElement::gen_F(p));
    preset.sK = AlgElement::gen_K(p, -1);
    preset.sH = AlgElement::gen_H(p, -1);
    preset.sE = -(AlgElement::gen_H(p, -m) * AlgElement::gen_E(p));
    preset.sF = -(AlgElement::gen_F(p) * AlgElement::gen_K(p, -m));
    return preset;
}

HopfPreset certify(HopfPreset preset) {
    const AlgebraParams p = preset.params;
    preset.certification_failures.clear();
    auto expect_zero = [&](const TensorElement& t, const std::string& what) {
        if (!t.is_zero()) preset.certification_failures.push_back(what + " not preserved");
    };
    FieldElem q2 = FieldElem::q_pow(2);

    expect_zero(preset.dK * preset.dE - (preset.dE * preset.dK).scaled(q2), "KE = q^2 EK");
    expect_zero(preset.dK * preset.dF - (preset.dF * preset.dK).scaled(q2.inv()), "KF = q^-2 FK");
    expect_zero(preset.dK * preset.dK.pow(-1) - TensorElement::one(p), "K K^-1 = 1");
    if (p.variant == Variant::TwoParam) {
        expect_zero(preset.dH * preset.dE - (preset.dE * preset.dH).scaled(q2.inv()),
                    "HE = q^-2 EH");
        expect_zero(preset.dH * preset.dF - (preset.dF * preset.dH).scaled(q2), "HF = q^2 FH");
        expect_zero(preset.dK * preset.dH - preset.dH * preset.dK, "KH = HK");
        expect_zero(preset.dH * preset.dH.pow(-1) - TensorElement::one(p), "H H^-1 = 1");
    }
    TensorElement hm =
        (p.variant == Variant::TwoParam) ? preset.dH.pow(p.m) : preset.dK.pow(-p.m);
    TensorElement delta_f = (preset.dK.pow(p.m) - hm).scaled(q_minus_qinv().inv());
    expect_zero(preset.dE.commutator(preset.dF) - delta_f, "[E,F] = f_m");

    preset.certified = preset.certification_failures.empty();
    return preset;
}

TensorElement coproduct(const HopfPreset& preset, const AlgElement& x) {
    if (!(preset.params == x.params()))
        raise(Err::ParamMismatch, "coproduct preset is for a different algebra");
    TensorElement out(preset.params);
    for (const auto& [m, c] : x.terms()) {
        TensorElement t = TensorElement::one(preset.params).scaled(c);
        if (m.a != 0) t = t * preset.dF.pow(m.a);
        if (m.i != 0) t = t * preset.dK.pow(m.i);
        if (m.j != 0) t = t * preset.dH.pow(m.j);
        if (m.b != 0) t = t * preset.dE.pow(m.b);
        out = out + t;
    }
    return out;
}

FieldElem counit(const AlgElement& x) {
    FieldElem v;
    for (const auto& [m, c] : x.terms())
        if (m.a == 0 && m.b == 0) v = v + c; // eps(K) = eps(H) = 1
    return v;
}

AlgElement antipode(const HopfPreset& preset, const AlgElement& x) {
    if (!(preset.params == x.params()))
        raise(Err::ParamMismatch, "antipode preset is for a different algebra");
    AlgElement out(preset.params);
    for (const auto& [m, c] : x.terms()) {
        // Anti-homomorphism: reverse the canonical word.
        AlgElement t = AlgElement::one(preset.params).scaled(c);
        if (m.b != 0) t = t * preset.sE.pow(m.b);
        if (m.j != 0) t = t * preset.sH.pow(m.j);
        if (m.i != 0) t = t * preset.sK.pow(m.i);
        if (m.a != 0) t = t * preset.sF.pow(m.a);
        out = out + t;
    }
    return out;
}

namespace {

Tensor3 delta_then_id(const HopfPreset& preset, const TensorElement& t) {
    Tensor3 out(preset.params);
    for (const auto& [mm, c] : t.terms()) {
        TensorElement left =
            coproduct(preset, AlgElement::term(preset.params, mm.first, FieldElem(1)));
        for (const auto& [ll, cl] : left.terms())
            out.add_term({ll.first, ll.second, mm.second}, c * cl);
    }
    return out;
}

Tensor3 id_then_delta(const HopfPreset& preset, const TensorElement& t) {
    Tensor3 out(preset.params);
    for (const auto& [mm, c] : t.terms()) {
        TensorElement right =
            coproduct(preset, AlgElement::term(preset.params, mm.second, FieldElem(1)));
        for (const auto& [rr, cr] : right.terms())
            out.add_term({mm.first, rr.first, rr.second}, c * cr);
    }
    return out;
}

} // namespace

HopfAxiomReport check_hopf_axioms(const HopfPreset& preset) {
    HopfAxiomReport report;
    const AlgebraParams p = preset.params;
    std::vector<std::pair<std::string, AlgElement>> gens = {
        {"E", AlgElement::gen_E(p)},
        {"F", AlgElement::gen_F(p)},
        {"K", AlgElement::gen_K(p)},
    };
    if (p.variant == Variant::TwoParam) gens.push_back({"H", AlgElement::gen_H(p)});

    report.coassociative = true;
    report.counit_ok = true;
    report.antipode_ok = true;
    for (const auto& [name, g] : gens) {
        TensorElement dg = coproduct(preset, g);
        if (delta_then_id(preset, dg) != id_then_delta(preset, dg)) {
            report.coassociative = false;
            report.failures.push_back("coassociativity fails on " + name);
        }
        // (eps (x) id) Delta(g) = g = (id (x) eps) Delta(g)
        AlgElement left(p), right(p);
        for (const auto& [mm, c] : dg.terms()) {
            FieldElem el = counit(AlgElement::term(p, mm.first, FieldElem(1)));
            FieldElem er = counit(AlgElement::term(p, mm.second, FieldElem(1)));
            left.add_term(mm.second, c * el);
            right.add_term(mm.first, c * er);
        }
        if (left != g || right != g) {
            report.counit_ok = false;
            report.failures.push_back("counit axiom fails on " + name);
        }
        // m(S (x) id) Delta(g) = eps(g) 1 = m(id (x) S) Delta(g)
        AlgElement target = AlgElement::one(p).scaled(counit(g));
        AlgElement s_left =
            dg.map_leg(0, [&](const AlgElement& u) { return antipode(preset, u); }).multiply_legs();
        AlgElement s_right =
            dg.map_leg(1, [&](const AlgElement& u) { return antipode(preset, u); }).multiply_legs();
        if (s_left != target || s_right != target) {
            report.antipode_ok = false;
            report.failures.push_back("antipode axiom fails on " + name);
        }
    }
    return report;
}

std::vector<MisprintProbe> coproduct_leg_probe(int m) {
    std::vector<MisprintProbe> probes;
    for (int s : {0, 1}) {
        MisprintProbe probe;
        probe.s = s;
        probe.t = s + m;
        HopfParams hp{s, s + m};
        probe.k_leg_certifies = certify(one_param_preset(m, hp)).certified;
        probe.legs_coincide = (s == 0);
        try {
            HopfPreset e_leg = certify(one_param_e_leg_preset(m, hp));
            probe.e_leg_constructible = true;
            probe.e_leg_certifies = e_leg.certified;
        } catch (const Error&) {
            probe.e_leg_constructible = false;
        }
        probes.push_back(probe);
    }
    return probes;
}

} // namespace uqfm
