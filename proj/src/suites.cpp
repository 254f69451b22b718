#include "uqfm/suites.hpp"

#include "uqfm/error.hpp"
#include "uqfm/modcat.hpp"
#include "uqfm/parallel.hpp"
#include "uqfm/rand.hpp"
#include "uqfm/whittaker.hpp"

namespace uqfm {

Json SuiteReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["params"] = params;
    j["checks_run"] = checks_run;
    j["failures"] = failures;
    j["seed"] = seed;
    return j;
}

namespace {

void expect(SuiteReport& r, bool cond, const std::string& what) {
    ++r.checks_run;
    if (!cond) r.failures.push_back(what);
}

// Parallel batch: evaluates items independently, then folds the failure
// lists in index order so reports are deterministic. Exceptions count as
// failures; they must not escape the parallel region.
template <class Fn>
void batch(SuiteReport& r, std::size_t n, Fn&& item) {
    std::vector<std::vector<std::string>> fails(n);
    std::vector<int> counts(n, 0);
    par::for_range(n, [&](std::size_t k) {
        auto note = [&](bool cond, const std::string& what) {
            ++counts[k];
            if (!cond) fails[k].push_back(what);
        };
        try {
            item(k, note);
        } catch (const std::exception& ex) {
            ++counts[k];
            fails[k].push_back("item " + std::to_string(k) + " raised: " + ex.what());
        }
    });
    for (std::size_t k = 0; k < n; ++k) {
        r.checks_run += counts[k];
        for (auto& f : fails[k]) r.failures.push_back(std::move(f));
    }
}

FieldElem fe(const std::string& s) { return FieldElem::parse(s); }

std::vector<int> filter_ms(std::vector<int> ms, int m_filter) {
    if (m_filter == 0) return ms;
    for (int m : ms)
        if (m == m_filter) return {m_filter};
    raise(Err::UsageError, "suite does not cover m = " + std::to_string(m_filter));
}

MaxIdealPoint hw_point(int m, int n, const FieldElem& gamma) {
    MaxIdealPoint p;
    p.m = m;
    p.gamma = gamma;
    p.beta = FieldElem::q_pow(2 * n) * gamma;
    p.alpha = (p.beta.pow(m) - p.gamma.pow(m)) / (fe("q") - fe("q^-1"));
    return p;
}

} // namespace

SuiteReport suite_rewriting(std::uint64_t seed, int m_filter) {
    SuiteReport r;
    r.suite = "rewriting";
    r.seed = seed;
    std::vector<int> ms = filter_ms({1, 2, 3}, m_filter);
    r.params["m"] = ms;
    r.params["triples"] = 200;

    for (int m : ms) {
        for (Variant v : {Variant::TwoParam, Variant::OneParam}) {
            AlgebraParams p{m, v};
            std::string tag = " (m=" + std::to_string(m) +
                              (v == Variant::TwoParam ? ", two-param)" : ", one-param)");
            AlgElement e = AlgElement::gen_E(p), f = AlgElement::gen_F(p);
            AlgElement k = AlgElement::gen_K(p), h = AlgElement::gen_H(p);
            FieldElem q2 = FieldElem::q_pow(2);
            expect(r, (k * e - e.scaled(q2) * k).is_zero(), "KE = q^2 EK" + tag);
            expect(r, (k * f - f.scaled(q2.inv()) * k).is_zero(), "KF = q^-2 FK" + tag);
            expect(r, (h * e - e.scaled(q2.inv()) * h).is_zero(), "HE = q^-2 EH" + tag);
            expect(r, (h * f - f.scaled(q2) * h).is_zero(), "HF = q^2 FH" + tag);
            expect(r, (k * AlgElement::gen_K(p, -1) - AlgElement::one(p)).is_zero(),
                   "K K^-1 = 1" + tag);
            expect(r, (k * h - h * k).is_zero(), "KH = HK" + tag);
            expect(r, (e * f - f * e - AlgElement::f_m(p)).is_zero(), "EF - FE = f_m" + tag);
        }
    }

    std::vector<std::array<AlgElement, 3>> triples;
    {
        RandomSource rng(seed);
        for (int t = 0; t < 200; ++t) {
            AlgebraParams p{ms[t % ms.size()],
                            rng.coin() ? Variant::TwoParam : Variant::OneParam};
            triples.push_back({AlgElement::term(p, rng.monomial(p, 3, 3), rng.field_elem(1, 2)),
                               AlgElement::term(p, rng.monomial(p, 3, 3), rng.field_elem(1, 2)),
                               AlgElement::term(p, rng.monomial(p, 3, 3), rng.field_elem(1, 2))});
        }
    }
    batch(r, triples.size(), [&](std::size_t t, auto note) {
        const auto& [x, y, z] = triples[t];
        note(((x * y) * z) == (x * (y * z)), "associativity triple " + std::to_string(t));
    });
    return r;
}

SuiteReport suite_theta(std::uint64_t seed, int m_filter) {
    SuiteReport r;
    r.suite = "theta";
    r.seed = seed;
    std::vector<int> ms = filter_ms({1, 2, 3}, m_filter);
    r.params["m"] = ms;
    r.params["n_range"] = 12;

    for (int m : ms) {
        AlgebraParams p{m, Variant::TwoParam};
        AlgElement e = AlgElement::gen_E(p), f = AlgElement::gen_F(p);
        std::string tag = " (m=" + std::to_string(m) + ")";
        for (const auto& [name, rel] : {std::pair<const char*, RElement>{"xi", RElement::xi()},
                                        {"K", RElement::K()},
                                        {"H", RElement::H()}}) {
            expect(r, e * embed_in_algebra(rel, p) == embed_in_algebra(theta_apply(rel, 1, m), p) * e,
                   std::string("E r = theta(r) E for r = ") + name + tag);
            expect(r,
                   f * embed_in_algebra(rel, p) == embed_in_algebra(theta_apply(rel, -1, m), p) * f,
                   std::string("F r = theta^-1(r) F for r = ") + name + tag);
        }
        RElement up = RElement::xi(), down = RElement::xi();
        for (int n = 1; n <= 12; ++n) {
            up = theta_apply(up, 1, m);
            down = theta_apply(down, -1, m);
            expect(r, theta_apply(RElement::xi(), n, m) == up,
                   "closed form theta^" + std::to_string(n) + tag);
            expect(r, theta_apply(RElement::xi(), -n, m) == down,
                   "closed form theta^-" + std::to_string(n) + tag);
        }
    }
    return r;
}

SuiteReport suite_center(std::uint64_t seed, int m_filter) {
    SuiteReport r;
    r.suite = "center";
    r.seed = seed;
    std::vector<int> ms = filter_ms({1, 2}, m_filter);
    r.params["m"] = ms;
    r.params["max_deg"] = 3;

    for (int m : ms) {
        AlgebraParams p{m, Variant::TwoParam};
        std::string tag = " (m=" + std::to_string(m) + ")";
        AlgElement omega = AlgElement::casimir(p);
        expect(r, omega == AlgElement::casimir_ef_form(p), "Casimir FE and EF forms agree" + tag);
        expect(r, omega.commutator(AlgElement::gen_E(p)).is_zero(), "[Omega, E] = 0" + tag);
        expect(r, omega.commutator(AlgElement::gen_F(p)).is_zero(), "[Omega, F] = 0" + tag);
        expect(r, omega.commutator(AlgElement::gen_K(p)).is_zero(), "[Omega, K] = 0" + tag);
        expect(r, omega.commutator(AlgElement::gen_H(p)).is_zero(), "[Omega, H] = 0" + tag);

        for (int k = 0; k <= 3; ++k) {
            for (int l = -3; l <= 3; ++l) {
                AlgElement x = omega.pow(k) * AlgElement::term(p, {0, l, l, 0}, FieldElem(1));
                auto c = center_membership(x);
                bool good = c.has_value() && c->to_alg_element(p) == x;
                expect(r, good,
                       "membership accepts Omega^" + std::to_string(k) + " (KH)^" +
                           std::to_string(l) + tag);
            }
        }
        expect(r, !center_membership(AlgElement::gen_E(p)).has_value(),
               "membership rejects E" + tag);
        expect(r, !center_membership(AlgElement::gen_F(p)).has_value(),
               "membership rejects F" + tag);
        expect(r, !center_membership(AlgElement::gen_K(p)).has_value(),
               "membership rejects K" + tag);
    }
    return r;
}

SuiteReport suite_classify(std::uint64_t seed, int m_filter) {
    SuiteReport r;
    r.suite = "classify";
    r.seed = seed;
    std::vector<int> ms = filter_ms({1, 2}, m_filter);
    r.params["random_points"] = 50;
    r.params["m"] = ms;

    // Worked points.
    {
        MaxIdealPoint p{fe("q"), fe("q^2"), fe("1"), 1};
        SpectrumCase c = classify_spectrum(p);
        expect(r, c.kind == SpectrumKind::OneFinite && c.n == 1 && c.proved,
               "point (q, q^2, 1) classifies as P_1_n+1 with n = 1");
        WeightModule m = build_module(p, c);
        auto scalar = casimir_scalar(m);
        expect(r, scalar && *scalar == fe("q*(q^4+1)/(q^2-1)^2"),
               "worked module reproduces the Casimir scalar q(q^4+1)/(q^2-1)^2");
    }
    expect(r, classify_spectrum({fe("0"), fe("1"), fe("1"), 1}).kind == SpectrumKind::OneOne,
           "point (0, 1, 1) classifies as P_1_1");
    expect(r, classify_spectrum({fe("0"), fe("q"), fe("1"), 1}).kind == SpectrumKind::InfinityOne,
           "point (0, q, 1) classifies as P_inf_1");
    expect(r,
           classify_spectrum({fe("1"), fe("q"), fe("1"), 1}).kind ==
               SpectrumKind::InfinityInfinity,
           "point (1, q, 1) classifies as P_inf_inf");

    // 50 random points: 30 generic, 20 highest-weight with n <= 8.
    std::vector<MaxIdealPoint> points;
    {
        RandomSource rng(seed);
        for (int t = 0; t < 30; ++t) points.push_back(rng.point(ms[t % ms.size()]));
        for (int t = 0; t < 20; ++t)
            points.push_back(hw_point(ms[t % ms.size()], static_cast<int>(rng.int_in(0, 8)),
                                      rng.field_elem(1, 2)));
    }
    batch(r, points.size(), [&](std::size_t t, auto note) {
        const MaxIdealPoint& p = points[t];
        SpectrumCase c = classify_spectrum(p);
        note(true, "classification total at point " + std::to_string(t));
        if (c.kind == SpectrumKind::OneOne || c.kind == SpectrumKind::OneFinite) {
            if (c.n > 8) return;
            WeightModule m = build_module(p, c);
            std::string tag = " at random point " + std::to_string(t);
            note(verify_relations(m).all_ok(), "relations" + tag);
            note(is_irreducible(m), "irreducibility" + tag);
            note(casimir_scalar(m).has_value(), "Casimir scalar" + tag);
        } else {
            WeightModule m = build_module(p, c, 6);
            note(verify_relations(m).all_ok(),
                 "window relations at random point " + std::to_string(t));
        }
    });
    return r;
}

SuiteReport suite_hopf(std::uint64_t seed, int m_filter) {
    SuiteReport r;
    r.suite = "hopf";
    r.seed = seed;
    std::vector<int> ms = filter_ms({1, 2}, m_filter);
    Json st = Json::array();
    for (int m : ms) st.push_back(Json::array({0, m}));
    r.params["s_t"] = st;

    for (int m : ms) {
        std::string tag = " (m=" + std::to_string(m) + ")";
        HopfPreset preset = certify(one_param_preset(m, {0, m}));
        expect(r, preset.certified, "K^s-leg coproduct is an algebra homomorphism" + tag);
        expect(r, preset.dE.commutator(preset.dF) == coproduct(preset, AlgElement::f_m(preset.params)),
               "Delta(E)Delta(F) - Delta(F)Delta(E) = Delta(f_m)" + tag);
        HopfAxiomReport ax = check_hopf_axioms(preset);
        expect(r, ax.coassociative, "coassociativity on generators" + tag);
        expect(r, ax.counit_ok, "counit axiom on generators" + tag);
        expect(r, ax.antipode_ok, "antipode axiom on generators" + tag);

        auto probes = coproduct_leg_probe(m);
        expect(r, probes.size() == 2 && probes[0].legs_coincide && probes[0].e_leg_certifies,
               "at s = 0 the E^s and K^s legs coincide and certify" + tag);
        expect(r, probes[1].k_leg_certifies && probes[1].e_leg_constructible &&
                      !probes[1].e_leg_certifies,
               "at s = 1 the K^s leg certifies and the printed E^s leg fails" + tag);
    }
    return r;
}

SuiteReport suite_reducibility(std::uint64_t seed) {
    SuiteReport r;
    r.suite = "reducibility";
    r.seed = seed;
    r.params["dims"] = {2, 3};
    r.params["pullback_w"] = {"1", "q", "2"};

    HopfPreset preset = certify(one_param_preset(1, {0, 1}));
    expect(r, preset.certified, "m=1 one-param preset certifies");

    auto dims_of = [](const std::vector<Summand>& s) {
        std::vector<int> dims;
        for (const auto& x : s)
            for (int k = 0; k < x.multiplicity; ++k) dims.push_back(x.module.dim());
        std::sort(dims.begin(), dims.end(), std::greater<int>());
        return dims;
    };

    for (int n1 : {1, 2}) {
        for (int n2 : {1, 2}) {
            WeightModule a = one_param_finite_irrep(1, n1);
            WeightModule b = one_param_finite_irrep(1, n2);
            WeightModule prod = tensor_product(a, b, preset);
            std::string tag = " for " + std::to_string(n1 + 1) + " (x) " + std::to_string(n2 + 1);
            try {
                auto summands = decompose_completely(prod);
                int total = 0;
                bool all_irr = true;
                for (const auto& s : summands) {
                    total += s.module.dim() * s.multiplicity;
                    if (!is_irreducible(s.module)) all_irr = false;
                }
                expect(r, total == prod.dim(), "dimension bookkeeping" + tag);
                expect(r, all_irr, "all summands irreducible" + tag);

                auto base = dims_of(summands);
                for (const char* ws : {"1", "q", "2"}) {
                    auto pulled = dims_of(decompose_completely(pullback_pi_w(prod, fe(ws))));
                    expect(r, pulled == base,
                           std::string("pullback at w = ") + ws + " decomposes identically" + tag);
                }
            } catch (const Error& err) {
                expect(r, false, std::string("decomposition failure") + tag + ": " + err.what());
            }
        }
    }
    return r;
}

SuiteReport suite_pullback(std::uint64_t seed) {
    SuiteReport r;
    r.suite = "pullback";
    r.seed = seed;
    r.params["w"] = {"q", "2", "q+1"};

    WeightModule two = one_param_finite_irrep(1, 1);
    WeightModule at_one = pullback_pi_w(two, fe("1"));
    expect(r, at_one.actH == at_one.actK.diagonal_inverse(), "pullback at w = 1 has H = K^-1");
    expect(r, verify_relations(at_one).all_ok(), "pullback at w = 1 satisfies the relations");

    for (const char* ws : {"q", "2", "q+1"}) {
        FieldElem w = fe(ws);
        WeightModule pulled = pullback_pi_w(two, w);
        bool kh_scalar = true;
        for (int k = 0; k < pulled.dim(); ++k)
            if (pulled.actK.at(k, k) * pulled.actH.at(k, k) != w * w) kh_scalar = false;
        expect(r, kh_scalar, std::string("KH acts by w^2 at w = ") + ws);
        expect(r, verify_relations(pulled).all_ok(),
               std::string("two-param relations hold at w = ") + ws);
        expect(r, is_irreducible(pulled), std::string("pullback preserves irreducibility at w = ") + ws);
    }

    HopfPreset preset2 = certify(two_param_default_preset(1));
    expect(r, preset2.certified, "two-param m=1 preset certifies");
    for (const char* ws : {"q", "2", "q+1"}) {
        FieldElem w = fe(ws);
        expect(r,
               modules_isomorphic(pullback_pi_w(two, w),
                                  tensor_product(epsilon_w(1, w), at_one, preset2)),
               std::string("M_w is the epsilon_w twist of M_1 at w = ") + ws);
    }
    {
        HopfPreset preset1 = certify(one_param_preset(1, {0, 1}));
        WeightModule three = one_param_finite_irrep(1, 2);
        FieldElem w = fe("q"), wp = fe("2");
        WeightModule lhs =
            tensor_product(pullback_pi_w(two, w), pullback_pi_w(three, wp), preset2);
        WeightModule rhs = pullback_pi_w(tensor_product(two, three, preset1), w * wp);
        expect(r, modules_isomorphic(lhs, rhs), "M_w (x) N_w' matches (M (x) N)_{w w'}");
    }
    return r;
}

SuiteReport suite_whittaker(std::uint64_t seed, int m_filter) {
    SuiteReport r;
    r.suite = "whittaker";
    r.seed = seed;
    std::vector<int> ms = filter_ms({1, 2}, m_filter);
    r.params["datasets"] = 20;
    r.params["window"] = 12;
    r.params["m"] = ms;

    std::vector<WhittakerData> datasets;
    {
        RandomSource rng(seed);
        for (int t = 0; t < 20; ++t) {
            WhittakerData d;
            d.e = rng.field_elem(1, 2);
            d.a = rng.field_elem(1, 2, true);
            d.b = rng.field_elem(1, 2);
            d.m = ms[t % ms.size()];
            d.window = 12;
            datasets.push_back(d);
        }
    }
    batch(r, datasets.size(), [&](std::size_t t, auto note) {
        const WhittakerData& d = datasets[t];
        std::string tag = " on dataset " + std::to_string(t);
        WhittakerModule m = build_whittaker_module(d);
        RelationReport rel = verify_whittaker_relations(m);
        note(rel.all_ok(), "relations and central character" + tag);
        auto vs = whittaker_vectors(m);
        note(vs.size() == 1, "Whittaker vector space is one-dimensional" + tag);
        Vec w(m.dim());
        w[0] = FieldElem(1);
        note(cyclicity_check(m, w), "cyclicity from w" + tag);
        Vec k3(m.dim());
        k3[m.pos_k(3)] = FieldElem(1);
        note(cyclicity_check(m, k3), "cyclicity from K^3 w" + tag);
        note(annihilator_inclusion_check(m, 4, seed + t).all_ok(),
             "annihilator inclusions" + tag);
    });

    // 100 filtration round trips across random E-degree-0 elements.
    std::vector<std::pair<AlgElement, FieldElem>> samples;
    {
        RandomSource rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (int t = 0; t < 100; ++t) {
            AlgebraParams p{ms[t % ms.size()], Variant::TwoParam};
            AlgElement u(p);
            int terms = static_cast<int>(rng.int_in(1, 4));
            for (int k = 0; k < terms; ++k) {
                Monomial mono;
                mono.a = static_cast<int>(rng.int_in(0, 4));
                mono.i = static_cast<int>(rng.int_in(-2, 2));
                mono.j = static_cast<int>(rng.int_in(-2, 2));
                u.add_term(mono, rng.field_elem(1, 2));
            }
            if (u.is_zero()) u = AlgElement::one(p);
            samples.push_back({u, rng.field_elem(1, 2)});
        }
    }
    batch(r, samples.size(), [&](std::size_t t, auto note) {
        const auto& [u, e] = samples[t];
        note(filtration_reconstruct(filtration_decompose(u, e), e, u.params()) == u,
             "filtration round trip " + std::to_string(t));
    });

    for (int m : ms)
        expect(r, center_image_independence(3, fe("q"), m),
               "center image independence at degree 3 (m=" + std::to_string(m) + ")");
    return r;
}

std::vector<std::string> suite_names() {
    return {"rewriting", "theta", "center", "classify", "hopf", "reducibility", "pullback",
            "whittaker"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int m_filter) {
    if (name == "rewriting") return suite_rewriting(seed, m_filter);
    if (name == "theta") return suite_theta(seed, m_filter);
    if (name == "center" || name == "casimir") return suite_center(seed, m_filter);
    if (name == "classify") return suite_classify(seed, m_filter);
    if (name == "hopf") return suite_hopf(seed, m_filter);
    if (name == "reducibility" || name == "pullback") {
        if (m_filter != 0 && m_filter != 1)
            raise(Err::UsageError, "suite " + name + " is defined at m = 1");
        return name == "reducibility" ? suite_reducibility(seed) : suite_pullback(seed);
    }
    if (name == "whittaker") return suite_whittaker(seed, m_filter);
    raise(Err::UsageError, "unknown suite: " + name);
}

} // namespace uqfm
