#include "uqfm/json_io.hpp"

#include "uqfm/error.hpp"

namespace uqfm {

Json to_json(const SpectrumCase& c) {
    Json j;
    j["case"] = c.case_name();
    if (c.kind == SpectrumKind::OneOne || c.kind == SpectrumKind::OneFinite) j["n"] = c.n;
    j["exact"] = c.proved;
    if (!c.proved) j["n_max"] = c.n_max;
    return j;
}

Json to_json(const MaxIdealPoint& p) {
    Json j;
    j["alpha"] = p.alpha.to_string();
    j["beta"] = p.beta.to_string();
    j["gamma"] = p.gamma.to_string();
    j["m"] = p.m;
    return j;
}

Json to_json(const AlgElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json t;
        t["a"] = m.a;
        t["i"] = m.i;
        t["j"] = m.j;
        t["b"] = m.b;
        t["coeff"] = c.to_string();
        terms.push_back(t);
    }
    return terms;
}

Json to_json(const SparseMat& m) {
    Json triplets = Json::array();
    for (const auto& [rc, e] : m.entries())
        triplets.push_back(Json::array({rc.first, rc.second, e.to_string()}));
    return triplets;
}

namespace {

Json module_common(const AlgebraParams& params, const std::vector<std::string>& labels,
                   const std::vector<bool>& interior, const SparseMat& e, const SparseMat& f,
                   const SparseMat& k, const SparseMat& h) {
    Json j;
    j["params"]["m"] = params.m;
    j["params"]["variant"] = params.variant == Variant::TwoParam ? "two_param" : "one_param";
    j["basis"] = labels;
    j["interior"] = interior;
    j["E"] = to_json(e);
    j["F"] = to_json(f);
    j["K"] = to_json(k);
    j["H"] = to_json(h);
    return j;
}

} // namespace

Json to_json(const WeightModule& m) {
    Json j = module_common(m.params, m.labels, m.interior, m.actE, m.actF, m.actK, m.actH);
    j["windowed"] = m.windowed;
    j["index_lo"] = m.index_lo;
    j["safeE"] = Json::array({m.safeE.lo, m.safeE.hi});
    j["safeF"] = Json::array({m.safeF.lo, m.safeF.hi});
    if (m.point) j["provenance"]["point"] = to_json(*m.point);
    if (m.spec_case) j["provenance"]["case"] = to_json(*m.spec_case);
    if (!m.note.empty()) j["provenance"]["note"] = m.note;
    return j;
}

Json to_json(const WhittakerModule& m) {
    Json j = module_common(m.params, m.labels, m.interior, m.actE, m.actF, m.actK, m.actH);
    j["data"]["e"] = m.data.e.to_string();
    j["data"]["a"] = m.data.a.to_string();
    j["data"]["b"] = m.data.b.to_string();
    j["data"]["m"] = m.data.m;
    j["data"]["window"] = m.data.window;
    return j;
}

namespace {

SparseMat mat_from_json(const Json& j, int dim) {
    SparseMat m(dim, dim);
    for (const auto& t : j)
        m.set(t.at(0).get<int>(), t.at(1).get<int>(), FieldElem::parse(t.at(2).get<std::string>()));
    return m;
}

} // namespace

WeightModule weight_module_from_json(const Json& j) {
    WeightModule m;
    m.params.m = j.at("params").at("m").get<int>();
    std::string variant = j.at("params").at("variant").get<std::string>();
    if (variant == "two_param")
        m.params.variant = Variant::TwoParam;
    else if (variant == "one_param")
        m.params.variant = Variant::OneParam;
    else
        raise(Err::ParseError, "unknown variant: " + variant);
    m.labels = j.at("basis").get<std::vector<std::string>>();
    const int dim = static_cast<int>(m.labels.size());
    m.interior = j.at("interior").get<std::vector<bool>>();
    m.actE = mat_from_json(j.at("E"), dim);
    m.actF = mat_from_json(j.at("F"), dim);
    m.actK = mat_from_json(j.at("K"), dim);
    m.actH = mat_from_json(j.at("H"), dim);
    m.windowed = j.value("windowed", false);
    m.index_lo = j.value("index_lo", 0);
    if (j.contains("safeE")) m.safeE = {j["safeE"].at(0).get<int>(), j["safeE"].at(1).get<int>()};
    else m.safeE = {0, dim - 1};
    if (j.contains("safeF")) m.safeF = {j["safeF"].at(0).get<int>(), j["safeF"].at(1).get<int>()};
    else m.safeF = {0, dim - 1};
    if (j.contains("provenance")) {
        const Json& prov = j["provenance"];
        if (prov.contains("point")) {
            MaxIdealPoint p;
            p.alpha = FieldElem::parse(prov["point"].at("alpha").get<std::string>());
            p.beta = FieldElem::parse(prov["point"].at("beta").get<std::string>());
            p.gamma = FieldElem::parse(prov["point"].at("gamma").get<std::string>());
            p.m = prov["point"].at("m").get<int>();
            m.point = p;
        }
        if (prov.contains("note")) m.note = prov["note"].get<std::string>();
    }
    return m;
}

} // namespace uqfm
