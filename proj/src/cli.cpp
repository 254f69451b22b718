#include "uqfm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>

#include "uqfm/error.hpp"
#include "uqfm/modcat.hpp"
#include "uqfm/parallel.hpp"
#include "uqfm/suites.hpp"
#include "uqfm/whittaker.hpp"

namespace uqfm {

namespace {

struct CliConfig {
    int m = 1;
    std::string alpha, beta = "1", gamma = "1";
    std::string e, a, b;
    std::string element;
    std::string q_eval;
    std::string output = "json";
    std::string suite = "all";
    std::string out_file;
    std::string lhs_file, rhs_file;
    int window = 12;
    int n_max = 64;
    int s = 0;
    int dim1 = 2, dim2 = 2;
    int m_filter = 0;
    std::uint64_t seed = 12345;
    bool serial = false;
};

MaxIdealPoint parse_point(const CliConfig& cfg) {
    MaxIdealPoint p;
    p.m = cfg.m;
    p.alpha = FieldElem::parse(cfg.alpha);
    p.beta = FieldElem::parse(cfg.beta);
    p.gamma = FieldElem::parse(cfg.gamma);
    p.validate();
    return p;
}

Json eval_matrix(const SparseMat& m, const Rational& q0) {
    Json triplets = Json::array();
    for (const auto& [rc, e] : m.entries())
        triplets.push_back(Json::array({rc.first, rc.second, to_string(e.eval_at(q0))}));
    return triplets;
}

void emit(std::ostream& out, const Json& j, const std::string& mode) {
    if (mode == "json") {
        out << j.dump(2) << "\n";
    } else {
        // Flat text rendering, one line per leaf.
        std::vector<std::pair<std::string, const Json*>> stack{{"", &j}};
        while (!stack.empty()) {
            auto [prefix, node] = stack.back();
            stack.pop_back();
            if (node->is_object()) {
                std::vector<std::pair<std::string, const Json*>> children;
                for (auto it = node->begin(); it != node->end(); ++it)
                    children.push_back({prefix.empty() ? it.key() : prefix + "." + it.key(),
                                        &it.value()});
                for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
            } else if (node->is_array()) {
                out << prefix << ": " << node->dump() << "\n";
            } else if (node->is_string()) {
                out << prefix << ": " << node->get<std::string>() << "\n";
            } else {
                out << prefix << ": " << node->dump() << "\n";
            }
        }
    }
}

Json module_json(const WeightModule& m, const CliConfig& cfg) {
    Json j = to_json(m);
    if (!cfg.q_eval.empty()) {
        Rational q0 = parse_rational(cfg.q_eval);
        j["q_eval"]["at"] = to_string(q0);
        j["q_eval"]["E"] = eval_matrix(m.actE, q0);
        j["q_eval"]["F"] = eval_matrix(m.actF, q0);
        j["q_eval"]["K"] = eval_matrix(m.actK, q0);
        j["q_eval"]["H"] = eval_matrix(m.actH, q0);
    }
    return j;
}

void maybe_dump(const Json& j, const CliConfig& cfg) {
    if (cfg.out_file.empty()) return;
    std::ofstream f(cfg.out_file);
    if (!f) raise(Err::UsageError, "cannot open output file " + cfg.out_file);
    f << j.dump(2) << "\n";
}

int cmd_classify(const CliConfig& cfg, std::ostream& out) {
    SpectrumCase c = classify_spectrum(parse_point(cfg), cfg.n_max);
    emit(out, to_json(c), cfg.output);
    return 0;
}

int cmd_build_rep(const CliConfig& cfg, std::ostream& out) {
    MaxIdealPoint p = parse_point(cfg);
    SpectrumCase c = classify_spectrum(p, cfg.n_max);
    WeightModule m = build_module(p, c, cfg.window);
    Json j = module_json(m, cfg);
    maybe_dump(j, cfg);
    emit(out, j, cfg.output);
    return 0;
}

int cmd_tensor_decompose(const CliConfig& cfg, std::ostream& out) {
    WeightModule a = [&] {
        if (!cfg.lhs_file.empty()) {
            std::ifstream f(cfg.lhs_file);
            if (!f) raise(Err::UsageError, "cannot open " + cfg.lhs_file);
            return weight_module_from_json(Json::parse(f));
        }
        return one_param_finite_irrep(cfg.m, cfg.dim1 - 1);
    }();
    WeightModule b = [&] {
        if (!cfg.rhs_file.empty()) {
            std::ifstream f(cfg.rhs_file);
            if (!f) raise(Err::UsageError, "cannot open " + cfg.rhs_file);
            return weight_module_from_json(Json::parse(f));
        }
        return one_param_finite_irrep(cfg.m, cfg.dim2 - 1);
    }();
    if (!(a.params == b.params)) raise(Err::UsageError, "tensor factors disagree on the algebra");

    HopfPreset preset = (a.params.variant == Variant::OneParam)
                            ? certify(one_param_preset(a.params.m, {cfg.s, cfg.s + a.params.m}))
                            : certify(two_param_default_preset(a.params.m));
    if (!preset.certified) raise(Err::UncertifiedCoproduct, "preset failed certification");

    WeightModule prod = tensor_product(a, b, preset);
    auto summands = decompose_completely(prod);

    Json j;
    j["preset"] = preset.name;
    j["dim"] = prod.dim();
    j["weights"] = Json::array();
    for (const auto& wd : weight_decomposition(prod))
        j["weights"].push_back(Json::array(
            {wd.k_eig.to_string(), wd.h_eig.to_string(), wd.multiplicity}));
    j["summands"] = Json::array();
    int total = 0;
    for (const auto& s : summands) {
        Json sj;
        sj["dim"] = s.module.dim();
        sj["multiplicity"] = s.multiplicity;
        sj["irreducible"] = is_irreducible(s.module);
        sj["highest_weight"] = Json::array({s.module.actK.at(0, 0).to_string(),
                                            s.module.actH.at(0, 0).to_string()});
        j["summands"].push_back(sj);
        total += s.module.dim() * s.multiplicity;
    }
    j["dimension_check"] = (total == prod.dim());
    maybe_dump(j, cfg);
    emit(out, j, cfg.output);
    return j["dimension_check"].get<bool>() ? 0 : 1;
}

int cmd_whittaker(const CliConfig& cfg, std::ostream& out) {
    WhittakerData d;
    d.m = cfg.m;
    d.window = cfg.window;
    d.e = FieldElem::parse(cfg.e);
    d.a = FieldElem::parse(cfg.a);
    d.b = FieldElem::parse(cfg.b);
    WhittakerModule mod = build_whittaker_module(d);

    RelationReport rel = verify_whittaker_relations(mod);
    auto vectors = whittaker_vectors(mod);
    Vec w(mod.dim());
    w[0] = FieldElem(1);
    Vec k3(mod.dim());
    k3[mod.pos_k(3)] = FieldElem(1);

    Json j;
    j["module"] = to_json(mod);
    j["relations_ok"] = rel.all_ok();
    j["relation_checks"] = Json::array();
    for (const auto& [name, ok] : rel.checks)
        j["relation_checks"].push_back(Json::array({name, ok}));
    j["whittaker_vector_dim"] = vectors.size();
    j["cyclic_from_w"] = cyclicity_check(mod, w);
    j["cyclic_from_K3w"] = cyclicity_check(mod, k3);
    j["failures"] = rel.failures;
    maybe_dump(j, cfg);
    emit(out, j, cfg.output);
    bool ok = rel.all_ok() && vectors.size() == 1 && j["cyclic_from_w"].get<bool>() &&
              j["cyclic_from_K3w"].get<bool>();
    return ok ? 0 : 1;
}

int cmd_center(const CliConfig& cfg, std::ostream& out) {
    AlgebraParams p{cfg.m, Variant::TwoParam};
    Json j;
    if (cfg.element.empty()) {
        AlgElement omega = AlgElement::casimir(p);
        j["casimir"] = omega.to_string();
        j["forms_agree"] = (omega == AlgElement::casimir_ef_form(p));
        Json comms = Json::object();
        comms["E"] = omega.commutator(AlgElement::gen_E(p)).is_zero();
        comms["F"] = omega.commutator(AlgElement::gen_F(p)).is_zero();
        comms["K"] = omega.commutator(AlgElement::gen_K(p)).is_zero();
        comms["H"] = omega.commutator(AlgElement::gen_H(p)).is_zero();
        j["central"] = comms;
        emit(out, j, cfg.output);
        return (j["forms_agree"].get<bool>()) ? 0 : 1;
    }
    AlgElement x = AlgElement::parse(p, cfg.element);
    auto c = center_membership(x);
    j["element"] = x.to_string();
    j["central"] = c.has_value();
    if (c) j["as_polynomial"] = c->to_string();
    emit(out, j, cfg.output);
    return 0;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    std::vector<std::string> names;
    if (cfg.suite == "all") {
        names = suite_names();
    } else {
        auto known = suite_names();
        known.push_back("casimir"); // alias for the center suite
        if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
            raise(Err::UsageError, "unknown suite: " + cfg.suite);
        names = {cfg.suite};
    }
    Json j = Json::array();
    bool all_ok = true;
    for (const auto& name : names) {
        SuiteReport r = run_suite(name, cfg.seed, cfg.m_filter);
        all_ok = all_ok && r.ok();
        j.push_back(r.to_json());
    }
    emit(out, j, cfg.output);
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbolic toolkit for the quantum groups U_q(f_m(K,H)) and U_q(f_m(K))"};
    app.require_subcommand(1);
    CliConfig cfg;
    app.add_flag("--serial", cfg.serial, "run the computational kernels on the serial path");

    auto add_point_opts = [&](CLI::App* cmd) {
        cmd->add_option("--m", cfg.m, "family parameter m >= 1")->required();
        cmd->add_option("--alpha", cfg.alpha, "xi value at the point")->required();
        cmd->add_option("--beta", cfg.beta, "K value at the point (nonzero)")->required();
        cmd->add_option("--gamma", cfg.gamma, "H value at the point (nonzero)")->required();
        cmd->add_option("--n-max", cfg.n_max, "bounded-search fallback range");
        cmd->add_option("--output", cfg.output, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "classify the maximal ideal at a point");
    add_point_opts(classify);

    CLI::App* build = app.add_subcommand("build-rep", "build the module attached to a point");
    add_point_opts(build);
    build->add_option("--window", cfg.window, "index window for infinite cases");
    build->add_option("--q-eval", cfg.q_eval, "also evaluate all matrix entries at q = p/q");
    build->add_option("--out", cfg.out_file, "write the module JSON to a file");

    CLI::App* tensor = app.add_subcommand("tensor-decompose",
                                          "tensor two modules and decompose the product");
    tensor->add_option("--m", cfg.m, "family parameter m");
    tensor->add_option("--s", cfg.s, "coproduct leg exponent (t = s + m)");
    tensor->add_option("--dim1", cfg.dim1, "dimension of the first one-param irreducible");
    tensor->add_option("--dim2", cfg.dim2, "dimension of the second one-param irreducible");
    tensor->add_option("--lhs", cfg.lhs_file, "module JSON file for the left factor");
    tensor->add_option("--rhs", cfg.rhs_file, "module JSON file for the right factor");
    tensor->add_option("--out", cfg.out_file, "write the report to a file");
    tensor->add_option("--output", cfg.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* whitt = app.add_subcommand("whittaker", "build and check a Whittaker module");
    whitt->add_option("--m", cfg.m, "family parameter m")->required();
    whitt->add_option("--e", cfg.e, "eta(E), nonzero")->required();
    whitt->add_option("--a", cfg.a, "xi(Omega)")->required();
    whitt->add_option("--b", cfg.b, "xi(KH), nonzero")->required();
    whitt->add_option("--window", cfg.window, "basis window (>= 2m+2)");
    whitt->add_option("--out", cfg.out_file, "write the module JSON to a file");
    whitt->add_option("--output", cfg.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* center = app.add_subcommand("center", "Casimir data and center membership");
    center->add_option("--m", cfg.m, "family parameter m")->required();
    center->add_option("--element", cfg.element, "element text to test for centrality");
    center->add_option("--output", cfg.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", cfg.suite, "suite name or 'all'");
    verify->add_option("--m", cfg.m_filter, "restrict the suite to one family parameter");
    verify->add_option("--seed", cfg.seed, "seed recorded in the reports");
    verify->add_option("--output", cfg.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.serial) par::set_mode(par::Mode::Serial);
    try {
        if (classify->parsed()) return cmd_classify(cfg, out);
        if (build->parsed()) return cmd_build_rep(cfg, out);
        if (tensor->parsed()) return cmd_tensor_decompose(cfg, out);
        if (whitt->parsed()) return cmd_whittaker(cfg, out);
        if (center->parsed()) return cmd_center(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace uqfm
