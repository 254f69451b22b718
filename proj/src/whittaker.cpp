#include "uqfm/whittaker.hpp"

#include "uqfm/error.hpp"
#include "uqfm/linalg.hpp"
#include "uqfm/rand.hpp"

namespace uqfm {

void WhittakerData::validate() const {
    if (m < 1) raise(Err::InvalidData, "m must be >= 1");
    if (e.is_zero()) raise(Err::InvalidData, "eta(E) must be nonzero");
    if (b.is_zero()) raise(Err::InvalidData, "xi(KH) must be nonzero");
    if (window < 2 * m + 2) raise(Err::WindowTooSmall, "window must be >= 2m + 2");
}

std::vector<int> WhittakerModule::interior_positions() const {
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
        if (interior[k]) out.push_back(k);
    return out;
}

namespace {

FieldElem q_minus_qinv() { return FieldElem::q_pow(1) - FieldElem::q_pow(-1); }

} // namespace

WhittakerModule build_whittaker_module(const WhittakerData& d) {
    d.validate();
    const int w = d.window;
    const int m = d.m;
    const int dim = 2 * w + 1;

    WhittakerModule mod;
    mod.data = d;
    mod.params = AlgebraParams{m, Variant::TwoParam};
    mod.actE = SparseMat(dim, dim);
    mod.actF = SparseMat(dim, dim);
    mod.actK = SparseMat(dim, dim);
    mod.actH = SparseMat(dim, dim);
    mod.interior.assign(dim, false);
    mod.safeK.assign(dim, true);
    mod.safeH.assign(dim, true);
    mod.safeF.assign(dim, true);

    for (int i = 0; i <= w; ++i) mod.labels.push_back("K^" + std::to_string(i) + ".w");
    for (int j = 1; j <= w; ++j) mod.labels.push_back("H^" + std::to_string(j) + ".w");

    // E is diagonal: q^{-2i} e on K^i w and q^{2j} e on H^j w.
    for (int i = 0; i <= w; ++i) mod.actE.set(mod.pos_k(i), mod.pos_k(i), FieldElem::q_pow(-2 * i) * d.e);
    for (int j = 1; j <= w; ++j) mod.actE.set(mod.pos_h(j), mod.pos_h(j), FieldElem::q_pow(2 * j) * d.e);

    // K: climb on the K side, descend with a factor b on the H side.
    for (int i = 0; i < w; ++i) mod.actK.set(mod.pos_k(i + 1), mod.pos_k(i), FieldElem(1));
    mod.safeK[mod.pos_k(w)] = false;
    for (int j = 1; j <= w; ++j)
        mod.actK.set(j == 1 ? mod.pos_k(0) : mod.pos_h(j - 1), mod.pos_h(j), d.b);

    // H mirrors K.
    for (int i = 1; i <= w; ++i) mod.actH.set(mod.pos_k(i - 1), mod.pos_k(i), d.b);
    mod.actH.set(mod.pos_h(1), mod.pos_k(0), FieldElem(1));
    for (int j = 1; j < w; ++j) mod.actH.set(mod.pos_h(j + 1), mod.pos_h(j), FieldElem(1));
    mod.safeH[mod.pos_h(w)] = false;

    // F v = (a v - g(K,H) v) / lambda_v with g the Casimir tail and
    // lambda_v the E eigenvalue of v.
    FieldElem dnm = (FieldElem::q_pow(2 * m) - FieldElem(1)) * q_minus_qinv();
    FieldElem q2m = FieldElem::q_pow(2 * m);
    auto set_f = [&](int pos, const FieldElem& lambda, int up_pos, const FieldElem& up_coeff,
                     int down_pos, const FieldElem& down_coeff) {
        FieldElem linv = lambda.inv();
        mod.actF.add(pos, pos, d.a * linv);
        mod.actF.add(up_pos, pos, -(up_coeff / dnm) * linv);
        mod.actF.add(down_pos, pos, -(down_coeff / dnm) * linv);
    };
    for (int i = 0; i <= w; ++i) {
        if (i + m > w) {
            mod.safeF[mod.pos_k(i)] = false;
            continue;
        }
        FieldElem lambda = FieldElem::q_pow(-2 * i) * d.e;
        // g K^i w = (q^{2m} K^{i+m} w + b^{min(i,m)} (K^{i-m} or H^{m-i}) w)/dnm
        int down_pos = (i >= m) ? mod.pos_k(i - m) : mod.pos_h(m - i);
        FieldElem down_coeff = d.b.pow(std::min(i, m));
        set_f(mod.pos_k(i), lambda, mod.pos_k(i + m), q2m, down_pos, down_coeff);
    }
    for (int j = 1; j <= w; ++j) {
        if (j + m > w) {
            mod.safeF[mod.pos_h(j)] = false;
            continue;
        }
        FieldElem lambda = FieldElem::q_pow(2 * j) * d.e;
        // g H^j w = (q^{2m} b^{min(j,m)} (H^{j-m} or K^{m-j}) w + H^{j+m} w)/dnm
        int down_pos;
        if (j > m)
            down_pos = mod.pos_h(j - m);
        else if (j == m)
            down_pos = mod.pos_k(0);
        else
            down_pos = mod.pos_k(m - j);
        FieldElem down_coeff = q2m * d.b.pow(std::min(j, m));
        set_f(mod.pos_h(j), lambda, mod.pos_h(j + m), FieldElem(1), down_pos, down_coeff);
    }

    // Interior: every generator pair in the defining relations stays in
    // the window, which needs an m+1 margin on both wings.
    for (int i = 0; i <= w - m - 1; ++i) mod.interior[mod.pos_k(i)] = true;
    for (int j = 1; j <= w - m - 1; ++j) mod.interior[mod.pos_h(j)] = true;
    return mod;
}

namespace {

void check_safe(const WhittakerModule& m, const Vec& v, const std::vector<bool>& safe,
                const char* gen) {
    for (int pos = 0; pos < m.dim(); ++pos)
        if (!v[pos].is_zero() && !safe[pos])
            raise(Err::BoundaryOverflow,
                  std::string("applying ") + gen + " at window boundary basis " + m.labels[pos]);
}

bool vec_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec basis_vec(int dim, int pos) {
    Vec v(dim);
    v[pos] = FieldElem(1);
    return v;
}

} // namespace

Vec whittaker_act(const WhittakerModule& m, const AlgElement& u, const Vec& v) {
    if (!(u.params() == m.params)) raise(Err::ParamMismatch, "element vs module algebra");
    if (static_cast<int>(v.size()) != m.dim()) raise(Err::Internal, "vector dimension");
    const FieldElem binv = m.data.b.inv();
    Vec out(m.dim());
    for (const auto& [mono, c] : u.terms()) {
        Vec w = v;
        for (int t = 0; t < mono.b; ++t) w = m.actE.apply(w);
        // H^j, negative powers through H^-1 = b^-1 K
        for (int t = 0; t < mono.j; ++t) {
            check_safe(m, w, m.safeH, "H");
            w = m.actH.apply(w);
        }
        for (int t = 0; t < -mono.j; ++t) {
            check_safe(m, w, m.safeK, "H^-1");
            w = m.actK.apply(w);
            for (auto& x : w) x = x * binv;
        }
        for (int t = 0; t < mono.i; ++t) {
            check_safe(m, w, m.safeK, "K");
            w = m.actK.apply(w);
        }
        for (int t = 0; t < -mono.i; ++t) {
            check_safe(m, w, m.safeH, "K^-1");
            w = m.actH.apply(w);
            for (auto& x : w) x = x * binv;
        }
        for (int t = 0; t < mono.a; ++t) {
            check_safe(m, w, m.safeF, "F");
            w = m.actF.apply(w);
        }
        for (int pos = 0; pos < m.dim(); ++pos) out[pos] = out[pos] + c * w[pos];
    }
    return out;
}

RelationReport verify_whittaker_relations(const WhittakerModule& m) {
    RelationReport report;
    const FieldElem q2 = FieldElem::q_pow(2);
    const FieldElem qm2 = FieldElem::q_pow(-2);
    const int mm = m.data.m;
    FieldElem dnm = (FieldElem::q_pow(2 * mm) - FieldElem(1)) * q_minus_qinv();

    struct Rel {
        std::string name;
        bool ok = true;
    };
    std::vector<Rel> rels = {{"KE = q^2 EK"},       {"KF = q^-2 FK"}, {"HE = q^-2 EH"},
                             {"HF = q^2 FH"},       {"KH = HK"},      {"EF - FE = f_m(K,H)"},
                             {"KH = b on interior"}, {"Omega = a on interior"}};

    auto pow_apply = [&](const SparseMat& g, Vec v, int times) {
        for (int t = 0; t < times; ++t) v = g.apply(v);
        return v;
    };

    for (int c : m.interior_positions()) {
        Vec ec = basis_vec(m.dim(), c);
        Vec vE = m.actE.apply(ec);
        Vec vF = m.actF.apply(ec);
        Vec vK = m.actK.apply(ec);
        Vec vH = m.actH.apply(ec);
        auto check = [&](int idx, Vec lhs, Vec rhs) {
            for (int pos = 0; pos < m.dim(); ++pos) lhs[pos] = lhs[pos] - rhs[pos];
            if (!vec_zero(lhs)) {
                rels[idx].ok = false;
                report.failures.push_back(rels[idx].name + " fails at basis " + m.labels[c]);
            }
        };
        auto scale = [&](Vec v, const FieldElem& s) {
            for (auto& x : v) x = x * s;
            return v;
        };
        check(0, m.actK.apply(vE), scale(m.actE.apply(vK), q2));
        check(1, m.actK.apply(vF), scale(m.actF.apply(vK), qm2));
        check(2, m.actH.apply(vE), scale(m.actE.apply(vH), qm2));
        check(3, m.actH.apply(vF), scale(m.actF.apply(vH), q2));
        check(4, m.actK.apply(vH), m.actH.apply(vK));
        // f_m(K,H) e_c through m-fold shifts
        Vec f_ec(m.dim());
        {
            Vec km = pow_apply(m.actK, ec, mm);
            Vec hm = pow_apply(m.actH, ec, mm);
            FieldElem inv = q_minus_qinv().inv();
            for (int pos = 0; pos < m.dim(); ++pos) f_ec[pos] = (km[pos] - hm[pos]) * inv;
        }
        {
            Vec lhs = m.actE.apply(vF);
            Vec rhs = m.actF.apply(vE);
            for (int pos = 0; pos < m.dim(); ++pos) lhs[pos] = lhs[pos] - rhs[pos];
            check(5, lhs, f_ec);
        }
        check(6, m.actH.apply(vK), scale(ec, m.data.b));
        // Omega e_c = F E e_c + (q^{2m} K^m + H^m)/dnm e_c
        {
            Vec omega = m.actF.apply(vE);
            Vec km = pow_apply(m.actK, ec, mm);
            Vec hm = pow_apply(m.actH, ec, mm);
            for (int pos = 0; pos < m.dim(); ++pos)
                omega[pos] =
                    omega[pos] + (FieldElem::q_pow(2 * mm) * km[pos] + hm[pos]) / dnm;
            check(7, omega, scale(ec, m.data.a));
        }
    }
    for (const auto& r : rels) report.checks.push_back({r.name, r.ok});
    return report;
}

std::vector<Vec> whittaker_vectors(const WhittakerModule& m) {
    Matrix rows = to_dense(m.actE);
    for (int k = 0; k < m.dim(); ++k) rows[k][k] = rows[k][k] - m.data.e;
    return kernel_basis(rows, m.dim());
}

bool cyclicity_check(const WhittakerModule& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.dim()) raise(Err::Internal, "vector dimension");
    if (vec_zero(v)) raise(Err::ZeroVector, "cyclicity_check needs a nonzero vector");

    auto supported_safely = [&](const Vec& w, const std::vector<bool>& safe) {
        for (int pos = 0; pos < m.dim(); ++pos)
            if (!w[pos].is_zero() && !safe[pos]) return false;
        return true;
    };

    SpanBasis span(m.dim());
    std::vector<Vec> queue{v};
    span.insert(v);
    std::vector<bool> all_safe(m.dim(), true);
    struct Gen {
        const SparseMat* mat;
        const std::vector<bool>* safe;
    };
    const Gen gens[] = {{&m.actE, &all_safe},
                        {&m.actK, &m.safeK},
                        {&m.actH, &m.safeH},
                        {&m.actF, &m.safeF}};
    while (!queue.empty()) {
        Vec w = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            if (!supported_safely(w, *g.safe)) continue;
            Vec image = g.mat->apply(w);
            if (!vec_zero(image) && span.insert(image)) queue.push_back(image);
        }
    }
    for (int pos : m.interior_positions())
        if (!span.contains(basis_vec(m.dim(), pos))) return false;
    return true;
}

RelationReport annihilator_inclusion_check(const WhittakerModule& m, int samples,
                                           std::uint64_t seed) {
    RelationReport report;
    RandomSource rng(seed);
    const AlgebraParams p = m.params;
    Vec omega_vec = basis_vec(m.dim(), 0);

    AlgElement casimir_shift = AlgElement::casimir(p) - AlgElement::one(p).scaled(m.data.a);
    AlgElement kh_shift =
        AlgElement::term(p, {0, 1, 1, 0}, FieldElem(1)) - AlgElement::one(p).scaled(m.data.b);
    AlgElement e_shift = AlgElement::gen_E(p) - AlgElement::one(p).scaled(m.data.e);

    const std::pair<const char*, const AlgElement*> targets[] = {
        {"u (Omega - a) w = 0", &casimir_shift},
        {"u (KH - b) w = 0", &kh_shift},
        {"u (E - e) w = 0", &e_shift},
    };
    for (const auto& [name, shift] : targets) {
        bool ok = true;
        for (int t = 0; t < samples; ++t) {
            AlgElement u = rng.element(p, 2, 1, 1);
            Vec image = whittaker_act(m, u * *shift, omega_vec);
            if (!vec_zero(image)) {
                ok = false;
                report.failures.push_back(std::string(name) + " fails at sample " +
                                          std::to_string(t));
            }
        }
        report.checks.push_back({name, ok});
    }
    return report;
}

// ---------------------------------------------------------------------------
// A~ (x) W filtration

std::vector<WFiltrationTerm> filtration_decompose(const AlgElement& u, const FieldElem& e) {
    if (e.is_zero()) raise(Err::SingularCharacter, "eta(E) must be nonzero");
    if (u.max_e_degree() > 0) raise(Err::DomainViolation, "element must have E-degree 0");
    const AlgebraParams p = u.params();

    AlgElement pi_omega = eta_projection(AlgElement::casimir(p), e);
    std::map<int, std::map<std::pair<int, int>, FieldElem>> parts;

    AlgElement rem = u;
    while (!rem.is_zero()) {
        int d = rem.max_f_degree();
        if (d == 0) {
            for (const auto& [mono, c] : rem.terms()) parts[mono.i - mono.j][{0, mono.j}] =
                parts[mono.i - mono.j][{0, mono.j}] + c;
            break;
        }
        // Top F-degree terms match against the e^d F^d head of (pi Omega)^d.
        AlgElement sub(p);
        for (const auto& [mono, c] : rem.terms()) {
            if (mono.a != d) continue;
            int l = mono.j;
            int pk = mono.i - mono.j;
            FieldElem coeff = c * e.pow(-d) * FieldElem::q_pow(2L * pk * d);
            parts[pk][{d, l}] = parts[pk][{d, l}] + coeff;
            sub = sub + AlgElement::term(p, {0, pk + l, l, 0}, coeff);
        }
        rem = rem - sub * pi_omega.pow(d);
        if (rem.max_f_degree() >= d) raise(Err::Internal, "filtration did not reduce F-degree");
    }

    std::vector<WFiltrationTerm> out;
    for (auto& [pk, w_part] : parts) {
        for (auto it = w_part.begin(); it != w_part.end();) {
            it = it->second.is_zero() ? w_part.erase(it) : std::next(it);
        }
        if (w_part.empty()) continue;
        out.push_back({pk, std::move(w_part)});
    }
    return out;
}

AlgElement filtration_reconstruct(const std::vector<WFiltrationTerm>& terms, const FieldElem& e,
                                  AlgebraParams params) {
    AlgElement pi_omega = eta_projection(AlgElement::casimir(params), e);
    AlgElement out(params);
    for (const auto& t : terms) {
        for (const auto& [kl, c] : t.w_part) {
            auto [k, l] = kl;
            out = out + AlgElement::term(params, {0, t.k_exponent + l, l, 0}, c) * pi_omega.pow(k);
        }
    }
    return out;
}

bool center_image_independence(int max_deg, const FieldElem& e, int m) {
    if (e.is_zero()) raise(Err::SingularCharacter, "eta(E) must be nonzero");
    AlgebraParams p{m, Variant::TwoParam};
    AlgElement omega = AlgElement::casimir(p);

    std::vector<AlgElement> images;
    for (int k = 0; k <= max_deg; ++k)
        for (int l = -max_deg; l <= max_deg; ++l)
            images.push_back(
                eta_projection(omega.pow(k) * AlgElement::term(p, {0, l, l, 0}, FieldElem(1)), e));

    std::map<Monomial, int> columns;
    for (const auto& im : images)
        for (const auto& [mono, c] : im.terms())
            if (!columns.count(mono)) {
                int next = static_cast<int>(columns.size());
                columns[mono] = next;
            }
    Matrix rows(images.size(), Vec(columns.size()));
    for (std::size_t r = 0; r < images.size(); ++r)
        for (const auto& [mono, c] : images[r].terms()) rows[r][columns[mono]] = c;
    return rank(rows) == static_cast<int>(images.size());
}

int commutant_dimension(const WhittakerModule& m) {
    const std::vector<int> inside = m.interior_positions();
    const int ni = static_cast<int>(inside.size());
    std::vector<int> slot(m.dim(), -1);
    for (int k = 0; k < ni; ++k) slot[inside[k]] = k;
    auto unk = [&](int r, int c) { return slot[r] * ni + slot[c]; };

    std::vector<bool> all_safe(m.dim(), true);
    struct Gen {
        const SparseMat* mat;
        const std::vector<bool>* safe;
    };
    const Gen gens[] = {{&m.actE, &all_safe},
                        {&m.actK, &m.safeK},
                        {&m.actH, &m.safeH},
                        {&m.actF, &m.safeF}};

    Matrix rows;
    for (const auto& g : gens) {
        for (int c : inside) {
            if (!(*g.safe)[c]) continue;
            // Faithful column: the image of e_c must stay interior, else
            // truncation would leak into the equations.
            Vec gc = g.mat->column(c);
            bool faithful = true;
            for (int r = 0; r < m.dim(); ++r)
                if (!gc[r].is_zero() && slot[r] < 0) faithful = false;
            if (!faithful) continue;
            for (int r : inside) {
                // (X G - G X)_{r c} = sum_k X_{r k} G_{k c} - G_{r k} X_{k c}
                Vec eq(ni * ni);
                for (int k : inside) {
                    FieldElem gkc = g.mat->at(k, c);
                    if (!gkc.is_zero()) eq[unk(r, k)] = eq[unk(r, k)] + gkc;
                    FieldElem grk = g.mat->at(r, k);
                    if (!grk.is_zero()) eq[unk(k, c)] = eq[unk(k, c)] - grk;
                }
                bool nonzero = false;
                for (const auto& x : eq)
                    if (!x.is_zero()) nonzero = true;
                if (nonzero) rows.push_back(std::move(eq));
            }
        }
    }
    return ni * ni - rank(rows);
}

} // namespace uqfm
