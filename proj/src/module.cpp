#include "uqfm/module.hpp"

#include <algorithm>

#include "uqfm/error.hpp"
#include "uqfm/linalg.hpp"

namespace uqfm {

std::vector<int> WeightModule::interior_positions() const {
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
        if (interior[k]) out.push_back(k);
    return out;
}

namespace {

std::string ladder_label(int idx) { return "v" + std::to_string(idx); }

WeightModule make_shell(const MaxIdealPoint& p, const SpectrumCase& c, int dim) {
    WeightModule m;
    m.params = AlgebraParams{p.m, Variant::TwoParam};
    m.actE = SparseMat(dim, dim);
    m.actF = SparseMat(dim, dim);
    m.actK = SparseMat(dim, dim);
    m.actH = SparseMat(dim, dim);
    m.interior.assign(dim, true);
    m.safeE = {0, dim - 1};
    m.safeF = {0, dim - 1};
    m.point = p;
    m.spec_case = c;
    return m;
}

} // namespace

WeightModule build_module(const MaxIdealPoint& p, const SpectrumCase& c, int window) {
    p.validate();
    SpectrumCase actual = classify_spectrum(p);
    if (!actual.same_case(c))
        raise(Err::CaseMismatch, "case " + c.case_name() + " does not classify the point (got " +
                                     actual.case_name() + ")");

    const bool finite = (c.kind == SpectrumKind::OneOne || c.kind == SpectrumKind::OneFinite);
    if (!finite && window < 2) raise(Err::WindowTooSmall, "window must be >= 2");

    switch (c.kind) {
        case SpectrumKind::OneOne:
        case SpectrumKind::OneFinite: {
            const int n = c.n;
            WeightModule m = make_shell(p, actual, n + 1);
            for (int k = 0; k <= n; ++k) {
                m.labels.push_back(ladder_label(k));
                m.actK.set(k, k, FieldElem::q_pow(-2 * k) * p.beta);
                m.actH.set(k, k, FieldElem::q_pow(2 * k) * p.gamma);
                if (k < n) m.actF.set(k + 1, k, FieldElem(1));
                if (k >= 1) m.actE.set(k - 1, k, theta_xi_at(p, k - 1));
            }
            return m;
        }
        case SpectrumKind::OneInfinity: {
            const int n = window;
            WeightModule m = make_shell(p, actual, n + 1);
            m.windowed = true;
            for (int k = 0; k <= n; ++k) {
                m.labels.push_back(ladder_label(k));
                m.actK.set(k, k, FieldElem::q_pow(-2 * k) * p.beta);
                m.actH.set(k, k, FieldElem::q_pow(2 * k) * p.gamma);
                if (k < n) m.actF.set(k + 1, k, FieldElem(1));
                if (k >= 1) m.actE.set(k - 1, k, theta_xi_at(p, k - 1));
                m.interior[k] = (k <= n - 1);
            }
            m.safeF = {0, n - 1};
            return m;
        }
        case SpectrumKind::InfinityOne: {
            // Lowest weight: basis E^k, E shifts up, F comes back with
            // theta^{-k}(xi) evaluated at the point.
            const int n = window;
            WeightModule m = make_shell(p, actual, n + 1);
            m.windowed = true;
            for (int k = 0; k <= n; ++k) {
                m.labels.push_back(ladder_label(k));
                m.actK.set(k, k, FieldElem::q_pow(2 * k) * p.beta);
                m.actH.set(k, k, FieldElem::q_pow(-2 * k) * p.gamma);
                if (k < n) m.actE.set(k + 1, k, FieldElem(1));
                if (k >= 1) m.actF.set(k - 1, k, theta_xi_at(p, -k));
                m.interior[k] = (k <= n - 1);
            }
            m.safeE = {0, n - 1};
            return m;
        }
        case SpectrumKind::InfinityInfinity: {
            const int n = window;
            const int dim = 2 * n + 1;
            WeightModule m = make_shell(p, actual, dim);
            m.windowed = true;
            m.index_lo = -n;
            for (int pos = 0; pos < dim; ++pos) {
                const int idx = pos - n;
                m.labels.push_back(ladder_label(idx));
                m.actK.set(pos, pos, FieldElem::q_pow(-2 * idx) * p.beta);
                m.actH.set(pos, pos, FieldElem::q_pow(2 * idx) * p.gamma);
                if (pos < dim - 1) m.actF.set(pos + 1, pos, FieldElem(1));
                if (pos >= 1) m.actE.set(pos - 1, pos, theta_xi_at(p, idx - 1));
                m.interior[pos] = (pos >= 1 && pos <= dim - 2);
            }
            m.safeF = {0, dim - 2};
            m.safeE = {1, dim - 1};
            return m;
        }
    }
    raise(Err::Internal, "unreachable");
}

namespace {

void check_safe(const WeightModule& m, const Vec& w, const SafeRange& s, const char* gen) {
    if (!m.windowed) return;
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos)
        if (!w[pos].is_zero() && !s.covers(pos))
            raise(Err::BoundaryOverflow,
                  std::string("applying ") + gen + " at window boundary position " +
                      std::to_string(pos + m.index_lo));
}

void apply_diag_power(const SparseMat& d, Vec& w, int power) {
    if (power == 0) return;
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
        if (w[pos].is_zero()) continue;
        w[pos] = w[pos] * d.at(pos, pos).pow(power);
    }
}

} // namespace

Vec act(const WeightModule& m, const AlgElement& u, const Vec& v) {
    if (!(u.params() == m.params)) raise(Err::ParamMismatch, "element vs module algebra");
    if (static_cast<int>(v.size()) != m.dim()) raise(Err::Internal, "vector dimension");
    Vec out(m.dim());
    for (const auto& [mono, c] : u.terms()) {
        Vec w = v;
        for (int t = 0; t < mono.b; ++t) {
            check_safe(m, w, m.safeE, "E");
            w = m.actE.apply(w);
        }
        apply_diag_power(m.actH, w, mono.j);
        apply_diag_power(m.actK, w, mono.i);
        for (int t = 0; t < mono.a; ++t) {
            check_safe(m, w, m.safeF, "F");
            w = m.actF.apply(w);
        }
        for (int pos = 0; pos < m.dim(); ++pos) out[pos] = out[pos] + c * w[pos];
    }
    return out;
}

namespace {

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

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec scale(const Vec& a, const FieldElem& c) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

} // namespace

RelationReport verify_relations(const WeightModule& m) {
    RelationReport report;
    const FieldElem q2 = FieldElem::q_pow(2);
    const FieldElem qm2 = FieldElem::q_pow(-2);
    FieldElem qmq = FieldElem::q_pow(1) - FieldElem::q_pow(-1);

    bool diag_ok = m.actK.is_diagonal() && m.actH.is_diagonal();
    for (int k = 0; k < m.dim() && diag_ok; ++k)
        if (m.actK.at(k, k).is_zero() || m.actH.at(k, k).is_zero()) diag_ok = false;
    report.checks.push_back({"K, H diagonal and invertible", diag_ok});
    if (!diag_ok) report.failures.push_back("K or H is not an invertible diagonal");

    struct Rel {
        std::string name;
        bool ok = true;
    };
    std::vector<Rel> rels = {{"KE = q^2 EK"}, {"KF = q^-2 FK"}, {"HE = q^-2 EH"},
                             {"HF = q^2 FH"}, {"KH = HK"},      {"EF - FE = f_m(K,H)"}};

    for (int c : m.interior_positions()) {
        Vec ec = basis_vec(m.dim(), c);
        Vec vE = m.actE.apply(ec);
        Vec vF = m.actF.apply(ec);
        Vec vK = m.actK.apply(ec);
        Vec vH = m.actH.apply(ec);

        auto check = [&](int idx, const Vec& lhs, const Vec& rhs) {
            if (!vec_zero(sub(lhs, rhs))) {
                rels[idx].ok = false;
                report.failures.push_back(rels[idx].name + " fails at basis " + m.labels[c]);
            }
        };
        check(0, m.actK.apply(vE), scale(m.actE.apply(vK), q2));
        check(1, m.actK.apply(vF), scale(m.actF.apply(vK), qm2));
        check(2, m.actH.apply(vE), scale(m.actE.apply(vH), qm2));
        check(3, m.actH.apply(vF), scale(m.actF.apply(vH), q2));
        check(4, m.actK.apply(vH), m.actH.apply(vK));

        FieldElem kd = m.actK.at(c, c);
        FieldElem hd = m.actH.at(c, c);
        FieldElem f_val = (kd.pow(m.params.m) - hd.pow(m.params.m)) / qmq;
        check(5, sub(m.actE.apply(vF), m.actF.apply(vE)), scale(ec, f_val));
    }
    for (const auto& r : rels) report.checks.push_back({r.name, r.ok});
    return report;
}

std::vector<WeightDatum> weight_decomposition(const WeightModule& m) {
    std::vector<WeightDatum> out;
    for (int k = 0; k < m.dim(); ++k) {
        FieldElem ke = m.actK.at(k, k);
        FieldElem he = m.actH.at(k, k);
        bool found = false;
        for (auto& d : out) {
            if (d.k_eig == ke && d.h_eig == he) {
                ++d.multiplicity;
                found = true;
                break;
            }
        }
        if (!found) out.push_back({ke, he, 1});
    }
    std::sort(out.begin(), out.end(), [](const WeightDatum& a, const WeightDatum& b) {
        long da = a.k_eig.net_degree(), db = b.k_eig.net_degree();
        if (da != db) return da > db;
        auto ka = a.k_eig.to_string(), kb = b.k_eig.to_string();
        if (ka != kb) return ka < kb;
        return a.h_eig.to_string() < b.h_eig.to_string();
    });
    return out;
}

std::optional<FieldElem> casimir_scalar(const WeightModule& m) {
    if (!m.actK.is_diagonal() || !m.actH.is_diagonal()) return std::nullopt;
    const int mm = m.params.m;
    FieldElem qmq = FieldElem::q_pow(1) - FieldElem::q_pow(-1);
    FieldElem d = (FieldElem::q_pow(2 * mm) - FieldElem(1)) * qmq;

    std::optional<FieldElem> scalar;
    for (int c : m.interior_positions()) {
        Vec ec = basis_vec(m.dim(), c);
        Vec w = m.actF.apply(m.actE.apply(ec));
        FieldElem g =
            (FieldElem::q_pow(2 * mm) * m.actK.at(c, c).pow(mm) + m.actH.at(c, c).pow(mm)) / d;
        w[c] = w[c] + g;
        for (int pos = 0; pos < m.dim(); ++pos) {
            if (pos == c) continue;
            if (!w[pos].is_zero()) return std::nullopt;
        }
        if (!scalar) {
            scalar = w[c];
        } else if (*scalar != w[c]) {
            return std::nullopt;
        }
    }
    return scalar;
}

bool is_irreducible(const WeightModule& m) {
    if (m.windowed) raise(Err::DomainViolation, "is_irreducible needs a finite-dimensional module");
    const int n = m.dim();
    if (n == 0) return false;

    auto hw = kernel_basis(to_dense(m.actE), n);
    if (hw.size() != 1) return false;

    // Span closure of the highest weight vector under the four actions.
    SpanBasis span(n);
    std::vector<Vec> queue;
    span.insert(hw[0]);
    queue.push_back(hw[0]);
    const SparseMat* gens[] = {&m.actE, &m.actF, &m.actK, &m.actH};
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        for (const SparseMat* g : gens) {
            Vec w = g->apply(v);
            if (!vec_zero(w) && span.insert(w)) queue.push_back(w);
        }
    }
    return span.rank() == n;
}

std::vector<FieldElem> ladder_coefficients(const WeightModule& m) {
    if (m.windowed) raise(Err::DomainViolation, "ladder_coefficients needs a finite module");
    auto hw = kernel_basis(to_dense(m.actE), m.dim());
    if (hw.size() != 1) raise(Err::DomainViolation, "not a single chain");

    std::vector<Vec> chain{hw[0]};
    for (;;) {
        Vec next = m.actF.apply(chain.back());
        if (vec_zero(next)) break;
        chain.push_back(next);
        if (static_cast<int>(chain.size()) > m.dim())
            raise(Err::Internal, "F chain exceeds dimension");
    }
    std::vector<FieldElem> coeffs;
    for (std::size_t k = 1; k < chain.size(); ++k) {
        Vec image = m.actE.apply(chain[k]);
        // image must be proportional to chain[k-1]
        FieldElem ratio;
        bool found = false;
        for (int pos = 0; pos < m.dim(); ++pos) {
            if (chain[k - 1][pos].is_zero()) continue;
            ratio = image[pos] / chain[k - 1][pos];
            found = true;
            break;
        }
        if (!found) raise(Err::Internal, "zero chain vector");
        if (!vec_zero(sub(image, scale(chain[k - 1], ratio))))
            raise(Err::DomainViolation, "E image is not proportional along the chain");
        coeffs.push_back(ratio);
    }
    return coeffs;
}

} // namespace uqfm
