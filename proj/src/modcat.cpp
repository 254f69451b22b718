#include "uqfm/modcat.hpp"

#include <algorithm>

#include "uqfm/error.hpp"
#include "uqfm/linalg.hpp"

namespace uqfm {

WeightModule pullback_pi_w(const WeightModule& m, const FieldElem& w) {
    if (m.params.variant != Variant::OneParam)
        raise(Err::ParamMismatch, "pullback starts from a OneParam module");
    if (w.is_zero()) raise(Err::ZeroParameter, "pullback parameter w must be nonzero");

    WeightModule out = m;
    out.params = AlgebraParams{m.params.m, Variant::TwoParam};
    out.actE = m.actE.scaled(w.pow(m.params.m));
    out.actK = m.actK.scaled(w);
    out.actH = m.actK.diagonal_inverse().scaled(w);
    out.note = "pullback(w=" + w.to_string() + ") of " + (m.note.empty() ? "module" : m.note);
    return out;
}

WeightModule epsilon_w(int m, const FieldElem& w) {
    if (w.is_zero()) raise(Err::ZeroParameter, "epsilon parameter w must be nonzero");
    WeightModule out;
    out.params = AlgebraParams{m, Variant::TwoParam};
    out.labels = {"v0"};
    out.actE = SparseMat(1, 1);
    out.actF = SparseMat(1, 1);
    out.actK = SparseMat(1, 1);
    out.actH = SparseMat(1, 1);
    out.actK.set(0, 0, w);
    out.actH.set(0, 0, w);
    out.interior = {true};
    out.safeE = {0, 0};
    out.safeF = {0, 0};
    out.note = "epsilon(w=" + w.to_string() + ")";
    return out;
}

SparseMat element_matrix(const WeightModule& m, const AlgElement& u) {
    if (m.windowed) raise(Err::DomainViolation, "element_matrix needs a finite module");
    SparseMat out(m.dim(), m.dim());
    for (const auto& [mono, c] : u.terms()) {
        SparseMat t = SparseMat::identity(m.dim()).scaled(c);
        auto diag_pow = [&](const SparseMat& d, int p) {
            SparseMat r(m.dim(), m.dim());
            for (int k = 0; k < m.dim(); ++k) r.set(k, k, d.at(k, k).pow(p));
            return r;
        };
        for (int k = 0; k < mono.a; ++k) t = m.actF * t;
        if (mono.i != 0) t = t * diag_pow(m.actK, mono.i);
        if (mono.j != 0) t = t * diag_pow(m.actH, mono.j);
        for (int k = 0; k < mono.b; ++k) t = t * m.actE;
        out = out + t;
    }
    return out;
}

namespace {

SparseMat kron(const SparseMat& a, const SparseMat& b) {
    SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (const auto& [rc, e] : a.entries())
        for (const auto& [rc2, e2] : b.entries())
            out.set(rc.first * b.rows() + rc2.first, rc.second * b.cols() + rc2.second, e * e2);
    return out;
}

SparseMat monomial_matrix(const WeightModule& m, const Monomial& mono) {
    return element_matrix(m, AlgElement::term(m.params, mono, FieldElem(1)));
}

SparseMat tensor_action(const WeightModule& a, const WeightModule& b, const TensorElement& image) {
    SparseMat out(a.dim() * b.dim(), a.dim() * b.dim());
    for (const auto& [legs, c] : image.terms())
        out = out + kron(monomial_matrix(a, legs.first), monomial_matrix(b, legs.second)).scaled(c);
    return out;
}

} // namespace

WeightModule tensor_product(const WeightModule& a, const WeightModule& b,
                            const HopfPreset& preset) {
    if (!preset.certified)
        raise(Err::UncertifiedCoproduct, "preset '" + preset.name + "' is not certified");
    if (!(a.params == b.params) || !(a.params == preset.params))
        raise(Err::ParamMismatch, "tensor factors and preset must share an algebra");
    if (a.windowed || b.windowed)
        raise(Err::DomainViolation, "tensor_product needs finite modules");

    WeightModule out;
    out.params = a.params;
    for (const auto& la : a.labels)
        for (const auto& lb : b.labels) out.labels.push_back(la + "*" + lb);
    out.actE = tensor_action(a, b, preset.dE);
    out.actF = tensor_action(a, b, preset.dF);
    out.actK = tensor_action(a, b, preset.dK);
    out.actH = tensor_action(a, b, preset.dH);
    out.interior.assign(out.labels.size(), true);
    out.safeE = {0, out.dim() - 1};
    out.safeF = {0, out.dim() - 1};
    out.note = "tensor";
    return out;
}

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
    if (!(a.params == b.params)) raise(Err::ParamMismatch, "direct sum params");
    if (a.windowed || b.windowed) raise(Err::DomainViolation, "direct_sum needs finite modules");
    const int n = a.dim() + b.dim();
    WeightModule out;
    out.params = a.params;
    for (int k = 0; k < n; ++k) out.labels.push_back("s" + std::to_string(k));
    auto block = [&](const SparseMat& ma, const SparseMat& mb) {
        SparseMat r(n, n);
        for (const auto& [rc, e] : ma.entries()) r.set(rc.first, rc.second, e);
        for (const auto& [rc, e] : mb.entries())
            r.set(rc.first + a.dim(), rc.second + a.dim(), e);
        return r;
    };
    out.actE = block(a.actE, b.actE);
    out.actF = block(a.actF, b.actF);
    out.actK = block(a.actK, b.actK);
    out.actH = block(a.actH, b.actH);
    out.interior.assign(n, true);
    out.safeE = {0, n - 1};
    out.safeF = {0, n - 1};
    out.note = "direct_sum";
    return out;
}

namespace {

bool vec_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

FieldElem proportionality(const Vec& image, const Vec& base) {
    FieldElem ratio;
    bool found = false;
    for (std::size_t pos = 0; pos < base.size(); ++pos) {
        if (base[pos].is_zero()) continue;
        ratio = image[pos] / base[pos];
        found = true;
        break;
    }
    if (!found) raise(Err::Internal, "proportionality against zero vector");
    for (std::size_t pos = 0; pos < base.size(); ++pos)
        if (image[pos] != ratio * base[pos])
            raise(Err::DecompositionFailure, "vector is not a weight-line multiple");
    return ratio;
}

WeightModule chain_to_module(const WeightModule& parent, const std::vector<Vec>& chain) {
    const int d = static_cast<int>(chain.size());
    WeightModule out;
    out.params = parent.params;
    out.actE = SparseMat(d, d);
    out.actF = SparseMat(d, d);
    out.actK = SparseMat(d, d);
    out.actH = SparseMat(d, d);
    out.interior.assign(d, true);
    out.safeE = {0, d - 1};
    out.safeF = {0, d - 1};
    out.note = "summand";
    for (int k = 0; k < d; ++k) {
        out.labels.push_back("v" + std::to_string(k));
        out.actK.set(k, k, proportionality(parent.actK.apply(chain[k]), chain[k]));
        out.actH.set(k, k, proportionality(parent.actH.apply(chain[k]), chain[k]));
        if (k + 1 < d) out.actF.set(k + 1, k, FieldElem(1));
        if (k >= 1) out.actE.set(k - 1, k, proportionality(parent.actE.apply(chain[k]), chain[k - 1]));
    }
    return out;
}

struct ChainSignature {
    std::vector<std::string> weights;
    std::vector<std::string> e_coeffs;

    bool operator==(const ChainSignature& o) const = default;
};

ChainSignature signature_of(const WeightModule& chain) {
    ChainSignature sig;
    for (int k = 0; k < chain.dim(); ++k)
        sig.weights.push_back(chain.actK.at(k, k).to_string() + "|" +
                              chain.actH.at(k, k).to_string());
    for (const FieldElem& c : ladder_coefficients(chain)) sig.e_coeffs.push_back(c.to_string());
    return sig;
}

} // namespace

std::vector<Summand> decompose_completely(const WeightModule& m) {
    if (m.windowed) raise(Err::DomainViolation, "decompose_completely needs a finite module");
    if (!m.actK.is_diagonal() || !m.actH.is_diagonal())
        raise(Err::DomainViolation, "not a weight module: K or H not diagonal");
    const int n = m.dim();

    // Group basis positions by weight, in the deterministic order of
    // weight_decomposition (descending net degree of the K eigenvalue).
    auto weights = weight_decomposition(m);
    std::vector<std::vector<int>> groups;
    for (const auto& wd : weights) {
        std::vector<int> group;
        for (int k = 0; k < n; ++k)
            if (m.actK.at(k, k) == wd.k_eig && m.actH.at(k, k) == wd.h_eig) group.push_back(k);
        groups.push_back(group);
    }

    // Highest weight vectors: kernel of E restricted to one weight space.
    std::vector<Vec> hw_vectors;
    for (const auto& group : groups) {
        Matrix eqs(n, Vec(group.size()));
        for (std::size_t gc = 0; gc < group.size(); ++gc) {
            Vec col = m.actE.column(group[gc]);
            for (int r = 0; r < n; ++r) eqs[r][gc] = col[r];
        }
        for (const Vec& k : kernel_basis(eqs, static_cast<int>(group.size()))) {
            Vec v(n);
            for (std::size_t gc = 0; gc < group.size(); ++gc) v[group[gc]] = k[gc];
            hw_vectors.push_back(std::move(v));
        }
    }

    // F-chain below each highest weight vector.
    std::vector<std::vector<Vec>> chains;
    SpanBasis total(n);
    int covered = 0;
    for (const Vec& hw : hw_vectors) {
        std::vector<Vec> chain{hw};
        for (;;) {
            Vec next = m.actF.apply(chain.back());
            if (vec_zero(next)) break;
            chain.push_back(next);
            if (static_cast<int>(chain.size()) > n)
                raise(Err::DecompositionFailure, "F chain exceeds dimension");
        }
        for (const Vec& v : chain)
            if (!total.insert(v))
                raise(Err::DecompositionFailure, "chain vectors are not independent");
        covered += static_cast<int>(chain.size());
        chains.push_back(std::move(chain));
    }
    if (covered != n || total.rank() != n)
        raise(Err::DecompositionFailure, "highest weight chains do not exhaust the module");

    std::vector<Summand> out;
    std::vector<ChainSignature> seen;
    for (const auto& chain : chains) {
        WeightModule sm = chain_to_module(m, chain);
        // A zero E coefficient inside a chain would leave a reducible
        // summand, i.e. a genuine counterexample to complete reducibility.
        for (int k = 1; k < sm.dim(); ++k)
            if (sm.actE.at(k - 1, k).is_zero())
                raise(Err::DecompositionFailure, "reducible highest weight chain");
        ChainSignature sig = signature_of(sm);
        bool merged = false;
        for (std::size_t k = 0; k < seen.size(); ++k) {
            if (seen[k] == sig) {
                ++out[k].multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) {
            seen.push_back(sig);
            out.push_back({std::move(sm), 1});
        }
    }
    return out;
}

bool modules_isomorphic(const WeightModule& a, const WeightModule& b) {
    if (a.windowed || b.windowed)
        raise(Err::DomainViolation, "modules_isomorphic needs finite modules");
    if (a.dim() != b.dim() || !(a.params == b.params)) return false;

    auto da = decompose_completely(a);
    auto db = decompose_completely(b);
    if (da.size() != db.size()) return false;

    std::vector<bool> used(db.size(), false);
    for (const auto& sa : da) {
        ChainSignature sig = signature_of(sa.module);
        bool matched = false;
        for (std::size_t k = 0; k < db.size(); ++k) {
            if (used[k]) continue;
            if (db[k].multiplicity == sa.multiplicity && signature_of(db[k].module) == sig) {
                used[k] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

WeightModule one_param_finite_irrep(int m, int n) {
    FieldElem qmq = FieldElem::q_pow(1) - FieldElem::q_pow(-1);
    MaxIdealPoint p;
    p.m = m;
    p.beta = FieldElem::q_pow(n);
    p.gamma = FieldElem::q_pow(-n);
    p.alpha = (p.beta.pow(m) - p.gamma.pow(m)) / qmq;
    SpectrumCase c = classify_spectrum(p);
    WeightModule two = build_module(p, c);
    if (two.dim() != n + 1)
        raise(Err::Internal, "unexpected dimension for the one-param irrep");
    return to_one_param(two);
}

WeightModule to_one_param(const WeightModule& m) {
    if (m.params.variant == Variant::OneParam) return m;
    if (m.actH != m.actK.diagonal_inverse())
        raise(Err::DomainViolation, "module does not factor through H = K^-1");
    WeightModule out = m;
    out.params = AlgebraParams{m.params.m, Variant::OneParam};
    return out;
}

} // namespace uqfm
