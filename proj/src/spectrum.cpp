#include "uqfm/spectrum.hpp"

#include "uqfm/error.hpp"

namespace uqfm {

void MaxIdealPoint::validate() const {
    if (m < 1) raise(Err::InvalidPoint, "m must be >= 1");
    if (beta.is_zero() || gamma.is_zero())
        raise(Err::InvalidPoint, "K and H are invertible: beta, gamma must be nonzero");
}

std::string MaxIdealPoint::to_string() const {
    return "(alpha=" + alpha.to_string() + ", beta=" + beta.to_string() +
           ", gamma=" + gamma.to_string() + ", m=" + std::to_string(m) + ")";
}

SpectrumCase SpectrumCase::one_finite(int n) {
    SpectrumCase c;
    c.kind = (n == 0) ? SpectrumKind::OneOne : SpectrumKind::OneFinite;
    c.n = n;
    return c;
}

std::string SpectrumCase::case_name() const {
    switch (kind) {
        case SpectrumKind::OneOne: return "P_1_1";
        case SpectrumKind::OneFinite: return "P_1_n+1";
        case SpectrumKind::OneInfinity: return "P_1_inf";
        case SpectrumKind::InfinityOne: return "P_inf_1";
        case SpectrumKind::InfinityInfinity: return "P_inf_inf";
    }
    return "?";
}

FieldElem evaluate_at_point(const RElement& r, const MaxIdealPoint& p) {
    p.validate();
    FieldElem out;
    for (const auto& [k, c] : r.terms()) {
        auto [e, i, j] = k;
        out = out + c * p.alpha.pow(e) * p.beta.pow(i) * p.gamma.pow(j);
    }
    return out;
}

FieldElem theta_xi_at(const MaxIdealPoint& p, long n) {
    return p.alpha + evaluate_at_point(theta_shift_of_xi(n, p.m), p);
}

std::set<long> xi_membership_scan(const MaxIdealPoint& p, int n_max) {
    p.validate();
    std::set<long> hits;
    for (long n = -n_max; n <= n_max; ++n)
        if (theta_xi_at(p, n).is_zero()) hits.insert(n);
    return hits;
}

namespace {

// Collects integer candidates n from a linear relation c = 2*m*n*k.
void add_candidate(std::set<long>& out, long c, long k, int m) {
    long denom = 2L * m * k;
    if (c % denom == 0) out.insert(c / denom);
}

} // namespace

std::set<long> xi_membership_set(const MaxIdealPoint& p) {
    p.validate();
    const int m = p.m;
    FieldElem qmq = FieldElem::q_pow(1) - FieldElem::q_pow(-1);
    FieldElem x = FieldElem::q_pow(2 * m);
    FieldElem bm = p.beta.pow(m);
    FieldElem gm = p.gamma.pow(m);

    // (q - q^-1)(q^{2m} - 1) * theta^n(xi)(p)  =  Q + P u + R u^{-1},
    // with u = q^{2mn}. A zero forces the top q-degrees (and valuations)
    // of two of the three summands to collide, which pins n.
    FieldElem P = -(x * gm);
    FieldElem R = -bm;
    FieldElem Q = p.alpha * qmq * (x - FieldElem(1)) + bm + x * gm;

    std::set<long> candidates;
    candidates.insert(0);
    auto pair_up = [&](const FieldElem& f, const FieldElem& g, long k) {
        // deg(f) + 2mn*k = deg(g), likewise for the low-degree valuation
        if (f.is_zero() || g.is_zero()) return;
        add_candidate(candidates, g.net_degree() - f.net_degree(), k, m);
        add_candidate(candidates, g.valuation() - f.valuation(), k, m);
    };
    pair_up(P, Q, 1);   // P u vs Q
    pair_up(P, R, 2);   // P u vs R u^{-1}
    pair_up(R, Q, -1);  // R u^{-1} vs Q

    std::set<long> hits;
    for (long n : candidates)
        if (theta_xi_at(p, n).is_zero()) hits.insert(n);
    return hits;
}

SpectrumCase classify_spectrum(const MaxIdealPoint& p, int n_max) {
    p.validate();
    if (n_max < 1) raise(Err::InvalidData, "n_max must be >= 1");

    std::set<long> hits;
    SpectrumCase out;
    try {
        hits = xi_membership_set(p);
        out.proved = true;
    } catch (const Error&) {
        hits = xi_membership_scan(p, n_max);
        out.proved = false;
        out.n_max = n_max;
    }

    const bool highest_weight = hits.count(-1) > 0;
    std::optional<long> n_plus;
    bool has_negative = false;
    for (long n : hits) {
        if (n >= 0 && !n_plus) n_plus = n;
        if (n <= -1) has_negative = true;
    }

    if (highest_weight && n_plus) {
        SpectrumCase c = SpectrumCase::one_finite(static_cast<int>(*n_plus));
        c.proved = out.proved;
        c.n_max = out.n_max;
        return c;
    }
    if (highest_weight) {
        out.kind = SpectrumKind::OneInfinity;
        return out;
    }
    if (p.alpha.is_zero() && !has_negative) {
        out.kind = SpectrumKind::InfinityOne;
        return out;
    }
    out.kind = SpectrumKind::InfinityInfinity;
    return out;
}

MaxIdealPoint theta_shift_point(const MaxIdealPoint& p, long n) {
    MaxIdealPoint out = p;
    out.beta = FieldElem::q_pow(2 * n) * p.beta;
    out.gamma = FieldElem::q_pow(-2 * n) * p.gamma;
    // theta^n(xi - alpha) = xi + shift(K, H) - alpha, reduced modulo the
    // shifted K and H generators.
    RElement shift = theta_shift_of_xi(n, p.m);
    out.alpha = p.alpha - evaluate_at_point(shift, out);
    return out;
}

bool orbit_distinct(const MaxIdealPoint& p, long n) {
    p.validate();
    return !(theta_shift_point(p, n) == p);
}

} // namespace uqfm
