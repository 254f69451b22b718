#pragma once

#include <optional>
#include <set>
#include <string>

#include "uqfm/relement.hpp"

namespace uqfm {

/// Maximal ideal (xi - alpha, K - beta, H - gamma) of R, as a point.
struct MaxIdealPoint {
    FieldElem alpha;
    FieldElem beta;
    FieldElem gamma;
    int m = 1;

    void validate() const;
    bool operator==(const MaxIdealPoint& o) const = default;
    std::string to_string() const;
};

enum class SpectrumKind { OneOne, OneFinite, OneInfinity, InfinityOne, InfinityInfinity };

struct SpectrumCase {
    SpectrumKind kind = SpectrumKind::InfinityInfinity;
    int n = 0; // only meaningful for OneOne (0) / OneFinite
    bool proved = true;
    int n_max = 0; // search bound when proved is false

    static SpectrumCase one_finite(int n);

    /// Fixed external naming: P_1_1, P_1_n+1, P_1_inf, P_inf_1, P_inf_inf.
    std::string case_name() const;
    bool same_case(const SpectrumCase& o) const { return kind == o.kind && n == o.n; }
};

/// Substitute xi -> alpha, K -> beta, H -> gamma. r lies in the ideal iff
/// the result is zero.
FieldElem evaluate_at_point(const RElement& r, const MaxIdealPoint& p);

/// theta^n(xi) evaluated at the point, any sign of n.
FieldElem theta_xi_at(const MaxIdealPoint& p, long n);

/// The exact set { n in [-span, span] or beyond : theta^n(xi) lies in the
/// ideal }. Decided by the q-degree argument: theta^n(xi) at the point is
/// Q + P q^{2mn} + R q^{-2mn} up to a nonzero factor, so any zero pins n
/// to one of finitely many degree-balancing candidates, each then checked
/// exactly. The returned set is complete over all of Z.
std::set<long> xi_membership_set(const MaxIdealPoint& p);

/// Plain scan over n in [-n_max, n_max]; BoundedSearch fallback and test
/// cross-check for xi_membership_set.
std::set<long> xi_membership_scan(const MaxIdealPoint& p, int n_max);

/// Case classification of the point per the construction theorems.
SpectrumCase classify_spectrum(const MaxIdealPoint& p, int n_max = 64);

/// Whether theta^n moves the maximal ideal, by comparing generator images.
bool orbit_distinct(const MaxIdealPoint& p, long n);

/// The point generating theta^n(M_{alpha,beta,gamma}).
MaxIdealPoint theta_shift_point(const MaxIdealPoint& p, long n);

} // namespace uqfm
