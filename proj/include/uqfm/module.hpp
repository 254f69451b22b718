#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqfm/algebra.hpp"
#include "uqfm/sparse_mat.hpp"
#include "uqfm/spectrum.hpp"

namespace uqfm {

/// Valid input range (basis positions, inclusive) for applying a ladder
/// generator without leaving a truncation window.
struct SafeRange {
    int lo = 0;
    int hi = -1;

    bool covers(int pos) const { return pos >= lo && pos <= hi; }
};

/// A weight representation materialized as exact matrices. K and H act
/// diagonally; E and F are ladder maps. Infinite-dimensional cases live on
/// a finite index window and quantify every assertion over the interior.
struct WeightModule {
    AlgebraParams params;
    std::vector<std::string> labels;
    SparseMat actE, actF, actK, actH;
    std::vector<bool> interior;
    SafeRange safeE, safeF; // K, H are diagonal and always safe
    bool windowed = false;
    int index_lo = 0; // basis position k carries ladder index k + index_lo

    std::optional<MaxIdealPoint> point;
    std::optional<SpectrumCase> spec_case;
    std::string note;

    int dim() const { return static_cast<int>(labels.size()); }
    std::vector<int> interior_positions() const;
};

/// Builds the irreducible quotient attached to the classified point. The
/// case is re-derived and must match. window only applies to the
/// infinite-dimensional cases.
WeightModule build_module(const MaxIdealPoint& p, const SpectrumCase& c, int window = 12);

/// Applies a normal-form element through the generator matrices.
/// Ladder moves that would cross the window boundary raise
/// BoundaryOverflow instead of silently truncating.
Vec act(const WeightModule& m, const AlgElement& u, const Vec& v);

struct RelationReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> failures;

    bool all_ok() const { return failures.empty(); }
};

/// Checks the defining relations as exact matrix identities on interior
/// columns, plus invertibility of the K and H diagonals.
RelationReport verify_relations(const WeightModule& m);

struct WeightDatum {
    FieldElem k_eig;
    FieldElem h_eig;
    int multiplicity = 0;
};

/// Diagonal data grouped by (K, H) eigenvalue pair, sorted by net q-degree
/// of the K eigenvalue, descending.
std::vector<WeightDatum> weight_decomposition(const WeightModule& m);

/// Some(c) iff the Casimir acts as c * id on the interior.
std::optional<FieldElem> casimir_scalar(const WeightModule& m);

/// Finite-dimensional only: true iff the module has no proper nonzero
/// submodule, decided by the highest-weight-vector count and the span
/// closure of the highest weight vector.
bool is_irreducible(const WeightModule& m);

/// E-ladder coefficients of a chain module with F normalized to shifts;
/// used for canonical isomorphism signatures.
std::vector<FieldElem> ladder_coefficients(const WeightModule& m);

} // namespace uqfm
