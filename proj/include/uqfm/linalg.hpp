#pragma once

#include <vector>

#include "uqfm/sparse_mat.hpp"

namespace uqfm {

/// Dense row-major matrix for elimination work.
using Matrix = std::vector<Vec>;

struct RrefResult {
    Matrix mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot rule
/// is first-nonzero, so the result is canonical; the per-pivot row updates
/// run through the parallel kernel.
RrefResult rref(Matrix rows);

int rank(const Matrix& rows);

/// Basis of { x : A x = 0 } for the equation rows A, each basis vector
/// with its first nonzero coordinate scaled to 1.
std::vector<Vec> kernel_basis(const Matrix& rows, int ncols);

Matrix to_dense(const SparseMat& m);

/// Exact linear span tracker: feed vectors, query membership and rank.
class SpanBasis {
public:
    explicit SpanBasis(int dim) : dim_(dim) {}

    /// Adds v to the span; returns true when v was independent.
    bool insert(Vec v);
    bool contains(Vec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    void reduce(Vec& v) const;

    int dim_;
    std::vector<Vec> rows_;       // echelonized, leading entries 1
    std::vector<int> lead_cols_;
};

} // namespace uqfm
