#include "uqfm/linalg.hpp"

#include "uqfm/parallel.hpp"

namespace uqfm {

RrefResult rref(Matrix rows) {
    RrefResult out;
    const int nrows = static_cast<int>(rows.size());
    const int ncols = nrows == 0 ? 0 : static_cast<int>(rows[0].size());
    int lead = 0;
    for (int col = 0; col < ncols && lead < nrows; ++col) {
        int pivot = -1;
        for (int r = lead; r < nrows; ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[lead], rows[pivot]);
        FieldElem inv = rows[lead][col].inv();
        for (int c = col; c < ncols; ++c)
            if (!rows[lead][c].is_zero()) rows[lead][c] = rows[lead][c] * inv;

        const Vec& prow = rows[lead];
        par::for_range(static_cast<std::size_t>(nrows), [&](std::size_t r) {
            if (static_cast<int>(r) == lead) return;
            FieldElem factor = rows[r][col];
            if (factor.is_zero()) return;
            for (int c = col; c < ncols; ++c)
                if (!prow[c].is_zero()) rows[r][c] = rows[r][c] - factor * prow[c];
        });
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = lead;
    out.mat = std::move(rows);
    return out;
}

int rank(const Matrix& rows) { return rref(rows).rank; }

std::vector<Vec> kernel_basis(const Matrix& rows, int ncols) {
    RrefResult r = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(ncols);
        v[free_col] = FieldElem(1);
        for (int k = 0; k < static_cast<int>(r.pivot_cols.size()); ++k) {
            int pc = r.pivot_cols[k];
            v[pc] = -r.mat[k][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix to_dense(const SparseMat& m) {
    Matrix rows(m.rows(), Vec(m.cols()));
    for (const auto& [rc, e] : m.entries()) rows[rc.first][rc.second] = e;
    return rows;
}

void SpanBasis::reduce(Vec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        FieldElem c = v[lead_cols_[k]];
        if (c.is_zero()) continue;
        for (int i = 0; i < dim_; ++i)
            if (!rows_[k][i].is_zero()) v[i] = v[i] - c * rows_[k][i];
    }
}

bool SpanBasis::insert(Vec v) {
    reduce(v);
    int lead = -1;
    for (int i = 0; i < dim_; ++i) {
        if (!v[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead < 0) return false;
    FieldElem inv = v[lead].inv();
    for (int i = 0; i < dim_; ++i)
        if (!v[i].is_zero()) v[i] = v[i] * inv;
    rows_.push_back(std::move(v));
    lead_cols_.push_back(lead);
    return true;
}

bool SpanBasis::contains(Vec v) const {
    reduce(v);
    for (const FieldElem& c : v)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace uqfm
