#pragma once

#include <map>
#include <vector>

#include "uqfm/error.hpp"
#include "uqfm/field_elem.hpp"

namespace uqfm {

using Vec = std::vector<FieldElem>;

/// Sparse exact matrix over Q(q); only nonzero entries are stored.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseMat identity(int n);
    static SparseMat diagonal(const Vec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, FieldElem>& entries() const { return entries_; }

    void set(int r, int c, const FieldElem& v);
    void add(int r, int c, const FieldElem& v);
    FieldElem at(int r, int c) const;

    Vec apply(const Vec& v) const;
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat scaled(const FieldElem& c) const;
    bool operator==(const SparseMat& o) const;
    bool operator!=(const SparseMat& o) const { return !(*this == o); }

    bool is_diagonal() const;
    /// Inverse of a diagonal matrix; all diagonal entries must be nonzero.
    SparseMat diagonal_inverse() const;

    /// Column c as a dense vector.
    Vec column(int c) const;

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, FieldElem> entries_;
};

inline SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, FieldElem(1));
    return m;
}

inline SparseMat SparseMat::diagonal(const Vec& d) {
    SparseMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < static_cast<int>(d.size()); ++i) m.set(i, i, d[i]);
    return m;
}

inline void SparseMat::set(int r, int c, const FieldElem& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) raise(Err::Internal, "matrix index");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

inline void SparseMat::add(int r, int c, const FieldElem& v) { set(r, c, at(r, c) + v); }

inline FieldElem SparseMat::at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? FieldElem() : it->second;
}

inline Vec SparseMat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) raise(Err::Internal, "matrix/vector shape");
    Vec out(rows_);
    for (const auto& [rc, e] : entries_) {
        if (v[rc.second].is_zero()) continue;
        out[rc.first] = out[rc.first] + e * v[rc.second];
    }
    return out;
}

inline SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) raise(Err::Internal, "matrix product shape");
    SparseMat out(rows_, o.cols_);
    for (const auto& [rc, e] : entries_)
        for (const auto& [rc2, e2] : o.entries_)
            if (rc.second == rc2.first) out.add(rc.first, rc2.second, e * e2);
    return out;
}

inline SparseMat SparseMat::operator+(const SparseMat& o) const {
    SparseMat out = *this;
    for (const auto& [rc, e] : o.entries_) out.add(rc.first, rc.second, e);
    return out;
}

inline SparseMat SparseMat::operator-(const SparseMat& o) const {
    SparseMat out = *this;
    for (const auto& [rc, e] : o.entries_) out.add(rc.first, rc.second, -e);
    return out;
}

inline SparseMat SparseMat::scaled(const FieldElem& c) const {
    SparseMat out(rows_, cols_);
    if (c.is_zero()) return out;
    for (const auto& [rc, e] : entries_) out.entries_[rc] = e * c;
    return out;
}

inline bool SparseMat::operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

inline bool SparseMat::is_diagonal() const {
    for (const auto& [rc, e] : entries_)
        if (rc.first != rc.second) return false;
    return true;
}

inline SparseMat SparseMat::diagonal_inverse() const {
    if (rows_ != cols_ || !is_diagonal()) raise(Err::Internal, "diagonal_inverse shape");
    SparseMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        FieldElem d = at(i, i);
        if (d.is_zero()) raise(Err::Internal, "diagonal_inverse: zero diagonal entry");
        out.set(i, i, d.inv());
    }
    return out;
}

inline Vec SparseMat::column(int c) const {
    Vec out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

} // namespace uqfm
