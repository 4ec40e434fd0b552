#pragma once

// Dense exact linear algebra over a coefficient field F (see scalar.hpp):
// matrices, kernels, and an incremental reduced-echelon accumulator used
// for span, quotient, and closure computations. Everything is
// deterministic: pivots are always the leftmost available column, so
// representative bases are reproducible bit for bit.

#include "vimod/scalar.hpp"

#include <cassert>
#include <vector>

namespace vimod {

template <class F>
using KVec = std::vector<typename F::Elem>;

template <class F>
class KMat {
public:
    using Elem = typename F::Elem;

    KMat() = default;
    KMat(const F& f, int rows, int cols)
        : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, f.zero())
    {
    }

    static KMat identity(const F& f, int n)
    {
        KMat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    KVec<F> col(int j) const
    {
        KVec<F> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    void set_col(int j, const KVec<F>& v)
    {
        for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    bool equals(const F& f, const KMat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!f.eq(a_[i], o.a_[i])) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

template <class F>
KMat<F> kmul(const F& f, const KMat<F>& a, const KMat<F>& b)
{
    assert(a.cols() == b.rows());
    KMat<F> r(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const auto& x = a.at(i, k);
            if (f.is_zero(x)) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(x, b.at(k, j)));
        }
    return r;
}

template <class F>
KVec<F> kmatvec(const F& f, const KMat<F>& a, const KVec<F>& v)
{
    assert(int(v.size()) == a.cols());
    KVec<F> r(a.rows(), f.zero());
    for (int i = 0; i < a.rows(); ++i) {
        auto s = f.zero();
        for (int j = 0; j < a.cols(); ++j)
            if (!f.is_zero(v[j])) s = f.add(s, f.mul(a.at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

/// Incremental reduced row echelon form over F. Rows are kept fully
/// reduced with unit leftmost pivots; insert() reduces a vector against
/// the current rows and either absorbs it (returns false) or adds it as
/// a new row and back-substitutes (returns true).
template <class F>
class Rref {
public:
    using Elem = typename F::Elem;

    Rref(const F& f, int dim) : f_(&f), dim_(dim), row_of_pivot_(dim, -1) {}

    int dim() const { return dim_; }
    int rank() const { return int(rows_.size()); }
    const std::vector<KVec<F>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    int row_of_pivot(int col) const { return row_of_pivot_[col]; }

    /// Reduces v in place against the accumulated rows.
    void reduce(KVec<F>& v) const
    {
        const F& f = *f_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Elem& c = v[pivots_[r]];
            if (f.is_zero(c)) continue;
            Elem cc = c;  // copy: v[pivot] is overwritten below
            const KVec<F>& row = rows_[r];
            for (int j = pivots_[r]; j < dim_; ++j)
                if (!f.is_zero(row[j])) v[j] = f.sub(v[j], f.mul(cc, row[j]));
        }
    }

    bool contains(KVec<F> v) const
    {
        reduce(v);
        const F& f = *f_;
        for (const Elem& x : v)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool insert(KVec<F> v)
    {
        assert(int(v.size()) == dim_);
        const F& f = *f_;
        reduce(v);
        int p = -1;
        for (int j = 0; j < dim_; ++j)
            if (!f.is_zero(v[j])) {
                p = j;
                break;
            }
        if (p < 0) return false;
        Elem inv = f.inv(v[p]);
        for (int j = p; j < dim_; ++j)
            if (!f.is_zero(v[j])) v[j] = f.mul(inv, v[j]);
        // back-substitute into existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Elem c = rows_[r][p];
            if (f.is_zero(c)) continue;
            for (int j = p; j < dim_; ++j)
                if (!f.is_zero(v[j])) rows_[r][j] = f.sub(rows_[r][j], f.mul(c, v[j]));
        }
        // keep rows ordered by pivot column
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        row_of_pivot_[p] = 0;  // rebuilt below
        for (std::size_t r = 0; r < pivots_.size(); ++r) row_of_pivot_[pivots_[r]] = int(r);
        return true;
    }

    /// Rank of the set of vectors restricted to the given coordinates
    /// (used for intersections with coordinate subspaces).
    int rank_restricted(const std::vector<int>& coords) const
    {
        const F& f = *f_;
        Rref<F> r(f, int(coords.size()));
        for (const KVec<F>& row : rows_) {
            KVec<F> v(coords.size());
            for (std::size_t j = 0; j < coords.size(); ++j) v[j] = row[coords[j]];
            r.insert(std::move(v));
        }
        return r.rank();
    }

private:
    const F* f_;
    int dim_;
    std::vector<KVec<F>> rows_;
    std::vector<int> pivots_;
    std::vector<int> row_of_pivot_;
};

/// Kernel basis of a matrix, echelon-structured: each basis vector is 1
/// at its free column and zero at the other free columns, so kernel
/// coordinates of a vector can be read off the free entries.
template <class F>
struct KernelBasis {
    std::vector<KVec<F>> vectors;  // length = cols of the matrix
    std::vector<int> free_cols;    // one per vector
    int rank = 0;
};

template <class F>
KernelBasis<F> kernel_basis(const F& f, const KMat<F>& m)
{
    Rref<F> r(f, m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        KVec<F> row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        r.insert(std::move(row));
    }
    KernelBasis<F> out;
    out.rank = r.rank();
    std::vector<int> pivot_row(m.cols(), -1);
    for (int i = 0; i < r.rank(); ++i) pivot_row[r.pivots()[i]] = i;
    for (int c = 0; c < m.cols(); ++c) {
        if (pivot_row[c] >= 0) continue;
        KVec<F> v(m.cols(), f.zero());
        v[c] = f.one();
        for (int j = 0; j < m.cols(); ++j)
            if (pivot_row[j] >= 0) v[j] = f.neg(r.rows()[pivot_row[j]][c]);
        out.vectors.push_back(std::move(v));
        out.free_cols.push_back(c);
    }
    return out;
}

template <class F>
int rank_of(const F& f, const KMat<F>& m)
{
    Rref<F> r(f, m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        KVec<F> row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        r.insert(std::move(row));
    }
    return r.rank();
}

/// Expresses vectors lying in span(columns of B) in the column basis B.
/// Precomputes one elimination of [B^T | I].
template <class F>
class SectionSolver {
public:
    SectionSolver(const F& f, const KMat<F>& basis_cols) : f_(&f), n_(basis_cols.rows())
    {
        r_ = int(basis_cols.cols());
        // augmented rows: [column^T | e_k^T], eliminated over the first n_ coords
        Rref<F> acc(f, n_ + r_);
        for (int k = 0; k < r_; ++k) {
            KVec<F> row(n_ + r_, f.zero());
            for (int i = 0; i < n_; ++i) row[i] = basis_cols.at(i, k);
            row[n_ + k] = f.one();
            acc.insert(std::move(row));
        }
        rows_ = acc.rows();
        pivots_ = acc.pivots();
        // all pivots must land in the coordinate block, else some column
        // was a combination of the others
        for (int p : pivots_)
            if (p >= n_) throw DomainError("SectionSolver: columns not independent");
    }

    /// Coordinates x with B x = v; throws if v is outside the span.
    KVec<F> solve(const KVec<F>& v) const
    {
        const F& f = *f_;
        KVec<F> w(n_ + r_, f.zero());
        for (int i = 0; i < n_; ++i) w[i] = v[i];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (pivots_[r] >= n_) break;  // pivot in the augmented part: basis dependent, unreachable
            const auto& c = w[pivots_[r]];
            if (f.is_zero(c)) continue;
            auto cc = c;
            for (int j = pivots_[r]; j < n_ + r_; ++j)
                if (!f.is_zero(rows_[r][j])) w[j] = f.sub(w[j], f.mul(cc, rows_[r][j]));
        }
        for (int i = 0; i < n_; ++i)
            if (!f.is_zero(w[i])) throw DomainError("SectionSolver: vector outside span");
        KVec<F> x(r_);
        for (int k = 0; k < r_; ++k) x[k] = f.neg(w[n_ + k]);
        return x;
    }

private:
    const F* f_;
    int n_, r_;
    std::vector<KVec<F>> rows_;
    std::vector<int> pivots_;
};

}  // namespace vimod
