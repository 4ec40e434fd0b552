#pragma once

// Dense matrices over GF(q) and the exact linear algebra the category
// layer needs: rank / reduced echelon form / kernel, enumeration of
// injective matrices in a canonical order, and factorization of
// invertible matrices into elementary generators.
//
// GF(2) elimination runs on rows packed into 64-bit words; other q use
// byte rows.

#include "vimod/field.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vimod {

class Mat {
public:
    Mat() : F_(&gf(2)) {}
    Mat(const Gf& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0)
    {
    }
    Mat(const Gf& F, int rows, int cols, std::vector<felem> entries)
        : F_(&F), rows_(rows), cols_(cols), a_(std::move(entries))
    {
        if (a_.size() != std::size_t(rows) * cols)
            throw DomainError("entry count does not match shape");
    }

    static Mat identity(const Gf& F, int n)
    {
        Mat m(F, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const Gf& field() const { return *F_; }
    int q() const { return F_->order(); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    felem& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    felem at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    const std::vector<felem>& entries() const { return a_; }

    bool operator==(const Mat& o) const
    {
        return q() == o.q() && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat operator*(const Mat& o) const
    {
        if (cols_ != o.rows_ || q() != o.q()) throw DomainError("matrix product shape mismatch");
        Mat r(*F_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                felem x = at(i, k);
                if (!x) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = F_->add(r.at(i, j), F_->mul(x, o.at(k, j)));
            }
        return r;
    }

    std::size_t hash() const
    {
        std::size_t h = std::hash<int>()(rows_ * 131 + cols_);
        for (felem e : a_) h = h * 1099511628211ull + e;
        return h;
    }

    std::string str() const
    {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += std::to_string(int(at(i, j)));
            }
        }
        return s + "]";
    }

private:
    const Gf* F_;
    int rows_ = 0, cols_ = 0;
    std::vector<felem> a_;
};

struct RankProfile {
    int rank = 0;
    Mat rref;
    std::vector<int> pivots;          // pivot column per rref row
    std::vector<std::vector<felem>> kernel;  // column vectors spanning ker M
};

namespace detail {

inline void rref_gf2_inplace(std::vector<std::uint64_t>& rows, int nrows, int cols, int words,
                             std::vector<int>& pivots)
{
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        int w = c >> 6;
        std::uint64_t bit = 1ull << (c & 63);
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[std::size_t(i) * words + w] & bit) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int k = 0; k < words; ++k)
                std::swap(rows[std::size_t(sel) * words + k], rows[std::size_t(r) * words + k]);
        for (int i = 0; i < nrows; ++i) {
            if (i == r) continue;
            if (rows[std::size_t(i) * words + w] & bit)
                for (int k = 0; k < words; ++k)
                    rows[std::size_t(i) * words + k] ^= rows[std::size_t(r) * words + k];
        }
        pivots.push_back(c);
        ++r;
    }
}

}  // namespace detail

inline RankProfile rank_profile(const Mat& m)
{
    const Gf& F = m.field();
    const int rows = m.rows(), cols = m.cols();
    RankProfile out;
    out.rref = m;
    if (F.order() == 2 && cols > 0) {
        const int words = (cols + 63) / 64;
        std::vector<std::uint64_t> packed(std::size_t(rows) * words, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (m.at(i, j)) packed[std::size_t(i) * words + (j >> 6)] |= 1ull << (j & 63);
        detail::rref_gf2_inplace(packed, rows, cols, words, out.pivots);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                out.rref.at(i, j) = (packed[std::size_t(i) * words + (j >> 6)] >> (j & 63)) & 1;
    } else {
        Mat& a = out.rref;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int sel = -1;
            for (int i = r; i < rows; ++i)
                if (a.at(i, c)) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r)
                for (int k = 0; k < cols; ++k) std::swap(a.at(sel, k), a.at(r, k));
            felem piv_inv = F.inv(a.at(r, c));
            for (int k = c; k < cols; ++k) a.at(r, k) = F.mul(piv_inv, a.at(r, k));
            for (int i = 0; i < rows; ++i) {
                if (i == r) continue;
                felem x = a.at(i, c);
                if (!x) continue;
                for (int k = c; k < cols; ++k)
                    a.at(i, k) = F.sub(a.at(i, k), F.mul(x, a.at(r, k)));
            }
            out.pivots.push_back(c);
            ++r;
        }
    }
    out.rank = int(out.pivots.size());
    // kernel basis from the free columns of the rref
    std::vector<int> pivot_row(cols, -1);
    for (int r = 0; r < out.rank; ++r) pivot_row[out.pivots[r]] = r;
    for (int c = 0; c < cols; ++c) {
        if (pivot_row[c] >= 0) continue;
        std::vector<felem> v(cols, 0);
        v[c] = 1;
        for (int j = 0; j < cols; ++j)
            if (pivot_row[j] >= 0) v[j] = F.neg(out.rref.at(pivot_row[j], c));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

inline int rank(const Mat& m) { return rank_profile(m).rank; }

inline bool is_injective(const Mat& m) { return rank(m) == m.cols(); }

/// |{injective b x a matrices over GF(q)}| = prod_{i<a} (q^b - q^i).
inline std::uint64_t injective_count(int a, int b, int q)
{
    if (a > b) return 0;
    std::uint64_t qb = 1;
    for (int i = 0; i < b; ++i) qb *= std::uint64_t(q);
    std::uint64_t n = 1, qi = 1;
    for (int i = 0; i < a; ++i) {
        n *= qb - qi;
        qi *= std::uint64_t(q);
    }
    return n;
}

/// Counts injective b x a matrices by direct construction: extend column
/// by column, rejecting vectors in the span of the chosen ones. Serves as
/// the enumeration cross-check for the closed-form count.
inline std::uint64_t count_injective_enumerated(int a, int b, int q)
{
    if (a == 0) return 1;
    if (a > b) return 0;
    const Gf& F = gf(q);
    std::uint64_t qb = 1;
    for (int i = 0; i < b; ++i) qb *= std::uint64_t(q);
    if (qb > (1u << 26)) throw SizeError("ambient space too large to enumerate");
    std::vector<felem> digits(std::size_t(qb) * b);
    for (std::uint64_t v = 0; v < qb; ++v) {
        std::uint64_t t = v;
        for (int i = 0; i < b; ++i) {
            digits[v * b + i] = felem(t % q);
            t /= q;
        }
    }
    // span membership table over element codes; updated on entry/exit of
    // each recursion level
    std::vector<char> in_span(qb, 0);
    in_span[0] = 1;
    std::vector<std::uint64_t> span{0};
    std::uint64_t total = 0;
    auto add_code = [&](std::uint64_t x, std::uint64_t y, felem c) {
        std::uint64_t r = 0, mul = 1;
        for (int i = 0; i < b; ++i) {
            felem s = F.add(digits[x * b + i], F.mul(c, digits[y * b + i]));
            r += std::uint64_t(s) * mul;
            mul *= q;
        }
        return r;
    };
    std::function<void(int)> rec = [&](int depth) {
        if (depth == a) {
            ++total;
            return;
        }
        for (std::uint64_t v = 1; v < qb; ++v) {
            if (in_span[v]) continue;
            if (depth + 1 == a) {
                // the last column needs no span extension
                ++total;
                continue;
            }
            std::size_t old_size = span.size();
            for (std::size_t s = 0; s < old_size; ++s)
                for (int c = 1; c < q; ++c) {
                    std::uint64_t w = add_code(span[s], v, felem(c));
                    if (!in_span[w]) {
                        in_span[w] = 1;
                        span.push_back(w);
                    }
                }
            rec(depth + 1);
            while (span.size() > old_size) {
                in_span[span.back()] = 0;
                span.pop_back();
            }
        }
    };
    rec(0);
    return total;
}

/// All injective b x a matrices over GF(q), ordered lexicographically by
/// the row-major entry sequence. This order fixes every module basis, so
/// it must never change.
inline std::vector<Mat> enumerate_injective(int a, int b, int q,
                                            std::uint64_t scan_cap = (1ull << 26))
{
    const Gf& F = gf(q);
    std::vector<Mat> out;
    if (a == 0) {
        out.emplace_back(F, b, 0);
        return out;
    }
    if (a > b) return out;
    const int n = a * b;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= std::uint64_t(q);
        if (total > scan_cap) throw SizeError("injective enumeration exceeds configured cap");
    }
    out.reserve(injective_count(a, b, q));
    std::vector<felem> e(n, 0);
    for (std::uint64_t v = 0; v < total; ++v) {
        Mat m(F, b, a, e);
        if (is_injective(m)) out.push_back(std::move(m));
        // increment the row-major entry counter (last entry fastest)
        for (int i = n - 1; i >= 0; --i) {
            if (++e[i] < q) break;
            e[i] = 0;
        }
    }
    return out;
}

// --- elementary generator words ------------------------------------------

struct ElemOp {
    enum Kind { Transvection, Swap, Scale } kind;
    int i = 0, j = 0;  // Transvection: row_i += c*row_j ; Swap: rows i,j
    felem c = 0;       // Scale: row_i *= c

    Mat matrix(const Gf& F, int n) const
    {
        Mat m = Mat::identity(F, n);
        switch (kind) {
            case Transvection: m.at(i, j) = c; break;
            case Swap:
                m.at(i, i) = m.at(j, j) = 0;
                m.at(i, j) = m.at(j, i) = 1;
                break;
            case Scale: m.at(i, i) = c; break;
        }
        return m;
    }
};

/// Writes an invertible matrix as an ordered product of elementary
/// matrices (g = word[0] * word[1] * ...). Gauss-Jordan on a working
/// copy; each recorded op is the inverse of the row operation applied.
inline std::vector<ElemOp> factor_invertible(const Mat& g)
{
    if (g.rows() != g.cols()) throw DomainError("factor_invertible: matrix not square");
    const Gf& F = g.field();
    const int n = g.rows();
    Mat a = g;
    // Row-reduce with ops R_t...R_1 g = I and record the inverse of each
    // op as it is applied; then g = R_1^{-1} ... R_t^{-1} = word product.
    std::vector<ElemOp> word;
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = c; i < n; ++i)
            if (a.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0) throw DomainError("factor_invertible: matrix is singular");
        if (sel != c) {
            for (int k = 0; k < n; ++k) std::swap(a.at(sel, k), a.at(c, k));
            word.push_back({ElemOp::Swap, c, sel, 0});
        }
        felem piv = a.at(c, c);
        if (piv != 1) {
            felem inv = F.inv(piv);
            for (int k = 0; k < n; ++k) a.at(c, k) = F.mul(inv, a.at(c, k));
            word.push_back({ElemOp::Scale, c, c, piv});
        }
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            felem x = a.at(i, c);
            if (!x) continue;
            for (int k = 0; k < n; ++k) a.at(i, k) = F.sub(a.at(i, k), F.mul(x, a.at(c, k)));
            word.push_back({ElemOp::Transvection, i, c, x});
        }
    }
    return word;
}

inline Mat compose_word(const Gf& F, int n, const std::vector<ElemOp>& word)
{
    Mat m = Mat::identity(F, n);
    for (const ElemOp& op : word) m = m * op.matrix(F, n);
    return m;
}

}  // namespace vimod

template <>
struct std::hash<vimod::Mat> {
    std::size_t operator()(const vimod::Mat& m) const { return m.hash(); }
};
