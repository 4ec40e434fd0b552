#pragma once

// The categories VI and VI^m. Objects are multidegrees (tuples of
// naturals), morphisms are tuples of injective matrices over GF(q).
// Alongside plain composition this file provides the structural
// morphisms the shift machinery is built from:
//
//  * extend_morphism   - the endofunctor adding a fresh first coordinate
//                        on one axis (block 1 (+) f)
//  * zero_row_inclusion- the canonical inclusion a -> a+e_i whose new
//                        first row is zero
//  * augmentation      - the unipotent automorphism of a+e_i writing a
//                        column vector c under the new coordinate
//
// plus the reduced form: the canonical representative of a morphism's
// orbit under the augmentation group.

#include "vimod/matrix.hpp"

#include "json.hpp"

#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

namespace vimod {

using MultiDegree = std::vector<int>;

inline int total(const MultiDegree& n) { return std::accumulate(n.begin(), n.end(), 0); }

inline MultiDegree plus_e(MultiDegree n, int axis, int delta = 1)
{
    n[axis] += delta;
    return n;
}

inline bool leq(const MultiDegree& a, const MultiDegree& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

struct MultiDegreeHash {
    std::size_t operator()(const MultiDegree& n) const
    {
        std::size_t h = 17;
        for (int v : n) h = h * 1315423911u + std::size_t(v);
        return h;
    }
};

/// Morphism in VI^m: one injective matrix per axis.
class VImMorphism {
public:
    VImMorphism() = default;
    explicit VImMorphism(std::vector<Mat> parts, bool check = true) : parts_(std::move(parts))
    {
        if (check)
            for (const Mat& p : parts_)
                if (!is_injective(p)) throw DomainError("morphism part is not injective");
    }

    static VImMorphism identity(const Gf& F, const MultiDegree& n)
    {
        std::vector<Mat> parts;
        parts.reserve(n.size());
        for (int v : n) parts.push_back(Mat::identity(F, v));
        return VImMorphism(std::move(parts), false);
    }

    int arity() const { return int(parts_.size()); }
    const Mat& part(int i) const { return parts_[i]; }
    const std::vector<Mat>& parts() const { return parts_; }

    MultiDegree source() const
    {
        MultiDegree d;
        for (const Mat& p : parts_) d.push_back(p.cols());
        return d;
    }
    MultiDegree target() const
    {
        MultiDegree d;
        for (const Mat& p : parts_) d.push_back(p.rows());
        return d;
    }

    bool operator==(const VImMorphism& o) const { return parts_ == o.parts_; }

    std::size_t hash() const
    {
        std::size_t h = 99991;
        for (const Mat& p : parts_) h = h * 0x9e3779b97f4a7c15ull + p.hash();
        return h;
    }

private:
    std::vector<Mat> parts_;
};

struct VImMorphismHash {
    std::size_t operator()(const VImMorphism& f) const { return f.hash(); }
};

inline VImMorphism compose(const VImMorphism& g, const VImMorphism& f)
{
    if (g.arity() != f.arity() || g.source() != f.target())
        throw DomainError("compose: degree mismatch");
    std::vector<Mat> parts;
    parts.reserve(g.arity());
    for (int i = 0; i < g.arity(); ++i) parts.push_back(g.part(i) * f.part(i));
    return VImMorphism(std::move(parts), false);
}

/// Number of morphisms a -> b: prod_i prod_{t < a_i} (q^{b_i} - q^t).
inline std::uint64_t hom_count(const MultiDegree& a, const MultiDegree& b, int q)
{
    if (a.size() != b.size()) throw DomainError("hom_count: arity mismatch");
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < a.size(); ++i) n *= injective_count(a[i], b[i], q);
    return n;
}

/// All morphisms a -> b in canonical order: the product order with axis 0
/// slowest, each axis ordered by enumerate_injective.
inline std::vector<VImMorphism> enumerate_hom(const MultiDegree& a, const MultiDegree& b, int q,
                                              std::uint64_t cap = (1ull << 26))
{
    if (a.size() != b.size()) throw DomainError("enumerate_hom: arity mismatch");
    const int m = int(a.size());
    if (hom_count(a, b, q) > cap) throw SizeError("hom set exceeds configured cap");
    std::vector<std::vector<Mat>> per_axis;
    for (int i = 0; i < m; ++i) per_axis.push_back(enumerate_injective(a[i], b[i], q, cap));
    std::vector<VImMorphism> out;
    std::uint64_t n = 1;
    for (const auto& v : per_axis) n *= v.size();
    out.reserve(n);
    std::vector<std::size_t> idx(m, 0);
    if (n == 0) return out;
    for (;;) {
        std::vector<Mat> parts;
        parts.reserve(m);
        for (int i = 0; i < m; ++i) parts.push_back(per_axis[i][idx[i]]);
        out.push_back(VImMorphism(std::move(parts), false));
        int i = m - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < per_axis[i].size()) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

// --- structural morphisms --------------------------------------------------

/// The block matrix (1 | 0 / 0 | f) on one axis, identity elsewhere:
/// the morphism part of the axis-i degree-raising endofunctor.
inline VImMorphism extend_morphism(const VImMorphism& f, int axis)
{
    std::vector<Mat> parts = f.parts();
    const Mat& p = parts[axis];
    const Gf& F = p.field();
    Mat g(F, p.rows() + 1, p.cols() + 1);
    g.at(0, 0) = 1;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) g.at(i + 1, j + 1) = p.at(i, j);
    parts[axis] = std::move(g);
    return VImMorphism(std::move(parts), false);
}

/// Canonical inclusion a -> a+e_i: on axis i the (a_i+1) x a_i matrix
/// with zero first row over the identity, identity on other axes.
inline VImMorphism zero_row_inclusion(const Gf& F, const MultiDegree& a, int axis)
{
    std::vector<Mat> parts;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (int(j) == axis) {
            Mat p(F, a[j] + 1, a[j]);
            for (int k = 0; k < a[j]; ++k) p.at(k + 1, k) = 1;
            parts.push_back(std::move(p));
        } else {
            parts.push_back(Mat::identity(F, a[j]));
        }
    }
    return VImMorphism(std::move(parts), false);
}

/// Automorphism of a+e_i placing the column vector c below the new first
/// coordinate of axis i; these form the unipotent group acting on the
/// shifted degree. c has length a_i.
inline VImMorphism augmentation(const Gf& F, const MultiDegree& a, int axis,
                                const std::vector<felem>& c)
{
    if (int(c.size()) != a[axis]) throw DomainError("augmentation: vector length mismatch");
    std::vector<Mat> parts;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (int(j) == axis) {
            Mat p = Mat::identity(F, a[j] + 1);
            for (int k = 0; k < a[j]; ++k) p.at(k + 1, 0) = c[k];
            parts.push_back(std::move(p));
        } else {
            parts.push_back(Mat::identity(F, a[j]));
        }
    }
    return VImMorphism(std::move(parts), false);
}

/// All q^{a_i} augmentation vectors c, in lexicographic order with the
/// last entry fastest.
inline std::vector<std::vector<felem>> augmentation_vectors(int len, int q)
{
    std::vector<std::vector<felem>> out;
    std::vector<felem> c(len, 0);
    for (;;) {
        out.push_back(c);
        int i = len - 1;
        for (; i >= 0; --i) {
            if (++c[i] < q) break;
            c[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

// --- reduced form (m = 1 view) ---------------------------------------------

/// First-row / lower-block split of a single-axis morphism into degree a+1.
struct FirstRowSplit {
    std::vector<felem> beta;  // first row, length n
    Mat gamma;                // last a rows
};

inline FirstRowSplit split_first_row(const Mat& f)
{
    if (f.rows() < 1) throw DomainError("split_first_row: empty target");
    FirstRowSplit s;
    s.beta.resize(f.cols());
    for (int j = 0; j < f.cols(); ++j) s.beta[j] = f.at(0, j);
    s.gamma = Mat(f.field(), f.rows() - 1, f.cols());
    for (int i = 1; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) s.gamma.at(i - 1, j) = f.at(i, j);
    return s;
}

struct ReducedForm {
    Mat fbar;                // canonical orbit representative
    std::vector<felem> c;    // augmentation vector with fbar = aug(c) * f
};

/// Canonical representative of the augmentation-group orbit of f (a
/// single-axis morphism n -> a+1). If the first row is zero the morphism
/// is already fixed by the whole group; otherwise the unique group
/// element zeroing the lower-block column under the first nonzero
/// first-row entry is applied.
inline ReducedForm reduce_morphism(const Mat& f)
{
    if (f.cols() < 1) throw DomainError("reduce_morphism: source must be positive");
    if (f.rows() < 1) throw DomainError("reduce_morphism: target must be positive");
    const Gf& F = f.field();
    const int a = f.rows() - 1, n = f.cols();
    FirstRowSplit s = split_first_row(f);
    int j = -1;
    for (int k = 0; k < n; ++k)
        if (s.beta[k]) {
            j = k;
            break;
        }
    ReducedForm out{f, std::vector<felem>(a, 0)};
    if (j < 0) return out;  // beta = 0: whole orbit is {f}
    felem bj_inv = F.inv(s.beta[j]);
    for (int i = 0; i < a; ++i) out.c[i] = F.neg(F.mul(bj_inv, s.gamma.at(i, j)));
    // fbar = aug(c) * f, computed directly: gamma_fbar = c*beta + gamma
    Mat fbar = f;
    for (int i = 0; i < a; ++i)
        for (int k = 0; k < n; ++k)
            fbar.at(i + 1, k) = F.add(f.at(i + 1, k), F.mul(out.c[i], s.beta[k]));
    out.fbar = std::move(fbar);
    return out;
}

/// Orbit of f under post-composition with the augmentation group of its
/// target degree. Size 1 when the first row vanishes, q^a otherwise.
inline std::vector<Mat> augmentation_orbit(const Mat& f, std::uint64_t cap = (1u << 20))
{
    const Gf& F = f.field();
    const int a = f.rows() - 1;
    std::uint64_t size = 1;
    for (int i = 0; i < a; ++i) {
        size *= std::uint64_t(F.order());
        if (size > cap) throw SizeError("augmentation group exceeds cap");
    }
    std::vector<Mat> orbit;
    std::unordered_map<Mat, char> seen;
    for (const auto& c : augmentation_vectors(a, F.order())) {
        Mat g = f;
        FirstRowSplit s = split_first_row(f);
        for (int i = 0; i < a; ++i)
            for (int k = 0; k < f.cols(); ++k)
                g.at(i + 1, k) = F.add(f.at(i + 1, k), F.mul(c[i], s.beta[k]));
        if (seen.emplace(g, 1).second) orbit.push_back(std::move(g));
    }
    return orbit;
}

// --- serialization ----------------------------------------------------------

inline nlohmann::json mat_to_json(const Mat& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const nlohmann::json& j, const Gf& F, int rows, int cols)
{
    if (!j.is_array() || int(j.size()) != rows) throw DomainError("matrix json: bad row count");
    Mat m(F, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || int(j[i].size()) != cols)
            throw DomainError("matrix json: bad column count");
        for (int k = 0; k < cols; ++k) {
            int v = j[i][k].get<int>();
            if (v < 0 || v >= F.order()) throw DomainError("matrix json: entry out of field");
            m.at(i, k) = felem(v);
        }
    }
    return m;
}

inline nlohmann::json morphism_to_json(const VImMorphism& f)
{
    nlohmann::json j;
    j["source"] = f.source();
    j["target"] = f.target();
    nlohmann::json parts = nlohmann::json::array();
    for (const Mat& p : f.parts()) parts.push_back(mat_to_json(p));
    j["parts"] = std::move(parts);
    return j;
}

inline VImMorphism morphism_from_json(const nlohmann::json& j, const Gf& F)
{
    auto src = j.at("source").get<std::vector<int>>();
    auto tgt = j.at("target").get<std::vector<int>>();
    if (src.size() != tgt.size()) throw DomainError("morphism json: arity mismatch");
    std::vector<Mat> parts;
    for (std::size_t i = 0; i < src.size(); ++i)
        parts.push_back(mat_from_json(j.at("parts").at(i), F, tgt[i], src[i]));
    return VImMorphism(std::move(parts));  // re-checks injectivity
}

}  // namespace vimod
