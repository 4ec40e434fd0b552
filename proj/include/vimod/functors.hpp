#pragma once

// Endofunctors on graded module evaluations:
//
//  * ShiftEval    - natural shift along one axis, (Sigma_i V)(a) = V(a+e_i),
//                   with morphisms acting through the extended block form.
//  * ModShiftEval - modified shift: coinvariants of the shift under the
//                   augmentation group, realized as the image of the
//                   averaging idempotent (the group order is invertible
//                   in the coefficient field).
//  * KernelEval   - K_i V, the degreewise kernel of the canonical
//                   inclusion a -> a+e_i.
//  * SubQuotEval  - quotient of a module by a degreewise subspace; used
//                   for D_i (cokernel of the unit into the modified
//                   shift) and for H0.
//
// Plus span closures under the degreewise automorphism groups, the span
// of all maps from lower degrees, and the class decomposition of the
// shift of a free module.

#include "vimod/module.hpp"

#include <functional>
#include <map>

namespace vimod {

/// Generators of the automorphism group of degree n: per axis, all
/// transvections plus the scalings of the first coordinate (these
/// generate GL(n_i, q)), extended by identities on the other axes.
inline std::vector<VImMorphism> automorphism_generators(int q, const MultiDegree& n,
                                                        const std::vector<int>& axes)
{
    const Gf& F = gf(q);
    std::vector<VImMorphism> out;
    auto push = [&](int axis, const Mat& g) {
        std::vector<Mat> parts;
        for (std::size_t j = 0; j < n.size(); ++j)
            parts.push_back(int(j) == axis ? g : Mat::identity(F, n[j]));
        out.push_back(VImMorphism(std::move(parts), false));
    };
    for (int axis : axes) {
        const int d = n[axis];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                for (int c = 1; c < q; ++c) {
                    Mat g = Mat::identity(F, d);
                    g.at(i, j) = felem(c);
                    push(int(axis), g);
                }
            }
        if (d > 0)
            for (int u = 2; u < q; ++u) {
                Mat g = Mat::identity(F, d);
                g.at(0, 0) = felem(u);
                push(axis, g);
            }
    }
    return out;
}

inline std::vector<int> all_axes(int m)
{
    std::vector<int> axes(m);
    for (int i = 0; i < m; ++i) axes[i] = i;
    return axes;
}

inline std::vector<VImMorphism> automorphism_generators(int q, const MultiDegree& n)
{
    return automorphism_generators(q, n, all_axes(int(n.size())));
}

/// Closes the span in acc under the degree-n automorphism group of V.
/// Stops as soon as the rank reaches limit (the dimension of an invariant
/// superspace, when one is known).
template <class F>
void close_under_automorphisms(const ModuleEval<F>& V, const MultiDegree& n, Rref<F>& acc,
                               long long limit, const std::vector<int>& axes)
{
    if (acc.rank() >= limit) return;
    const F& f = V.field();
    std::vector<std::vector<int>> perms;
    std::vector<KMat<F>> mats;
    for (const VImMorphism& g : automorphism_generators(V.q(), n, axes)) {
        if (auto pm = V.action_map(g))
            perms.push_back(std::move(*pm));
        else
            mats.push_back(V.action(g));
    }
    std::vector<KVec<F>> work(acc.rows());
    while (!work.empty() && acc.rank() < limit) {
        KVec<F> v = std::move(work.back());
        work.pop_back();
        auto try_insert = [&](KVec<F> w) {
            KVec<F> copy = w;
            if (acc.insert(std::move(w))) work.push_back(std::move(copy));
        };
        for (const auto& pm : perms) {
            KVec<F> w(v.size(), f.zero());
            for (std::size_t k = 0; k < v.size(); ++k) w[pm[k]] = v[k];
            try_insert(std::move(w));
            if (acc.rank() >= limit) return;
        }
        for (const KMat<F>& a : mats) {
            try_insert(kmatvec(f, a, v));
            if (acc.rank() >= limit) return;
        }
    }
}

template <class F>
void close_under_automorphisms(const ModuleEval<F>& V, const MultiDegree& n, Rref<F>& acc,
                               long long limit)
{
    close_under_automorphisms(V, n, acc, limit, all_axes(int(n.size())));
}

/// Span of the images of all morphisms into degree n that are strictly
/// degree-raising on the given axes and identities elsewhere: every such
/// morphism factors as an automorphism after a canonical inclusion, so
/// the span is the automorphism closure of the inclusion images.
template <class F>
Rref<F> lower_span(const ModuleEval<F>& V, const MultiDegree& n, const std::vector<int>& axes)
{
    const F& f = V.field();
    const long long d = V.dim(n);
    Rref<F> acc(f, int(d));
    for (int i : axes) {
        if (n[i] == 0) continue;
        VImMorphism incl = zero_row_inclusion(gf(V.q()), plus_e(n, i, -1), i);
        if (auto pm = V.action_map(incl)) {
            for (int k : *pm) {
                KVec<F> e(d, f.zero());
                e[k] = f.one();
                acc.insert(std::move(e));
            }
        } else {
            KMat<F> a = V.action(incl);
            for (int j = 0; j < a.cols(); ++j) acc.insert(a.col(j));
        }
        if (acc.rank() >= d) return acc;
    }
    close_under_automorphisms(V, n, acc, d, axes);
    return acc;
}

template <class F>
Rref<F> lower_span(const ModuleEval<F>& V, const MultiDegree& n)
{
    return lower_span(V, n, all_axes(int(n.size())));
}

/// Natural shift along one axis.
template <class F>
class ShiftEval : public ModuleEval<F> {
public:
    ShiftEval(EvalPtr<F> parent, int axis)
        : ModuleEval<F>(parent->field()), parent_(std::move(parent)), axis_(axis)
    {
        if (axis_ < 0 || axis_ >= parent_->arity()) throw DomainError("shift axis out of range");
        if (parent_->window() < 1) throw DomainError("window too small to shift");
    }

    int arity() const override { return parent_->arity(); }
    int q() const override { return parent_->q(); }
    int window() const override { return parent_->window() - 1; }

    long long dim(const MultiDegree& n) const override
    {
        this->check_degree(n);
        return parent_->dim(plus_e(n, axis_));
    }
    KMat<F> action(const VImMorphism& f) const override
    {
        return parent_->action(extend_morphism(f, axis_));
    }
    std::optional<std::vector<int>> action_map(const VImMorphism& f) const override
    {
        return parent_->action_map(extend_morphism(f, axis_));
    }

private:
    EvalPtr<F> parent_;
    int axis_;
};

/// Modified shift along one axis: degreewise coinvariants of the shift
/// under the augmentation group U_i(a) of order q^{a_i}, realized as the
/// image of the averaging idempotent pi = |U|^{-1} sum_c (sigma_i(c))_*.
template <class F>
class ModShiftEval : public ModuleEval<F> {
public:
    ModShiftEval(EvalPtr<F> parent, int axis, std::uint64_t aug_cap = (1ull << 20))
        : ModuleEval<F>(parent->field()), parent_(std::move(parent)), axis_(axis),
          aug_cap_(aug_cap)
    {
        if (axis_ < 0 || axis_ >= parent_->arity())
            throw DomainError("modified shift axis out of range");
        if (parent_->window() < 1) throw DomainError("window too small to shift");
    }

    int arity() const override { return parent_->arity(); }
    int q() const override { return parent_->q(); }
    int window() const override { return parent_->window() - 1; }
    const ModuleEval<F>& parent() const { return *parent_; }
    int axis() const { return axis_; }

    struct DegreeData {
        KMat<F> pi;             // averaging idempotent on V_{a+e_i}
        KMat<F> basis;          // independent columns of pi, spanning im pi
        std::vector<int> cols;  // which columns of pi were kept
        std::unique_ptr<SectionSolver<F>> solver;
    };

    const DegreeData& degree_data(const MultiDegree& a) const
    {
        this->check_degree(a);
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        const F& f = this->f_;
        const MultiDegree up = plus_e(a, axis_);
        const int d = int(parent_->dim(up));
        std::uint64_t order = 1;
        for (int i = 0; i < a[axis_]; ++i) {
            order *= std::uint64_t(q());
            if (order > aug_cap_) throw SizeError("augmentation group exceeds cap");
        }
        DegreeData dd{KMat<F>(f, d, d), KMat<F>(), {}, nullptr};
        for (const auto& c : augmentation_vectors(a[axis_], q())) {
            KMat<F> g = parent_->action(augmentation(gf(q()), a, axis_, c));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) dd.pi.at(i, j) = f.add(dd.pi.at(i, j), g.at(i, j));
        }
        typename F::Elem scale = f.inv(f.from_int(long(order)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) dd.pi.at(i, j) = f.mul(scale, dd.pi.at(i, j));
        Rref<F> acc(f, d);
        for (int j = 0; j < d; ++j)
            if (acc.insert(dd.pi.col(j))) dd.cols.push_back(j);
        dd.basis = KMat<F>(f, d, int(dd.cols.size()));
        for (std::size_t k = 0; k < dd.cols.size(); ++k) dd.basis.set_col(int(k), dd.pi.col(dd.cols[k]));
        dd.solver = std::make_unique<SectionSolver<F>>(f, dd.basis);
        return cache_.emplace(a, std::move(dd)).first->second;
    }

    long long dim(const MultiDegree& a) const override
    {
        return (long long)degree_data(a).cols.size();
    }

    /// Coordinates in the image basis of the class of v in V_{a+e_i}.
    KVec<F> project(const MultiDegree& a, const KVec<F>& v) const
    {
        const DegreeData& dd = degree_data(a);
        return dd.solver->solve(kmatvec(this->f_, dd.pi, v));
    }

    /// Representative in V_{a+e_i} of the class with the given coordinates.
    KVec<F> section(const MultiDegree& a, const KVec<F>& x) const
    {
        return kmatvec(this->f_, degree_data(a).basis, x);
    }

    KMat<F> action(const VImMorphism& f) const override
    {
        const MultiDegree src = f.source(), tgt = f.target();
        const DegreeData& ds = degree_data(src);
        KMat<F> up = parent_->action(extend_morphism(f, axis_));
        KMat<F> out(this->f_, int(dim(tgt)), int(ds.cols.size()));
        for (std::size_t k = 0; k < ds.cols.size(); ++k)
            out.set_col(int(k), project(tgt, kmatvec(this->f_, up, ds.basis.col(int(k)))));
        return out;
    }

private:
    EvalPtr<F> parent_;
    int axis_;
    std::uint64_t aug_cap_;
    mutable std::mutex mu_;
    mutable std::map<MultiDegree, DegreeData> cache_;
};

/// K_i V: the degreewise kernel of the canonical inclusion a -> a+e_i.
/// The kernel basis is echelon-structured, so expressing images in it is
/// a coordinate read-off (verified by reconstruction).
template <class F>
class KernelEval : public ModuleEval<F> {
public:
    KernelEval(EvalPtr<F> parent, int axis)
        : ModuleEval<F>(parent->field()), parent_(std::move(parent)), axis_(axis)
    {
        if (axis_ < 0 || axis_ >= parent_->arity()) throw DomainError("kernel axis out of range");
        if (parent_->window() < 1) throw DomainError("window too small for kernel functor");
    }

    int arity() const override { return parent_->arity(); }
    int q() const override { return parent_->q(); }
    int window() const override { return parent_->window() - 1; }

    const KernelBasis<F>& degree_data(const MultiDegree& a) const
    {
        this->check_degree(a);
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        KMat<F> incl = parent_->action(zero_row_inclusion(gf(q()), a, axis_));
        return cache_.emplace(a, kernel_basis(this->f_, incl)).first->second;
    }

    long long dim(const MultiDegree& a) const override
    {
        return (long long)degree_data(a).vectors.size();
    }

    /// Coordinates of a parent vector known to lie in the kernel.
    KVec<F> coords(const MultiDegree& a, const KVec<F>& w) const
    {
        const F& f = this->f_;
        const KernelBasis<F>& kb = degree_data(a);
        KVec<F> x(kb.vectors.size());
        for (std::size_t j = 0; j < kb.vectors.size(); ++j) x[j] = w[kb.free_cols[j]];
        KVec<F> check(w.size(), f.zero());
        for (std::size_t j = 0; j < kb.vectors.size(); ++j)
            for (std::size_t i = 0; i < w.size(); ++i)
                check[i] = f.add(check[i], f.mul(x[j], kb.vectors[j][i]));
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!f.eq(check[i], w[i])) throw DomainError("vector not in kernel");
        return x;
    }

    KMat<F> action(const VImMorphism& f) const override
    {
        const KernelBasis<F>& ks = degree_data(f.source());
        KMat<F> a = parent_->action(f);
        KMat<F> out(this->f_, int(dim(f.target())), int(ks.vectors.size()));
        for (std::size_t k = 0; k < ks.vectors.size(); ++k)
            out.set_col(int(k), coords(f.target(), kmatvec(this->f_, a, ks.vectors[k])));
        return out;
    }

private:
    EvalPtr<F> parent_;
    int axis_;
    mutable std::mutex mu_;
    mutable std::map<MultiDegree, KernelBasis<F>> cache_;
};

/// Quotient of a module by a degreewise subspace produced on demand. The
/// subspace family must be closed under the module's actions; callers
/// guarantee that (images of natural transformations, lower spans).
template <class F>
class SubQuotEval : public ModuleEval<F> {
public:
    using SubspaceFn = std::function<Rref<F>(const ModuleEval<F>&, const MultiDegree&)>;

    SubQuotEval(EvalPtr<F> parent, SubspaceFn sub)
        : ModuleEval<F>(parent->field()), parent_(std::move(parent)), sub_(std::move(sub))
    {
    }

    int arity() const override { return parent_->arity(); }
    int q() const override { return parent_->q(); }
    int window() const override { return parent_->window(); }
    const ModuleEval<F>& parent() const { return *parent_; }

    struct DegreeData {
        Rref<F> span;
        std::vector<int> reps;
    };

    const DegreeData& degree_data(const MultiDegree& n) const
    {
        this->check_degree(n);
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        DegreeData d{sub_(*parent_, n), {}};
        std::vector<char> is_pivot(d.span.dim(), 0);
        for (int p : d.span.pivots()) is_pivot[p] = 1;
        for (int c = 0; c < d.span.dim(); ++c)
            if (!is_pivot[c]) d.reps.push_back(c);
        return cache_.emplace(n, std::move(d)).first->second;
    }

    long long dim(const MultiDegree& n) const override
    {
        return (long long)degree_data(n).reps.size();
    }

    KVec<F> project(const MultiDegree& n, KVec<F> v) const
    {
        const DegreeData& d = degree_data(n);
        d.span.reduce(v);
        KVec<F> out(d.reps.size());
        for (std::size_t k = 0; k < d.reps.size(); ++k) out[k] = v[d.reps[k]];
        return out;
    }

    KVec<F> section(const MultiDegree& n, const KVec<F>& x) const
    {
        const DegreeData& d = degree_data(n);
        KVec<F> v(d.span.dim(), this->f_.zero());
        for (std::size_t k = 0; k < d.reps.size(); ++k) v[d.reps[k]] = x[k];
        return v;
    }

    KMat<F> action(const VImMorphism& f) const override
    {
        const MultiDegree src = f.source(), tgt = f.target();
        const DegreeData& ds = degree_data(src);
        KMat<F> a = parent_->action(f);
        KMat<F> out(this->f_, int(dim(tgt)), int(ds.reps.size()));
        for (std::size_t j = 0; j < ds.reps.size(); ++j) {
            KVec<F> v(std::size_t(a.cols()), this->f_.zero());
            v[ds.reps[j]] = this->f_.one();
            out.set_col(int(j), project(tgt, kmatvec(this->f_, a, v)));
        }
        return out;
    }

private:
    EvalPtr<F> parent_;
    SubspaceFn sub_;
    mutable std::mutex mu_;
    mutable std::map<MultiDegree, DegreeData> cache_;
};

/// Matrix of the unit V_a -> (modified shift V)_a in the image basis.
template <class F>
KMat<F> unit_matrix(const ModShiftEval<F>& sv, const MultiDegree& a)
{
    const F& f = sv.field();
    KMat<F> incl = sv.parent().action(zero_row_inclusion(gf(sv.q()), a, sv.axis()));
    KMat<F> out(f, int(sv.dim(a)), incl.cols());
    for (int j = 0; j < incl.cols(); ++j) out.set_col(j, sv.project(a, incl.col(j)));
    return out;
}

/// D_i V: the cokernel of the unit into the modified shift.
template <class F>
std::shared_ptr<SubQuotEval<F>> make_d(std::shared_ptr<const ModShiftEval<F>> sv)
{
    auto sub = [sv](const ModuleEval<F>&, const MultiDegree& a) {
        const F& f = sv->field();
        KMat<F> e = unit_matrix(*sv, a);
        Rref<F> span(f, e.rows());
        for (int j = 0; j < e.cols(); ++j) span.insert(e.col(j));
        return span;
    };
    return std::make_shared<SubQuotEval<F>>(sv, sub);
}

/// H0 as a module: quotient by the span of everything from lower degrees.
template <class F>
std::shared_ptr<SubQuotEval<F>> make_h0(EvalPtr<F> parent)
{
    auto sub = [](const ModuleEval<F>& v, const MultiDegree& n) { return lower_span(v, n); };
    return std::make_shared<SubQuotEval<F>>(std::move(parent), sub);
}

/// H0 along a subset of axes only (axis 0 gives the horizontal H0 of
/// arity >= 2 modules, the remaining axes the vertical one).
template <class F>
std::shared_ptr<SubQuotEval<F>> make_h0_axes(EvalPtr<F> parent, std::vector<int> axes)
{
    auto sub = [axes](const ModuleEval<F>& v, const MultiDegree& n) {
        return lower_span(v, n, axes);
    };
    return std::make_shared<SubQuotEval<F>>(std::move(parent), sub);
}

struct FourTermDims {
    long long k, v, s, d;  // K_i V, V, modified shift, D_i V at one degree
    long long rank_unit;   // rank of the unit V_a -> (modified shift V)_a
};

/// Degreewise dimensions entering the identity
/// dim K - dim V + dim (modified shift) - dim D = 0.
template <class F>
FourTermDims four_term_dims(EvalPtr<F> parent, int axis, const MultiDegree& a)
{
    auto sv = std::make_shared<ModShiftEval<F>>(parent, axis);
    KernelEval<F> kv(parent, axis);
    KMat<F> e = unit_matrix(*sv, a);
    long long s = sv->dim(a);
    long long ru = rank_of(parent->field(), e);
    return {kv.dim(a), parent->dim(a), s, s - ru, ru};
}

// --- class decomposition of the shift of a free module (single axis) --------

/// Classifies hom(n, a+1) by the first-row split: v-type elements have an
/// injective lower block and are keyed by the first row; w-type elements
/// have a one-dimensional lower-block kernel and are keyed by (normalized
/// kernel generator, first row). Also counts the reduced forms.
struct ShiftFreeSplit {
    std::uint64_t total = 0, v_type = 0, w_type = 0;
    std::map<std::vector<felem>, std::uint64_t> v_classes;
    std::map<std::pair<std::vector<felem>, std::vector<felem>>, std::uint64_t> w_classes;
    std::uint64_t reduced_count = 0, reduced_beta0 = 0;
};

inline ShiftFreeSplit split_shift_free(int n, int a, int q, std::uint64_t cap = (1ull << 26))
{
    const Gf& F = gf(q);
    ShiftFreeSplit out;
    for (const Mat& f : enumerate_injective(n, a + 1, q, cap)) {
        ++out.total;
        FirstRowSplit s = split_first_row(f);
        RankProfile rp = rank_profile(s.gamma);
        if (rp.rank == n) {
            ++out.v_type;
            ++out.v_classes[s.beta];
        } else {
            ++out.w_type;
            if (rp.kernel.size() != 1) throw DomainError("unexpected kernel dimension");
            std::vector<felem> k = rp.kernel[0];
            felem lead = 0;
            for (felem x : k)
                if (x) {
                    lead = x;
                    break;
                }
            felem inv = F.inv(lead);
            for (felem& x : k) x = F.mul(inv, x);
            ++out.w_classes[{k, s.beta}];
        }
        ReducedForm rf = reduce_morphism(f);
        if (rf.fbar == f) {
            ++out.reduced_count;
            bool beta0 = true;
            for (felem x : s.beta)
                if (x) beta0 = false;
            if (beta0) ++out.reduced_beta0;
        }
    }
    return out;
}

}  // namespace vimod
