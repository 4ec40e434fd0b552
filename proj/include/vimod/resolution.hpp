#pragma once

// Homology invariants t_0, t_1, t_2 and regularity inside a truncation
// window.
//
// H_0 in degree n is the cokernel of everything arriving from lower
// degrees. Higher invariants come from dimension shifting along free
// covers: for any surjection P -> V with kernel Z, H_{i+1}(V) = H_i(Z)
// for i >= 1 and H_1(V) = ker(H_0(Z) -> H_0(P)). No minimality is
// needed, so a presentation can be resolved directly: the first syzygy
// of P_0/R is R itself, and the second is the kernel of the free cover
// of R by a free module on the relations.
//
// Inside a free ambient module all the ingredients are coordinate
// computations: the lower span of the ambient is the span of basis
// elements whose generator degree differs from n, and the lower span of
// a subfunctor is the automorphism closure of its images under the
// canonical inclusions.

#include "vimod/functors.hpp"

#include <algorithm>
#include <set>

namespace vimod {

/// All multidegrees of the given arity with total at most `window`,
/// ascending by (total, lex).
inline std::vector<MultiDegree> window_degrees(int m, int window)
{
    std::vector<MultiDegree> out;
    MultiDegree cur(m, 0);
    std::function<void(int, int)> rec = [&](int axis, int left) {
        if (axis == m - 1) {
            cur[axis] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[axis] = v;
            rec(axis + 1, left - v);
        }
    };
    for (int t = 0; t <= window; ++t) rec(0, t);
    return out;
}

struct InvariantReport {
    std::map<int, int> t;  // i -> t_i (max total degree with H_i != 0, -1 if none)
    int degree = -1;       // max total degree with V != 0 inside the window
    int reg = -1;          // max over i of t_i - i
    int window = 0;
    bool truncated = false;  // the module is still nonzero at the window boundary
};

inline nlohmann::json report_to_json(const InvariantReport& r)
{
    nlohmann::json j;
    nlohmann::json t;
    for (const auto& [i, v] : r.t) t[std::to_string(i)] = v;
    j["t"] = std::move(t);
    j["degree"] = r.degree;
    j["reg"] = r.reg;
    j["window"] = r.window;
    j["truncated"] = r.truncated;
    return j;
}

template <class F>
struct ResolutionDetail {
    std::map<MultiDegree, long long> dims, h0, h1, h2;
    InvariantReport report;
};

namespace detail {

/// Lower span of a subfunctor of a free module at degree n: the
/// automorphism closure of the images of its lower slices under the
/// canonical inclusions. `sub` returns spanning vectors of the slice.
template <class F>
Rref<F> lower_span_in_free(const FreeEval<F>& P, const MultiDegree& n,
                           const std::function<std::vector<KVec<F>>(const MultiDegree&)>& sub,
                           long long limit)
{
    const F& f = P.field();
    Rref<F> acc(f, int(P.dim(n)));
    for (int i = 0; i < int(n.size()); ++i) {
        if (acc.rank() >= limit) break;
        if (n[i] == 0) continue;
        MultiDegree lo = plus_e(n, i, -1);
        std::vector<int> pm = *P.action_map(zero_row_inclusion(gf(P.q()), lo, i));
        for (const KVec<F>& v : sub(lo)) {
            KVec<F> w(std::size_t(acc.dim()), f.zero());
            for (std::size_t k = 0; k < v.size(); ++k) w[pm[k]] = v[k];
            acc.insert(std::move(w));
        }
    }
    close_under_automorphisms(P, n, acc, limit);
    return acc;
}

/// dim of ker(H0(Z) -> H0(P)) in degree n, for a subfunctor Z of the
/// free module P with slice basis `zn` at n and `sub` below n. Equals
/// dim(Z_n meet lower-span(P)_n) - dim lower-span(Z)_n. The vectors in
/// `zn` must be linearly independent (Rref rows or an echelon kernel
/// basis); only their projection to the top coordinates is eliminated.
template <class F>
long long syzygy_h_dim(const FreeEval<F>& P, const MultiDegree& n,
                       const std::vector<KVec<F>>& zn,
                       const std::function<std::vector<KVec<F>>(const MultiDegree&)>& sub)
{
    if (zn.empty()) return 0;
    const F& f = P.field();
    std::vector<int> top = P.top_coords(n);
    long long r_top = 0;
    if (!top.empty()) {
        Rref<F> tspan(f, int(top.size()));
        for (const KVec<F>& v : zn) {
            KVec<F> w(top.size());
            for (std::size_t k = 0; k < top.size(); ++k) w[k] = v[top[k]];
            tspan.insert(std::move(w));
        }
        r_top = tspan.rank();
    }
    long long meet = (long long)zn.size() - r_top;
    if (meet == 0) return 0;
    Rref<F> lz = lower_span_in_free(P, n, sub, meet);
    return meet - lz.rank();
}

inline void finish_report(InvariantReport& r)
{
    r.reg = std::numeric_limits<int>::min();
    for (const auto& [i, ti] : r.t) r.reg = std::max(r.reg, ti - i);
    if (r.t.empty()) r.reg = -1;
}

template <class F>
int t_of(const std::map<MultiDegree, long long>& h)
{
    int t = -1;
    for (const auto& [n, d] : h)
        if (d > 0) t = std::max(t, total(n));
    return t;
}

}  // namespace detail

/// Invariants of a presented module, through H_2. The relation span is
/// the first syzygy; its H_0 can be nonzero only in the exact relation
/// degrees, since everything else factors through lower degrees.
template <class F>
ResolutionDetail<F> resolve_presented(const F& f, const Presentation<F>& p, int imax = 2,
                                      long long width_cap = 3000)
{
    if (imax < 0 || imax > 2) throw DomainError("imax must be in [0,2]");
    auto Q = make_quotient(f, p);
    const FreeEval<F>& P0 = Q->cover();
    const int w = p.ctx.window;
    ResolutionDetail<F> out;
    out.report.window = w;

    std::vector<MultiDegree> degs = window_degrees(p.ctx.m, w);
    for (const MultiDegree& n : degs) {
        long long d = Q->dim(n);
        out.dims[n] = d;
        if (d > 0) {
            out.report.degree = std::max(out.report.degree, total(n));
            if (total(n) == w) out.report.truncated = true;
        }
        std::vector<int> top = P0.top_coords(n);
        out.h0[n] = (long long)top.size() - Q->degree_data(n).span.rank_restricted(top);
    }
    out.report.t[0] = detail::t_of<F>(out.h0);

    auto r_rows = [&](const MultiDegree& lo) { return Q->degree_data(lo).span.rows(); };

    if (imax >= 1) {
        std::set<MultiDegree> rel_degs;
        for (const Relation<F>& r : p.relations)
            if (total(r.degree) <= w) rel_degs.insert(r.degree);
        for (const MultiDegree& n : degs) out.h1[n] = 0;
        for (const MultiDegree& n : rel_degs)
            out.h1[n] = detail::syzygy_h_dim(P0, n, r_rows(n), r_rows);
        out.report.t[1] = detail::t_of<F>(out.h1);
    }

    if (imax >= 2) {
        FreeSpec s1;
        s1.m = p.ctx.m;
        for (const Relation<F>& r : p.relations) s1.gens.push_back(r.degree);
        FreeEval<F> P1(f, p.ctx.q, w, s1, p.ctx.hom_cap);
        std::map<MultiDegree, std::vector<KVec<F>>> z2;
        auto z2_at = [&](const MultiDegree& lo) {
            auto it = z2.find(lo);
            return it == z2.end() ? std::vector<KVec<F>>() : it->second;
        };
        for (const MultiDegree& n : degs) {
            long long d1cols = P1.dim(n);
            out.h2[n] = 0;
            if (d1cols == 0) continue;
            if (d1cols > width_cap) {
                // ambient too wide for exact elimination; report the degree
                // as unobserved rather than guessed
                out.h2.erase(n);
                out.report.truncated = true;
                continue;
            }
            const auto& basis = P1.basis(n);
            KMat<F> d1(f, int(P0.dim(n)), int(d1cols));
            for (std::size_t k = 0; k < basis.elems.size(); ++k) {
                const auto& [rel, h] = basis.elems[k];
                d1.set_col(int(k), Q->relation_vector(p.relations[rel], h));
            }
            KernelBasis<F> kb = kernel_basis(f, d1);
            if (!kb.vectors.empty())
                out.h2[n] = detail::syzygy_h_dim(P1, n, kb.vectors, z2_at);
            z2.emplace(n, std::move(kb.vectors));
        }
        out.report.t[2] = detail::t_of<F>(out.h2);
    }

    detail::finish_report(out.report);
    return out;
}

/// Invariants of an arbitrary evaluation (shifted modules, kernels,
/// cokernels, restrictions). Generators and syzygy generators are found
/// degree by degree: extend the span generated so far, then add a
/// complement vector whenever the slice is not yet covered.
template <class F>
ResolutionDetail<F> resolve_eval(const ModuleEval<F>& V, int imax = 2,
                                 long long width_cap = 3000)
{
    if (imax < 0 || imax > 2) throw DomainError("imax must be in [0,2]");
    const F& f = V.field();
    const int w = V.window(), m = V.arity();
    const Gf& gfq = gf(V.q());
    ResolutionDetail<F> out;
    out.report.window = w;

    std::vector<MultiDegree> degs = window_degrees(m, w);

    // generators of V and the span they generate, degree by degree
    FreeSpec s0;
    s0.m = m;
    std::vector<KVec<F>> gvecs0;  // aligned with s0.gens
    std::map<MultiDegree, Rref<F>> gen_span;
    for (const MultiDegree& n : degs) {
        long long d = V.dim(n);
        out.dims[n] = d;
        if (d > 0) {
            out.report.degree = std::max(out.report.degree, total(n));
            if (total(n) == w) out.report.truncated = true;
        }
        Rref<F> acc(f, int(d));
        for (int i = 0; i < m; ++i) {
            if (n[i] == 0) continue;
            KMat<F> a = V.action(zero_row_inclusion(gfq, plus_e(n, i, -1), i));
            const Rref<F>& lo = gen_span.at(plus_e(n, i, -1));
            for (const KVec<F>& v : lo.rows()) acc.insert(kmatvec(f, a, v));
        }
        close_under_automorphisms(V, n, acc, d);
        out.h0[n] = d - acc.rank();
        for (int k = 0; k < d; ++k) {
            KVec<F> e(std::size_t(d), f.zero());
            e[k] = f.one();
            if (acc.contains(e)) continue;
            s0.gens.push_back(n);
            gvecs0.push_back(e);
            acc.insert(std::move(e));
            close_under_automorphisms(V, n, acc, d);
        }
        gen_span.emplace(n, std::move(acc));
    }
    out.report.t[0] = detail::t_of<F>(out.h0);

    std::map<MultiDegree, std::vector<KVec<F>>> z1;
    if (imax >= 1) {
        FreeEval<F> P0(f, V.q(), w, s0);
        auto z1_at = [&](const MultiDegree& lo) {
            auto it = z1.find(lo);
            return it == z1.end() ? std::vector<KVec<F>>() : it->second;
        };
        for (const MultiDegree& n : degs) {
            out.h1[n] = 0;
            long long dp = P0.dim(n);
            if (dp == 0) {
                z1.emplace(n, std::vector<KVec<F>>());
                continue;
            }
            if (dp > width_cap) {
                out.h1.erase(n);
                out.report.truncated = true;
                z1.emplace(n, std::vector<KVec<F>>());
                continue;
            }
            // d0: free cover -> V, generator (j, h) |-> h_*(gen_j)
            const auto& basis = P0.basis(n);
            KMat<F> d0(f, int(V.dim(n)), int(dp));
            std::unordered_map<VImMorphism, KMat<F>, VImMorphismHash> act_cache;
            for (std::size_t k = 0; k < basis.elems.size(); ++k) {
                const auto& [j, h] = basis.elems[k];
                auto it = act_cache.find(h);
                if (it == act_cache.end()) it = act_cache.emplace(h, V.action(h)).first;
                d0.set_col(int(k), kmatvec(f, it->second, gvecs0[j]));
            }
            KernelBasis<F> kb = kernel_basis(f, d0);
            if (!kb.vectors.empty())
                out.h1[n] = detail::syzygy_h_dim(P0, n, kb.vectors, z1_at);
            z1.emplace(n, std::move(kb.vectors));
        }
        out.report.t[1] = detail::t_of<F>(out.h1);
    }

    if (imax >= 2) {
        FreeEval<F> P0(f, V.q(), w, s0);
        // generators of the first syzygy inside the free cover
        FreeSpec s1;
        s1.m = m;
        std::vector<KVec<F>> gvecs1;  // aligned with s1.gens
        std::map<MultiDegree, Rref<F>> s1_span;
        for (const MultiDegree& n : degs) {
            long long dp = P0.dim(n);
            if (dp > width_cap) {
                s1_span.emplace(n, Rref<F>(f, int(dp)));
                continue;
            }
            Rref<F> acc(f, int(dp));
            for (int i = 0; i < m; ++i) {
                if (n[i] == 0) continue;
                MultiDegree lo = plus_e(n, i, -1);
                std::vector<int> pm = *P0.action_map(zero_row_inclusion(gfq, lo, i));
                for (const KVec<F>& v : s1_span.at(lo).rows()) {
                    KVec<F> w2(std::size_t(dp), f.zero());
                    for (std::size_t k = 0; k < v.size(); ++k) w2[pm[k]] = v[k];
                    acc.insert(std::move(w2));
                }
            }
            const std::vector<KVec<F>>& zn = z1.at(n);
            close_under_automorphisms(P0, n, acc, (long long)zn.size());
            for (const KVec<F>& z : zn) {
                if (acc.contains(z)) continue;
                s1.gens.push_back(n);
                gvecs1.push_back(z);
                acc.insert(z);
                close_under_automorphisms(P0, n, acc, (long long)zn.size());
            }
            s1_span.emplace(n, std::move(acc));
        }
        FreeEval<F> P1(f, V.q(), w, s1);
        std::map<MultiDegree, std::vector<KVec<F>>> z2;
        auto z2_at = [&](const MultiDegree& lo) {
            auto it = z2.find(lo);
            return it == z2.end() ? std::vector<KVec<F>>() : it->second;
        };
        for (const MultiDegree& n : degs) {
            out.h2[n] = 0;
            long long dp = P1.dim(n);
            if (dp == 0) {
                z2.emplace(n, std::vector<KVec<F>>());
                continue;
            }
            if (dp > width_cap || P0.dim(n) > width_cap) {
                out.h2.erase(n);
                out.report.truncated = true;
                z2.emplace(n, std::vector<KVec<F>>());
                continue;
            }
            const auto& basis = P1.basis(n);
            KMat<F> d1(f, int(P0.dim(n)), int(dp));
            for (std::size_t k = 0; k < basis.elems.size(); ++k) {
                const auto& [j, h] = basis.elems[k];
                std::vector<int> pm = *P0.action_map(h);
                const KVec<F>& z = gvecs1[j];
                KVec<F> col(std::size_t(P0.dim(n)), f.zero());
                for (std::size_t t = 0; t < z.size(); ++t)
                    if (!f.is_zero(z[t])) col[pm[t]] = f.add(col[pm[t]], z[t]);
                d1.set_col(int(k), std::move(col));
            }
            KernelBasis<F> kb = kernel_basis(f, d1);
            if (!kb.vectors.empty())
                out.h2[n] = detail::syzygy_h_dim(P1, n, kb.vectors, z2_at);
            z2.emplace(n, std::move(kb.vectors));
        }
        out.report.t[2] = detail::t_of<F>(out.h2);
    }

    detail::finish_report(out.report);
    return out;
}

}  // namespace vimod
