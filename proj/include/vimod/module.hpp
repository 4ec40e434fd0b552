#pragma once

// Graded module evaluations. A module is represented functionally: an
// object answering dim(n) and action(f) for multidegrees inside the
// truncation window. Concrete evaluations:
//
//  * FreeEval     - free module on a list of generator degrees; the basis
//                   in degree n is the disjoint union of hom sets in the
//                   canonical enumeration order, so every action is a
//                   basis permutation-with-injection (action_map).
//  * QuotientEval - quotient of a free module by the span of a finite
//                   relation set, computed degree by degree in one shot.
//  * RestrictEval - fix one axis of a higher-arity module at a constant
//                   degree, yielding a module of arity m-1.
//
// Presentations (free cover + relations) round-trip through JSON with a
// deterministic byte layout.

#include "vimod/category.hpp"
#include "vimod/context.hpp"
#include "vimod/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace vimod {

/// Generator degrees of a free module; order is part of the data (it
/// fixes the basis layout).
struct FreeSpec {
    std::vector<MultiDegree> gens;
    int m = 0;  // fallback arity for the zero module (no generators)

    int arity() const { return gens.empty() ? m : int(gens[0].size()); }
};

template <class F>
class ModuleEval {
public:
    explicit ModuleEval(const F& f) : f_(f) {}
    virtual ~ModuleEval() = default;

    const F& field() const { return f_; }
    virtual int arity() const = 0;
    virtual int q() const = 0;
    /// Largest total degree this evaluation answers for.
    virtual int window() const = 0;

    virtual long long dim(const MultiDegree& n) const = 0;
    /// Matrix of the induced map dim(target) x dim(source).
    virtual KMat<F> action(const VImMorphism& f) const = 0;
    /// Fast path when the action permutes/injects basis elements: entry k
    /// is the target index of source basis element k.
    virtual std::optional<std::vector<int>> action_map(const VImMorphism&) const
    {
        return std::nullopt;
    }

protected:
    void check_degree(const MultiDegree& n) const
    {
        if (int(n.size()) != arity()) throw DomainError("degree arity mismatch");
        for (int v : n)
            if (v < 0) throw DomainError("negative degree");
        if (total(n) > window()) throw DomainError("degree outside truncation window");
    }

    F f_;
};

template <class F>
using EvalPtr = std::shared_ptr<const ModuleEval<F>>;

template <class F>
class FreeEval : public ModuleEval<F> {
public:
    struct DegreeBasis {
        std::vector<std::pair<int, VImMorphism>> elems;  // (generator, hom element)
        std::vector<int> gen_offset;                     // first index per generator
        std::vector<std::unordered_map<VImMorphism, int, VImMorphismHash>> index;
    };

    FreeEval(const F& f, int q, int window, FreeSpec spec,
             std::uint64_t hom_cap = (1ull << 26))
        : ModuleEval<F>(f), q_(q), window_(window), spec_(std::move(spec)), hom_cap_(hom_cap)
    {
        for (const MultiDegree& g : spec_.gens)
            if (int(g.size()) != spec_.arity()) throw DomainError("generator arity mismatch");
    }

    int arity() const override { return spec_.arity(); }
    int q() const override { return q_; }
    int window() const override { return window_; }
    const FreeSpec& spec() const { return spec_; }

    long long dim(const MultiDegree& n) const override
    {
        this->check_degree(n);
        long long d = 0;
        for (const MultiDegree& g : spec_.gens)
            if (leq(g, n)) d += (long long)hom_count(g, n, q_);
        return d;
    }

    const DegreeBasis& basis(const MultiDegree& n) const
    {
        this->check_degree(n);
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        DegreeBasis b;
        b.index.resize(spec_.gens.size());
        for (std::size_t j = 0; j < spec_.gens.size(); ++j) {
            b.gen_offset.push_back(int(b.elems.size()));
            for (VImMorphism& h : enumerate_hom(spec_.gens[j], n, q_, hom_cap_)) {
                b.index[j].emplace(h, int(b.elems.size()));
                b.elems.emplace_back(int(j), std::move(h));
            }
        }
        return cache_.emplace(n, std::move(b)).first->second;
    }

    int index_of(const MultiDegree& n, int gen, const VImMorphism& h) const
    {
        const DegreeBasis& b = basis(n);
        auto it = b.index[gen].find(h);
        if (it == b.index[gen].end()) throw DomainError("basis element not found");
        return it->second;
    }

    /// Basis indices in degree n whose generator has degree exactly n
    /// (the part not hit by maps from strictly lower degrees).
    std::vector<int> top_coords(const MultiDegree& n) const
    {
        const DegreeBasis& b = basis(n);
        std::vector<int> out;
        for (std::size_t k = 0; k < b.elems.size(); ++k)
            if (spec_.gens[b.elems[k].first] == n) out.push_back(int(k));
        return out;
    }

    std::optional<std::vector<int>> action_map(const VImMorphism& f) const override
    {
        const MultiDegree src = f.source(), tgt = f.target();
        const DegreeBasis& bs = basis(src);
        const DegreeBasis& bt = basis(tgt);
        std::vector<int> map(bs.elems.size());
        for (std::size_t k = 0; k < bs.elems.size(); ++k) {
            const auto& [j, h] = bs.elems[k];
            auto it = bt.index[j].find(compose(f, h));
            if (it == bt.index[j].end()) throw DomainError("composite missing from basis");
            map[k] = it->second;
        }
        return map;
    }

    KMat<F> action(const VImMorphism& f) const override
    {
        std::vector<int> map = *action_map(f);
        KMat<F> a(this->f_, dim(f.target()), int(map.size()));
        for (std::size_t k = 0; k < map.size(); ++k) a.at(map[k], int(k)) = this->f_.one();
        return a;
    }

private:
    int q_, window_;
    FreeSpec spec_;
    std::uint64_t hom_cap_;
    mutable std::mutex mu_;
    mutable std::map<MultiDegree, DegreeBasis> cache_;
};

/// One term of a relation: scalar * (morphism applied to a generator).
template <class F>
struct Term {
    int gen = 0;
    VImMorphism f;  // gens[gen] -> relation degree
    typename F::Elem scalar;
};

template <class F>
struct Relation {
    MultiDegree degree;
    std::vector<Term<F>> terms;
};

template <class F>
struct Presentation {
    Context ctx;
    FreeSpec free;
    std::vector<Relation<F>> relations;
};

/// Quotient of a free module by the subfunctor generated by a finite
/// relation set. Because every morphism a -> n factors as an isomorphism
/// after a standard inclusion, the degree-n slice of that subfunctor is
/// spanned in one pass by h_*(r) over all h in hom(deg r, n).
template <class F>
class QuotientEval : public ModuleEval<F> {
public:
    struct DegreeData {
        Rref<F> span;
        std::vector<int> reps;  // free-basis coordinates representing V_n (non-pivots)
    };

    QuotientEval(const F& f, std::shared_ptr<const FreeEval<F>> cover,
                 std::vector<Relation<F>> relations)
        : ModuleEval<F>(f), cover_(std::move(cover)), relations_(std::move(relations))
    {
        for (const Relation<F>& r : relations_)
            for (const Term<F>& t : r.terms) {
                if (t.gen < 0 || t.gen >= int(cover_->spec().gens.size()))
                    throw DomainError("relation term: generator index out of range");
                if (t.f.source() != cover_->spec().gens[t.gen] || t.f.target() != r.degree)
                    throw DomainError("relation term: morphism degrees mismatch");
            }
    }

    int arity() const override { return cover_->arity(); }
    int q() const override { return cover_->q(); }
    int window() const override { return cover_->window(); }
    const FreeEval<F>& cover() const { return *cover_; }
    const std::vector<Relation<F>>& relations() const { return relations_; }

    /// Image of a relation under h, as a vector in the cover's degree-n basis.
    KVec<F> relation_vector(const Relation<F>& r, const VImMorphism& h) const
    {
        const MultiDegree n = h.target();
        KVec<F> v(cover_->dim(n), this->f_.zero());
        for (const Term<F>& t : r.terms) {
            int idx = cover_->index_of(n, t.gen, compose(h, t.f));
            v[idx] = this->f_.add(v[idx], t.scalar);
        }
        return v;
    }

    const DegreeData& degree_data(const MultiDegree& n) const
    {
        this->check_degree(n);
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        DegreeData d{Rref<F>(this->f_, int(cover_->dim(n))), {}};
        for (const Relation<F>& r : relations_) {
            if (!leq(r.degree, n)) continue;
            for (const VImMorphism& h : enumerate_hom(r.degree, n, q()))
                d.span.insert(relation_vector(r, h));
        }
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

    /// Class of a cover vector in the representative coordinates.
    KVec<F> project(const MultiDegree& n, KVec<F> v) const
    {
        const DegreeData& d = degree_data(n);
        d.span.reduce(v);
        KVec<F> out(d.reps.size());
        for (std::size_t k = 0; k < d.reps.size(); ++k) out[k] = v[d.reps[k]];
        return out;
    }

    /// Cover vector representing the class with the given coordinates.
    KVec<F> section(const MultiDegree& n, const KVec<F>& x) const
    {
        const DegreeData& d = degree_data(n);
        KVec<F> v(d.span.dim(), this->f_.zero());
        for (std::size_t k = 0; k < d.reps.size(); ++k) v[d.reps[k]] = x[k];
        return v;
    }

    KMat<F> action(const VImMorphism& f) const override
    {
        const F& k = this->f_;
        const MultiDegree src = f.source(), tgt = f.target();
        const DegreeData& ds = degree_data(src);
        const DegreeData& dt = degree_data(tgt);
        std::vector<int> map = *cover_->action_map(f);
        KMat<F> a(k, int(dt.reps.size()), int(ds.reps.size()));
        std::vector<int> rep_pos(dt.span.dim(), -1);
        for (std::size_t r = 0; r < dt.reps.size(); ++r) rep_pos[dt.reps[r]] = int(r);
        for (std::size_t j = 0; j < ds.reps.size(); ++j) {
            int idx = map[ds.reps[j]];
            int row = dt.span.row_of_pivot(idx);
            if (rep_pos[idx] >= 0) {
                a.at(rep_pos[idx], int(j)) = k.one();
            } else {
                // class of a pivot coordinate: minus the tail of its rref row
                const KVec<F>& rrow = dt.span.rows()[row];
                for (std::size_t r = 0; r < dt.reps.size(); ++r)
                    if (!k.is_zero(rrow[dt.reps[r]]))
                        a.at(int(r), int(j)) = k.neg(rrow[dt.reps[r]]);
            }
        }
        return a;
    }

private:
    std::shared_ptr<const FreeEval<F>> cover_;
    std::vector<Relation<F>> relations_;
    mutable std::mutex mu_;
    mutable std::map<MultiDegree, DegreeData> cache_;
};

/// Fix axis `axis` of a parent module at degree `value`; the result has
/// arity m-1 over the remaining axes.
template <class F>
class RestrictEval : public ModuleEval<F> {
public:
    RestrictEval(EvalPtr<F> parent, int axis, int value)
        : ModuleEval<F>(parent->field()), parent_(std::move(parent)), axis_(axis), value_(value)
    {
        if (parent_->arity() < 2) throw DomainError("restriction needs arity >= 2");
        if (axis_ < 0 || axis_ >= parent_->arity()) throw DomainError("restriction axis");
        if (value_ < 0 || value_ > parent_->window()) throw DomainError("restriction value");
    }

    int arity() const override { return parent_->arity() - 1; }
    int q() const override { return parent_->q(); }
    int window() const override { return parent_->window() - value_; }

    MultiDegree embed(const MultiDegree& n) const
    {
        MultiDegree full(n);
        full.insert(full.begin() + axis_, value_);
        return full;
    }

    VImMorphism embed(const VImMorphism& f) const
    {
        std::vector<Mat> parts = f.parts();
        parts.insert(parts.begin() + axis_, Mat::identity(gf(q()), value_));
        return VImMorphism(std::move(parts), false);
    }

    long long dim(const MultiDegree& n) const override
    {
        this->check_degree(n);
        return parent_->dim(embed(n));
    }
    KMat<F> action(const VImMorphism& f) const override { return parent_->action(embed(f)); }
    std::optional<std::vector<int>> action_map(const VImMorphism& f) const override
    {
        return parent_->action_map(embed(f));
    }

private:
    EvalPtr<F> parent_;
    int axis_, value_;
};

// --- presentation serialization ---------------------------------------------

template <class F>
nlohmann::json presentation_to_json(const Presentation<F>& p, const F& f)
{
    nlohmann::json j;
    j["q"] = p.ctx.q;
    j["m"] = p.ctx.m;
    j["coeff"] = coeff_to_json(p.ctx.coeff);
    j["window"] = p.ctx.window;
    j["generators"] = p.free.gens;
    nlohmann::json rels = nlohmann::json::array();
    for (const Relation<F>& r : p.relations) {
        nlohmann::json jr;
        jr["degree"] = r.degree;
        nlohmann::json terms = nlohmann::json::array();
        for (const Term<F>& t : r.terms) {
            nlohmann::json jt;
            jt["gen"] = t.gen;
            nlohmann::json parts = nlohmann::json::array();
            for (const Mat& m : t.f.parts()) parts.push_back(mat_to_json(m));
            jt["morphism"] = std::move(parts);
            jt["scalar"] = f.str(t.scalar);
            terms.push_back(std::move(jt));
        }
        jr["terms"] = std::move(terms);
        rels.push_back(std::move(jr));
    }
    j["relations"] = std::move(rels);
    return j;
}

inline Context context_from_json(const nlohmann::json& j)
{
    Context ctx;
    ctx.q = j.at("q").get<int>();
    ctx.m = j.at("m").get<int>();
    ctx.coeff = coeff_from_json(j.at("coeff"));
    ctx.window = j.at("window").get<int>();
    ctx.validate();
    return ctx;
}

template <class F>
Presentation<F> presentation_from_json(const nlohmann::json& j, const F& f)
{
    Presentation<F> p;
    p.ctx = context_from_json(j);
    const Gf& gfq = gf(p.ctx.q);
    for (const auto& g : j.at("generators")) {
        MultiDegree d = g.get<MultiDegree>();
        if (int(d.size()) != p.ctx.m) throw DomainError("generator arity mismatch");
        for (int v : d)
            if (v < 0 || v > p.ctx.window) throw DomainError("generator degree out of window");
        p.free.gens.push_back(std::move(d));
    }
    int rel_index = 0;
    for (const auto& jr : j.at("relations")) {
        try {
            Relation<F> r;
            r.degree = jr.at("degree").get<MultiDegree>();
            if (int(r.degree.size()) != p.ctx.m) throw DomainError("relation arity mismatch");
            if (total(r.degree) > p.ctx.window)
                throw DomainError("relation degree out of window");
            for (const auto& jt : jr.at("terms")) {
                Term<F> t;
                t.gen = jt.at("gen").get<int>();
                if (t.gen < 0 || t.gen >= int(p.free.gens.size()))
                    throw DomainError("generator index out of range");
                const MultiDegree& src = p.free.gens[t.gen];
                std::vector<Mat> parts;
                const auto& jm = jt.at("morphism");
                if (!jm.is_array() || int(jm.size()) != p.ctx.m)
                    throw DomainError("expected one matrix per axis");
                for (int i = 0; i < p.ctx.m; ++i)
                    parts.push_back(mat_from_json(jm.at(i), gfq, r.degree[i], src[i]));
                t.f = VImMorphism(std::move(parts));  // checks injectivity
                t.scalar = f.parse(jt.at("scalar").get<std::string>());
                r.terms.push_back(std::move(t));
            }
            p.relations.push_back(std::move(r));
        } catch (const DomainError& e) {
            throw DomainError("relation " + std::to_string(rel_index) + ": " + e.what());
        }
        ++rel_index;
    }
    return p;
}

template <class F>
std::shared_ptr<const FreeEval<F>> make_cover(const F& f, const Presentation<F>& p)
{
    return std::make_shared<FreeEval<F>>(f, p.ctx.q, p.ctx.window, p.free, p.ctx.hom_cap);
}

template <class F>
std::shared_ptr<const QuotientEval<F>> make_quotient(const F& f, const Presentation<F>& p)
{
    return std::make_shared<QuotientEval<F>>(f, make_cover(f, p), p.relations);
}

}  // namespace vimod
