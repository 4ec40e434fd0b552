#include "vimod/functors.hpp"

#include "catch2/catch_amalgamated.hpp"

using namespace vimod;

namespace {

long long qpow(int q, int e)
{
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= q;
    return v;
}

}  // namespace

TEST_CASE("shift of a free module splits in dimension")
{
    RationalField k;
    for (int q : {2, 3})
        for (int n = 0; n <= 2; ++n) {
            auto M = std::make_shared<FreeEval<RationalField>>(k, q, 5,
                                                               FreeSpec{{MultiDegree{n}}});
            ShiftEval<RationalField> S(M, 0);
            for (int a = 0; a <= 4; ++a) {
                long long expect =
                    qpow(q, n) * (long long)injective_count(n, a, q)
                    + (n > 0 ? (qpow(q, n) - 1) * qpow(q, n - 1)
                                   * (long long)injective_count(n - 1, a, q)
                             : 0);
                REQUIRE(S.dim({a}) == expect);
            }
        }
}

TEST_CASE("shift is functorial")
{
    RationalField k;
    int q = 2;
    auto M = std::make_shared<FreeEval<RationalField>>(k, q, 4, FreeSpec{{MultiDegree{1}}});
    ShiftEval<RationalField> S(M, 0);
    for (const VImMorphism& f : enumerate_hom({0}, {1}, q))
        for (const VImMorphism& g : enumerate_hom({1}, {2}, q))
            REQUIRE(S.action(compose(g, f)).equals(k, kmul(k, S.action(g), S.action(f))));
}

TEST_CASE("modified shift of a free module has the reduced-form dimension")
{
    for (int q : {2, 3}) {
        RationalField k;
        for (int n = 0; n <= 2; ++n) {
            int window = q == 2 ? 3 : 2;
            auto M = std::make_shared<FreeEval<RationalField>>(k, q, window,
                                                               FreeSpec{{MultiDegree{n}}});
            ModShiftEval<RationalField> S(M, 0);
            for (int a = 0; a + 1 <= window; ++a) {
                long long expect = (long long)injective_count(n, a, q)
                                   + (n > 0 ? (qpow(q, n) - 1)
                                                  * (long long)injective_count(n - 1, a, q)
                                            : 0);
                REQUIRE(S.dim({a}) == expect);
            }
        }
    }
}

TEST_CASE("modified shift works over a prime coefficient field")
{
    PrimeField k(3);
    auto M = std::make_shared<FreeEval<PrimeField>>(k, 2, 3, FreeSpec{{MultiDegree{1}}});
    ModShiftEval<PrimeField> S(M, 0);
    REQUIRE(S.dim({1}) == 2);  // |VI(1,1)| + (q-1)|VI(0,1)| = 1 + 1
    REQUIRE(S.dim({2}) == 4);  // 3 + 1
}

TEST_CASE("kernel functor vanishes on frees and complements the varpi rank")
{
    RationalField k;
    int q = 2;
    auto M = std::make_shared<FreeEval<RationalField>>(k, q, 4, FreeSpec{{MultiDegree{1}}});
    KernelEval<RationalField> K(M, 0);
    for (int a = 0; a <= 3; ++a) REQUIRE(K.dim({a}) == 0);

    // on the point module the kernel is everything in degree 0
    Presentation<RationalField> p;
    p.ctx.q = q;
    p.ctx.m = 1;
    p.ctx.window = 3;
    p.free.gens = {MultiDegree{0}};
    Relation<RationalField> r;
    r.degree = {1};
    r.terms.push_back({0, enumerate_hom({0}, {1}, q)[0], k.one()});
    p.relations.push_back(r);
    auto V = make_quotient(k, p);
    KernelEval<RationalField> KV(V, 0);
    REQUIRE(KV.dim({0}) == 1);
    REQUIRE(KV.dim({1}) == 0);
}

TEST_CASE("four-term identity on frees and on a presented module")
{
    RationalField k;
    for (int q : {2, 3}) {
        auto M = std::make_shared<FreeEval<RationalField>>(k, q, 3, FreeSpec{{MultiDegree{1}}});
        for (int a = 0; a <= 2; ++a) {
            FourTermDims ft = four_term_dims<RationalField>(M, 0, MultiDegree{a});
            REQUIRE(ft.k == 0);
            REQUIRE(ft.d == (qpow(q, 1) - 1) * (long long)injective_count(0, a, q));
            REQUIRE(ft.k - ft.v + ft.s - ft.d == 0);
            REQUIRE(ft.k == ft.v - ft.rank_unit);
        }
    }
    Presentation<RationalField> p;
    p.ctx.q = 2;
    p.ctx.m = 1;
    p.ctx.window = 4;
    p.free.gens = {MultiDegree{0}, MultiDegree{1}};
    Relation<RationalField> r;
    r.degree = {1};
    r.terms.push_back({0, enumerate_hom({0}, {1}, 2)[0], k.one()});
    r.terms.push_back({1, VImMorphism::identity(gf(2), {1}), k.one()});
    p.relations.push_back(r);
    auto V = make_quotient(k, p);
    for (int a = 0; a <= 3; ++a) {
        FourTermDims ft = four_term_dims<RationalField>(V, 0, MultiDegree{a});
        REQUIRE(ft.k - ft.v + ft.s - ft.d == 0);
        REQUIRE(ft.k == ft.v - ft.rank_unit);
    }
}

TEST_CASE("lower span of a free module covers exactly the non-top coordinates")
{
    RationalField k;
    int q = 2;
    FreeEval<RationalField> M(k, q, 3, FreeSpec{{MultiDegree{0}, MultiDegree{1}}});
    for (int n = 0; n <= 3; ++n) {
        Rref<RationalField> span = lower_span<RationalField>(M, {n});
        long long top = (long long)M.top_coords({n}).size();
        REQUIRE(span.rank() == M.dim({n}) - top);
    }
}

TEST_CASE("coinvariants of a free module live only in the generator degree")
{
    RationalField k;
    int q = 2, n = 2;
    auto M = std::make_shared<FreeEval<RationalField>>(k, q, 4, FreeSpec{{MultiDegree{n}}});
    auto H = make_h0<RationalField>(M);
    REQUIRE(H->dim({n}) == (long long)injective_count(n, n, q));
    REQUIRE(H->dim({n + 1}) == 0);
    REQUIRE(H->dim({n + 2}) == 0);
}

TEST_CASE("horizontal coinvariants slice along one axis")
{
    RationalField k;
    int q = 2;
    auto M = std::make_shared<FreeEval<RationalField>>(k, q, 4,
                                                       FreeSpec{{MultiDegree{1, 1}}});
    auto H = make_h0_axes<RationalField>(M, {0});
    for (int n2 = 1; n2 <= 3; ++n2) {
        REQUIRE(H->dim({0, n2}) == 0);
        REQUIRE(H->dim({1, n2}) == (long long)injective_count(1, n2, q));
        if (2 + n2 <= 4) REQUIRE(H->dim({2, n2}) == 0);
    }
}

TEST_CASE("horizontal coinvariants commute with the other-axis modified shift")
{
    RationalField k;
    int q = 2;
    auto M = std::make_shared<FreeEval<RationalField>>(k, q, 4,
                                                       FreeSpec{{MultiDegree{1, 1}}});
    auto HS = make_h0_axes<RationalField>(std::make_shared<ModShiftEval<RationalField>>(M, 1),
                                          {0});
    auto SH = std::make_shared<ModShiftEval<RationalField>>(
        make_h0_axes<RationalField>(M, {0}), 1);
    for (const MultiDegree& a : std::vector<MultiDegree>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}})
        REQUIRE(HS->dim(a) == SH->dim(a));
}

TEST_CASE("split_shift_free classifies every shifted hom element")
{
    for (int q : {2, 3})
        for (int n = 1; n <= 2; ++n)
            for (int a = 0; a <= 2; ++a) {
                ShiftFreeSplit s = split_shift_free(n, a, q);
                REQUIRE(s.total == injective_count(n, a + 1, q));
                REQUIRE(s.v_type + s.w_type == s.total);
                REQUIRE(s.reduced_count
                        == injective_count(n, a, q)
                               + (qpow(q, n) - 1) * injective_count(n - 1, a, q));
            }
}
