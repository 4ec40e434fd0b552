#include "vimod/verify.hpp"

#include "catch2/catch_amalgamated.hpp"

using namespace vimod;

TEST_CASE("identical seeds give byte-identical verify reports")
{
    RationalField k;
    std::string a = verify_euler(k, 2, 1, 3, 42, 4).to_json().dump();
    std::string b = verify_euler(k, 2, 1, 3, 42, 4).to_json().dump();
    REQUIRE(a == b);
    std::string c = verify_euler(k, 2, 1, 3, 43, 4).to_json().dump();
    REQUIRE(a != c);  // the seed is part of the report

    std::string d = verify_main_bound(k, 2, 1, 4, 7, 3).to_json().dump();
    std::string e = verify_main_bound(k, 2, 1, 4, 7, 3).to_json().dump();
    REQUIRE(d == e);
}

TEST_CASE("coeff spec json forms")
{
    nlohmann::json q = coeff_to_json(CoeffSpec::rational());
    REQUIRE(coeff_from_json(q).kind == CoeffSpec::Kind::Rational);
    nlohmann::json fp = coeff_to_json(CoeffSpec::fp(7));
    CoeffSpec s = coeff_from_json(fp);
    REQUIRE(s.kind == CoeffSpec::Kind::Fp);
    REQUIRE(s.p == 7);
}

TEST_CASE("random presentations round trip through json")
{
    RationalField k;
    std::mt19937_64 rng(5);
    std::vector<MultiDegree> gen_pool{{0}, {1}};
    std::vector<MultiDegree> rel_pool{{1}, {2}};
    for (int t = 0; t < 10; ++t) {
        Presentation<RationalField> p = random_presentation(k, rng, 2, 1, 4, gen_pool, rel_pool);
        nlohmann::json j = presentation_to_json(p, k);
        Presentation<RationalField> p2 = presentation_from_json<RationalField>(j, k);
        REQUIRE(presentation_to_json(p2, k).dump() == j.dump());
        // and the deserialized module has identical dimensions
        auto V = make_quotient(k, p);
        auto V2 = make_quotient(k, p2);
        for (int n = 0; n <= 4; ++n) REQUIRE(V->dim({n}) == V2->dim({n}));
    }
}

TEST_CASE("prime field presentation serializes its coefficient field")
{
    PrimeField k(5);
    Presentation<PrimeField> p;
    p.ctx.q = 2;
    p.ctx.m = 1;
    p.ctx.coeff = CoeffSpec::fp(5);
    p.ctx.window = 2;
    p.free.gens = {MultiDegree{0}};
    Relation<PrimeField> r;
    r.degree = {1};
    r.terms.push_back({0, enumerate_hom({0}, {1}, 2)[0], k.from_int(3)});
    p.relations.push_back(r);
    nlohmann::json j = presentation_to_json(p, k);
    Context ctx = context_from_json(j);
    REQUIRE(ctx.coeff.kind == CoeffSpec::Kind::Fp);
    REQUIRE(ctx.coeff.p == 5);
    Presentation<PrimeField> p2 = presentation_from_json<PrimeField>(j, k);
    REQUIRE(p2.relations[0].terms[0].scalar == k.from_int(3));
}

TEST_CASE("rejecting coefficients whose characteristic divides q")
{
    RationalField k;
    Presentation<RationalField> p = point_module(k, 4, 1, 2);
    nlohmann::json j = presentation_to_json(p, k);
    j["coeff"] = coeff_to_json(CoeffSpec::fp(2));
    REQUIRE_THROWS_AS(context_from_json(j), DomainError);
}

TEST_CASE("negative controls fail in every suite")
{
    RationalField k;
    REQUIRE(verify_shift_free(2, 2, 3).negative_control_failed);
    REQUIRE(verify_modified_shift_free(k, 2, 2, 3).negative_control_failed);
    REQUIRE(verify_d_of_free(k, 2, 3).negative_control_failed);
    REQUIRE(verify_euler(k, 2, 1, 3, 1, 2).negative_control_failed);
    REQUIRE(verify_commute(k, 2, 3, 1).negative_control_failed);
    REQUIRE(verify_reduce(2).negative_control_failed);
    REQUIRE(verify_shift_theorem(k, 2, 1, 3).negative_control_failed);
    REQUIRE(verify_main_bound(k, 2, 1, 3, 1, 2).negative_control_failed);
}
