#include "vimod/matrix.hpp"

#include "catch2/catch_amalgamated.hpp"

#include <set>

using namespace vimod;

TEST_CASE("rank profile on hand-built matrices")
{
    const Gf& F = gf(3);
    Mat m(F, 3, 3, {1, 2, 0, 2, 4 % 3, 0, 0, 0, 1});
    // rows 1 and 2 are proportional, so rank 2
    REQUIRE(rank(m) == 2);
    RankProfile rp = rank_profile(m);
    REQUIRE(rp.pivots.size() == 2);
    REQUIRE(rp.kernel.size() == 1);
    // kernel vectors really are killed
    for (const auto& v : rp.kernel)
        for (int i = 0; i < m.rows(); ++i) {
            felem s = 0;
            for (int j = 0; j < m.cols(); ++j) s = F.add(s, F.mul(m.at(i, j), v[j]));
            REQUIRE(s == 0);
        }
    REQUIRE(is_injective(Mat::identity(F, 3)));
    REQUIRE_FALSE(is_injective(m));
}

TEST_CASE("injective count formula vs enumeration")
{
    for (int q : {2, 3}) {
        for (int a = 0; a <= 3; ++a)
            for (int b = a; b <= 3; ++b) {
                REQUIRE(injective_count(a, b, q) == count_injective_enumerated(a, b, q));
                REQUIRE(enumerate_injective(a, b, q).size() == injective_count(a, b, q));
            }
        REQUIRE(injective_count(2, 1, q) == 0);
    }
    // GF(4) as well, smaller grid
    REQUIRE(injective_count(1, 2, 4) == count_injective_enumerated(1, 2, 4));
    REQUIRE(injective_count(2, 2, 4) == count_injective_enumerated(2, 2, 4));
}

TEST_CASE("enumeration order is canonical and duplicate free")
{
    std::vector<Mat> hom = enumerate_injective(2, 3, 2);
    std::set<std::vector<felem>> seen;
    std::vector<felem> prev;
    for (std::size_t i = 0; i < hom.size(); ++i) {
        REQUIRE(is_injective(hom[i]));
        REQUIRE(seen.insert(hom[i].entries()).second);
        if (i > 0) REQUIRE(prev < hom[i].entries());
        prev = hom[i].entries();
    }
}

TEST_CASE("invertible factorization into elementary operations")
{
    for (int q : {2, 3}) {
        const Gf& F = gf(q);
        for (const Mat& g : enumerate_injective(2, 2, q)) {
            std::vector<ElemOp> word = factor_invertible(g);
            REQUIRE(compose_word(F, 2, word) == g);
        }
    }
    Mat singular(gf(2), 2, 2, {1, 1, 1, 1});
    REQUIRE_THROWS_AS(factor_invertible(singular), DomainError);
}

TEST_CASE("product shapes are checked")
{
    Mat a(gf(2), 2, 3);
    Mat b(gf(2), 2, 2);
    REQUIRE_THROWS_AS(a * b, DomainError);
}
