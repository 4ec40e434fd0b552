#include "vimod/field.hpp"
#include "vimod/scalar.hpp"

#include "catch2/catch_amalgamated.hpp"

using namespace vimod;

TEST_CASE("prime power detection")
{
    int p = 0, e = 0;
    for (int q : {2, 3, 4, 5, 7, 8, 9}) REQUIRE(is_prime_power(q, &p, &e));
    REQUIRE(is_prime_power(8, &p, &e));
    REQUIRE(p == 2);
    REQUIRE(e == 3);
    REQUIRE(is_prime_power(9, &p, &e));
    REQUIRE(p == 3);
    REQUIRE(e == 2);
    REQUIRE_FALSE(is_prime_power(6, &p, &e));
    REQUIRE_FALSE(is_prime_power(1, &p, &e));
    REQUIRE_FALSE(is_prime_power(12, &p, &e));
}

TEST_CASE("field axioms on every supported q")
{
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const Gf& F = gf(q);
        REQUIRE(F.order() == q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                REQUIRE(F.add(a, b) == F.add(b, a));
                REQUIRE(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        for (int a = 0; a < q; ++a) {
            REQUIRE(F.add(a, F.neg(a)) == 0);
            REQUIRE(F.sub(a, a) == 0);
            if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
        }
        REQUIRE_THROWS_AS(F.inv(0), DomainError);
    }
}

TEST_CASE("gf rejects non prime powers")
{
    REQUIRE_THROWS_AS(gf(6), DomainError);
    REQUIRE_THROWS_AS(gf(10), DomainError);
}

TEST_CASE("rational field arithmetic")
{
    RationalField k;
    auto half = k.parse("1/2");
    REQUIRE(k.eq(k.add(half, half), k.one()));
    REQUIRE(k.eq(k.mul(half, k.from_int(4)), k.from_int(2)));
    REQUIRE(k.is_zero(k.sub(half, half)));
    REQUIRE(k.eq(k.inv(k.from_int(-3)), k.parse("-1/3")));
    REQUIRE(k.name() == "Q");
    REQUIRE(k.str(half) == "1/2");
}

TEST_CASE("prime field arithmetic")
{
    PrimeField k(5);
    REQUIRE(k.name() == "F5");
    for (std::uint32_t a = 1; a < 5; ++a) REQUIRE(k.mul(a, k.inv(a)) == k.one());
    REQUIRE(k.add(k.from_int(3), k.from_int(4)) == k.from_int(2));
    REQUIRE(k.neg(k.from_int(2)) == k.from_int(3));
    REQUIRE_THROWS_AS(PrimeField(6), DomainError);
    REQUIRE_THROWS_AS(PrimeField(1), DomainError);
}
