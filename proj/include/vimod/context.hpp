#pragma once

// Global run parameters: field order, arity, coefficient field choice,
// truncation window, and size caps for combinatorial materialization.

#include "vimod/field.hpp"

#include "json.hpp"

#include <cstdint>

namespace vimod {

struct CoeffSpec {
    enum Kind { Rational, Fp } kind = Rational;
    std::uint32_t p = 0;

    static CoeffSpec rational() { return {Rational, 0}; }
    static CoeffSpec fp(std::uint32_t p) { return {Fp, p}; }
};

struct Context {
    int q = 2;
    int m = 1;
    CoeffSpec coeff = CoeffSpec::rational();
    int window = 4;
    std::uint64_t hom_cap = 1ull << 26;  // max hom-set size to materialize
    std::uint64_t aug_cap = 1ull << 20;  // max unipotent group to average over

    void validate() const
    {
        int p = 0, e = 0;
        if (!is_prime_power(q, &p, &e) || q < 2 || q > 9)
            throw DomainError("q must be a prime power in [2,9]");
        if (m < 1 || m > 3) throw DomainError("arity m must be in [1,3]");
        if (window < 0) throw DomainError("window must be >= 0");
        if (coeff.kind == CoeffSpec::Fp) {
            if (coeff.p < 2) throw DomainError("coefficient modulus must be >= 2");
            if (int(coeff.p) == p)
                throw DomainError("coefficient characteristic must not divide q");
        }
    }
};

inline nlohmann::json coeff_to_json(const CoeffSpec& c)
{
    if (c.kind == CoeffSpec::Rational) return "Q";
    nlohmann::json j;
    j["Fp"] = c.p;
    return j;
}

inline CoeffSpec coeff_from_json(const nlohmann::json& j)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return CoeffSpec::rational();
        throw DomainError("coeff: expected \"Q\" or {\"Fp\": p}");
    }
    if (j.is_object() && j.contains("Fp")) return CoeffSpec::fp(j["Fp"].get<std::uint32_t>());
    throw DomainError("coeff: expected \"Q\" or {\"Fp\": p}");
}

}  // namespace vimod
