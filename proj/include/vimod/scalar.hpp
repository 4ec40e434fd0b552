#pragma once

// Coefficient fields for module evaluations. Two concrete choices:
// exact rationals (default, arbitrary precision) and a prime field F_p
// with p not dividing q. Code downstream is templated on the field
// object, which owns the arithmetic; elements stay plain values.

#include "vimod/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace vimod {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct RationalField {
    using Elem = BigRat;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const
    {
        if (a == 0) throw DomainError("inverse of zero");
        return Elem(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string name() const { return "Q"; }
    std::string str(const Elem& a) const { return a.str(); }
    Elem parse(const std::string& s) const { return Elem(s); }
};

struct PrimeField {
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p(p)
    {
        if (p < 2) throw DomainError("modulus must be >= 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw DomainError("modulus must be prime");
    }

    std::uint32_t p;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const
    {
        long r = v % long(p);
        if (r < 0) r += p;
        return Elem(r);
    }
    Elem add(Elem a, Elem b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p ? Elem(s - p) : Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p - b); }
    Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p); }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem inv(Elem a) const
    {
        if (a == 0) throw DomainError("inverse of zero");
        Elem r = 1, base = a;
        std::uint32_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string name() const { return "F" + std::to_string(p); }
    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const { return from_int(std::stol(s)); }
};

}  // namespace vimod
