#pragma once

// Arithmetic in the small finite fields GF(q), 2 <= q <= 9, via dense
// operation tables. Extension fields use fixed irreducible polynomials
// (x^2+x+1 for q=4, x^3+x+1 for q=8, x^2+1 for q=9) so that element
// indices are reproducible across runs and implementations. Elements are
// indexed 0..q-1 with 0 the zero and 1 the one; for extension fields the
// index is the base-p encoding of the coefficient vector.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vimod {

using felem = std::uint8_t;

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime_power(int q, int* p_out = nullptr, int* e_out = nullptr)
{
    if (q < 2) return false;
    for (int p : {2, 3, 5, 7}) {
        int e = 0, v = 1;
        while (v < q) {
            v *= p;
            ++e;
        }
        if (v == q) {
            if (p_out) *p_out = p;
            if (e_out) *e_out = e;
            return true;
        }
    }
    return false;
}

/// Operation tables for one GF(q). Obtain instances through gf(q); they
/// are immortal, so raw references stay valid for the whole process.
class Gf {
public:
    explicit Gf(int q) : q_(q)
    {
        if (q < 2 || q > 9 || !is_prime_power(q, &p_, &deg_))
            throw DomainError("field order must be a prime power in [2,9]");
        build_tables();
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }

    felem add(felem x, felem y) const { return add_[idx(x, y)]; }
    felem sub(felem x, felem y) const { return add(x, neg(y)); }
    felem mul(felem x, felem y) const { return mul_[idx(x, y)]; }
    felem neg(felem x) const { return neg_[x]; }
    felem inv(felem x) const
    {
        if (x == 0) throw DomainError("inverse of zero");
        return inv_[x];
    }
    felem from_int(long v) const
    {
        long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<felem>(r);  // prime subfield embedding
    }

private:
    std::size_t idx(felem x, felem y) const { return std::size_t(x) * q_ + y; }

    // Polynomial representation: index = sum coeff[i] * p^i. Reduction
    // polynomials are monic with the listed lower coefficients.
    void build_tables()
    {
        std::array<int, 3> red{};  // coefficients of x^deg in terms of lower powers
        if (q_ == 4) red = {1, 1, 0};        // x^2 = x + 1
        else if (q_ == 8) red = {1, 1, 0};   // x^3 = x + 1
        else if (q_ == 9) red = {2, 0, 0};   // x^2 = -1 = 2
        add_.resize(std::size_t(q_) * q_);
        mul_.resize(std::size_t(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        auto digits = [&](int v) {
            std::array<int, 3> d{};
            for (int i = 0; i < deg_; ++i) {
                d[i] = v % p_;
                v /= p_;
            }
            return d;
        };
        auto undigits = [&](const std::array<int, 3>& d) {
            int v = 0;
            for (int i = deg_ - 1; i >= 0; --i) v = v * p_ + d[i];
            return v;
        };
        for (int x = 0; x < q_; ++x) {
            auto dx = digits(x);
            std::array<int, 3> dn{};
            for (int i = 0; i < deg_; ++i) dn[i] = (p_ - dx[i]) % p_;
            neg_[x] = static_cast<felem>(undigits(dn));
            for (int y = 0; y < q_; ++y) {
                auto dy = digits(y);
                std::array<int, 3> ds{};
                for (int i = 0; i < deg_; ++i) ds[i] = (dx[i] + dy[i]) % p_;
                add_[idx(felem(x), felem(y))] = static_cast<felem>(undigits(ds));
                // schoolbook product, then reduce powers >= deg_
                std::array<int, 5> prod{};
                for (int i = 0; i < deg_; ++i)
                    for (int j = 0; j < deg_; ++j)
                        prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
                for (int k = 2 * deg_ - 2; k >= deg_; --k) {
                    int c = prod[k];
                    if (c == 0) continue;
                    prod[k] = 0;
                    for (int i = 0; i < deg_; ++i)
                        prod[k - deg_ + i] = (prod[k - deg_ + i] + c * red[i]) % p_;
                }
                std::array<int, 3> dp{};
                for (int i = 0; i < deg_; ++i) dp[i] = prod[i];
                mul_[idx(felem(x), felem(y))] = static_cast<felem>(undigits(dp));
            }
        }
        for (int x = 1; x < q_; ++x)
            for (int y = 1; y < q_; ++y)
                if (mul_[idx(felem(x), felem(y))] == 1) inv_[x] = static_cast<felem>(y);
    }

    int q_, p_ = 0, deg_ = 0;
    std::vector<felem> add_, mul_, neg_, inv_;
};

/// Shared immortal table for GF(q).
inline const Gf& gf(int q)
{
    static std::array<const Gf*, 10> cache{};
    if (q < 2 || q > 9) throw DomainError("field order out of range");
    if (!cache[q]) cache[q] = new Gf(q);
    return *cache[q];
}

}  // namespace vimod
