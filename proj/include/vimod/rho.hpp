#pragma once

// The recursive bound function rho_m(d, r) and its auxiliaries rho' and
// rho''.
//
//   rho_1(d, r)  = max{d, d+r-1}
//   rho_m(-1, r) = -1                                   (m >= 2)
//   rho_m(d, r)  = max{rho_{m-1}(rho', rho''), 1 + rho_m(d-1, r)}
//     rho'  = max{2 + rho_m(d-1, r), r}
//     rho'' = max{3 + rho_m(d-1, r), 4 + rho_1(d, r) + rho_{m-1}(d, r)}
//
// Values explode: rho_2 roughly doubles per unit of d, and rho_3 feeds
// those values back in as arguments, so exact evaluation is only
// possible while results stay representable. The evaluator therefore
// clamps every intermediate at a configurable ceiling. The recursion is
// monotone nondecreasing in d, r and in every intermediate value (each
// step is a max/sum of monotone pieces), so a clamped run returns
// min(true value, ceiling): results below the ceiling are exact, and a
// result equal to the ceiling is a certified lower bound. Since
// rho_m(d, r) >= 1 + rho_m(d-1, r), the ceiling is an absorbing state,
// which lets the d-loop stop early instead of iterating astronomically
// many times.

#include "vimod/field.hpp"
#include "vimod/scalar.hpp"

#include "json.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace vimod {

class RhoEvaluator {
public:
    explicit RhoEvaluator(BigInt ceiling = BigInt("1000000000000000000"), int m_cap = 6,
                          long iter_cap = 200000)
        : sat_(std::move(ceiling)), m_cap_(m_cap), iter_cap_(iter_cap)
    {
        if (sat_ < 16) throw DomainError("ceiling too small");
    }

    const BigInt& ceiling() const { return sat_; }

    /// min(rho_m(d, r), ceiling); exact when the result is below the ceiling.
    BigInt rho(int m, const BigInt& d, const BigInt& r)
    {
        check_domain(m, d, r);
        if (m == 1) return clamp(rho1(d, r));
        if (d == -1) return BigInt(-1);
        auto key = std::make_tuple(m, d, r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        // iterate the d-recursion bottom-up; the ceiling is absorbing
        BigInt x = -1;
        BigInt i = 0;
        long steps = 0;
        while (i <= d) {
            BigInt rp = clamp(max(x + 2, r));
            BigInt rpp = clamp(max(x + 3, 4 + rho1(i, r) + rho(m - 1, i, r)));
            x = clamp(max(rho(m - 1, rp, rpp), x + 1));
            if (x == sat_) return memo_[key] = sat_;
            ++i;
            if (++steps > iter_cap_) throw SizeError("rho: iteration guard exceeded");
        }
        return memo_[key] = x;
    }

    /// Exact value; throws SizeError if it would reach the ceiling.
    BigInt rho_exact(int m, const BigInt& d, const BigInt& r)
    {
        BigInt v = rho(m, d, r);
        if (v == sat_) throw SizeError("rho: value exceeds the configured ceiling");
        return v;
    }

    BigInt rho_prime(int m, const BigInt& d, const BigInt& r)
    {
        check_domain(m, d, r);
        if (m < 2 || d < 0) throw DomainError("rho': requires m >= 2 and d >= 0");
        return clamp(max(2 + rho(m, d - 1, r), r));
    }

    BigInt rho_dprime(int m, const BigInt& d, const BigInt& r)
    {
        check_domain(m, d, r);
        if (m < 2 || d < 0) throw DomainError("rho'': requires m >= 2 and d >= 0");
        return clamp(max(3 + rho(m, d - 1, r), 4 + rho1(d, r) + rho(m - 1, d, r)));
    }

    static BigInt rho1(const BigInt& d, const BigInt& r) { return max(d, d + r - 1); }

private:
    static BigInt max(const BigInt& a, const BigInt& b) { return a >= b ? a : b; }
    BigInt clamp(const BigInt& v) const { return v >= sat_ ? sat_ : v; }

    void check_domain(int m, const BigInt& d, const BigInt& r) const
    {
        if (m < 1) throw DomainError("rho: m must be >= 1");
        if (m > m_cap_) throw DomainError("rho: m exceeds the configured cap");
        if (d < -1 || r < -1) throw DomainError("rho: d and r must be >= -1");
    }

    BigInt sat_;
    int m_cap_;
    long iter_cap_;
    std::map<std::tuple<int, BigInt, BigInt>, BigInt> memo_;
};

/// Straight transliteration of the definition, no memo, no clamping.
/// Reference implementation for cross-checks on small arguments.
inline BigInt rho_naive(int m, const BigInt& d, const BigInt& r, long depth_guard = 2000000)
{
    if (m < 1 || d < -1 || r < -1) throw DomainError("rho: out of domain");
    if (depth_guard <= 0) throw SizeError("rho_naive: depth guard exceeded");
    auto mx = [](const BigInt& a, const BigInt& b) { return a >= b ? a : b; };
    if (m == 1) return mx(d, d + r - 1);
    if (d == -1) return BigInt(-1);
    BigInt below = rho_naive(m, d - 1, r, depth_guard - 1);
    BigInt rp = mx(2 + below, r);
    BigInt rpp = mx(3 + below, 4 + rho_naive(1, d, r, depth_guard - 1)
                                   + rho_naive(m - 1, d, r, depth_guard - 1));
    return mx(rho_naive(m - 1, rp, rpp, depth_guard - 1), 1 + below);
}

struct RhoScanReport {
    std::uint64_t checks = 0;
    std::vector<std::string> violations;
    bool monotone_d = true, monotone_r = true;  // observed on the clamped grid
};

/// Scans the grid m <= m_max, -1 <= d <= d_max, -1 <= r <= r_max for the
/// inequalities rho' > d, rho'' > r, rho >= d, and observes monotonicity
/// in d and r. Lower bounds suffice for the inequalities, so clamped
/// values are fine.
inline RhoScanReport rho_inequality_scan(int m_max, int d_max, int r_max)
{
    RhoEvaluator ev;
    RhoScanReport rep;
    auto record = [&](int m, const BigInt& d, const BigInt& r, const std::string& what) {
        std::ostringstream os;
        os << "m=" << m << " d=" << d << " r=" << r << ": " << what;
        rep.violations.push_back(os.str());
    };
    for (int m = 1; m <= m_max; ++m)
        for (int d = -1; d <= d_max; ++d)
            for (int r = -1; r <= r_max; ++r) {
                BigInt v = ev.rho(m, d, r);
                ++rep.checks;
                if (d >= 0 && v < d) record(m, d, r, "rho < d");
                if (m >= 2 && d >= 0) {
                    if (ev.rho_prime(m, d, r) <= d) record(m, d, r, "rho' <= d");
                    if (ev.rho_dprime(m, d, r) <= r) record(m, d, r, "rho'' <= r");
                    rep.checks += 2;
                }
                if (d > -1 && v < ev.rho(m, d - 1, r)) rep.monotone_d = false;
                if (r > -1 && v < ev.rho(m, d, r - 1)) rep.monotone_r = false;
            }
    return rep;
}

// --- table emitters ----------------------------------------------------------

inline std::string rho_value_str(RhoEvaluator& ev, const BigInt& v)
{
    return v == ev.ceiling() ? ">=" + ev.ceiling().str() : v.str();
}

inline std::string rho_table_csv(int m_max, int d_max, int r_max)
{
    RhoEvaluator ev;
    std::ostringstream os;
    os << "m,d,r,rho,rho_prime,rho_dprime\n";
    for (int m = 1; m <= m_max; ++m)
        for (int d = -1; d <= d_max; ++d)
            for (int r = -1; r <= r_max; ++r) {
                os << m << ',' << d << ',' << r << ',' << rho_value_str(ev, ev.rho(m, d, r));
                if (m >= 2 && d >= 0)
                    os << ',' << rho_value_str(ev, ev.rho_prime(m, d, r)) << ','
                       << rho_value_str(ev, ev.rho_dprime(m, d, r));
                else
                    os << ",,";
                os << '\n';
            }
    return os.str();
}

inline nlohmann::json rho_table_json(int m_max, int d_max, int r_max)
{
    RhoEvaluator ev;
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 1; m <= m_max; ++m)
        for (int d = -1; d <= d_max; ++d)
            for (int r = -1; r <= r_max; ++r) {
                nlohmann::json row;
                row["m"] = m;
                row["d"] = d;
                row["r"] = r;
                row["rho"] = rho_value_str(ev, ev.rho(m, d, r));
                if (m >= 2 && d >= 0) {
                    row["rho_prime"] = rho_value_str(ev, ev.rho_prime(m, d, r));
                    row["rho_dprime"] = rho_value_str(ev, ev.rho_dprime(m, d, r));
                } else {
                    row["rho_prime"] = nullptr;
                    row["rho_dprime"] = nullptr;
                }
                rows.push_back(std::move(row));
            }
    return rows;
}

}  // namespace vimod
