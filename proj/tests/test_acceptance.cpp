// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Runtimes are enforced where a criterion carries a budget.

#include "vimod/verify.hpp"

#include <chrono>
#include <iostream>

using namespace vimod;

namespace {

int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double secs() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void line(int num, const std::string& name, bool ok, double secs, const std::string& note = "")
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << " (" << name << "): "
              << (note.empty() ? "" : note + ", ") << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s\n";
    if (!ok) ++failures;
}

std::string suite_note(const VerifyReport& r)
{
    std::ostringstream os;
    os << r.checks << " checks";
    if (!r.failures.empty()) os << ", first failure: " << r.failures.front();
    return os.str();
}

void criterion_1()
{
    Timer t;
    bool ok = true;
    std::uint64_t checks = 0;
    for (int q : {2, 3})
        for (int a = 0; a <= 4; ++a)
            for (int b = a; b <= 4; ++b) {
                ok = ok && injective_count(a, b, q) == count_injective_enumerated(a, b, q);
                ++checks;
            }
    double s = t.secs();
    line(1, "hom-count law by raw enumeration", ok && s < 5.0,
         s, std::to_string(checks) + " counts");
}

void criterion_2()
{
    Timer t;
    VerifyReport r2 = verify_shift_free(2, 3, 5);
    VerifyReport r3 = verify_shift_free(3, 2, 5);
    double s = t.secs();
    line(2, "shift decomposition of frees", r2.pass() && r3.pass() && s < 30.0, s,
         suite_note(r2) + " / " + suite_note(r3));
}

void criterion_3()
{
    Timer t;
    RationalField k;
    VerifyReport r2 = verify_modified_shift_free(k, 2, 3, 5);
    VerifyReport r3 = verify_modified_shift_free(k, 3, 2, 5);
    line(3, "modified-shift decomposition of frees", r2.pass() && r3.pass(), t.secs(),
         suite_note(r2) + " / " + suite_note(r3));
}

void criterion_4()
{
    Timer t;
    VerifyReport r = verify_reduce(2, 2, 3);
    line(4, "reduced forms, exhaustive", r.pass(), t.secs(), suite_note(r));
}

void criterion_5()
{
    Timer t;
    RationalField kq;
    PrimeField k3(3), k5(5);
    VerifyReport d2 = verify_d_of_free(kq, 2, 4);
    VerifyReport d3 = verify_d_of_free(kq, 3, 3);
    VerifyReport e1 = verify_euler(k3, 2, 1, 4, 301, 8);
    VerifyReport e2 = verify_euler(k3, 2, 2, 3, 302, 6);
    VerifyReport e3 = verify_euler(k5, 3, 1, 3, 303, 6);
    bool ok = d2.pass() && d3.pass() && e1.pass() && e2.pass() && e3.pass();
    std::uint64_t checks = d2.checks + d3.checks + e1.checks + e2.checks + e3.checks;
    line(5, "K/D structure and Euler identity", ok, t.secs(),
         std::to_string(checks) + " checks over 20 random presentations");
}

void criterion_6()
{
    Timer t;
    RationalField k;
    bool ok = true;
    auto acyclic_presented = [&](int q, int m, MultiDegree g) {
        Presentation<RationalField> p;
        p.ctx.q = q;
        p.ctx.m = m;
        p.ctx.window = 6;
        p.free.gens = {std::move(g)};
        ResolutionDetail<RationalField> det = resolve_presented(k, p, 2);
        return det.report.t.at(0) == total(p.free.gens[0]) && det.report.t.at(1) == -1
               && det.report.t.at(2) == -1;
    };
    ok = ok && acyclic_presented(2, 1, {1});
    ok = ok && acyclic_presented(2, 1, {2});
    ok = ok && acyclic_presented(3, 1, {1});
    ok = ok && acyclic_presented(2, 2, {1, 1});
    // honest kernel computation on the small frees
    FreeEval<RationalField> m1(k, 2, 6, FreeSpec{{MultiDegree{1}}});
    ResolutionDetail<RationalField> e1 = resolve_eval(m1, 2);
    ok = ok && e1.report.t.at(1) == -1 && e1.report.t.at(2) == -1;
    FreeEval<RationalField> m11(k, 2, 6, FreeSpec{{MultiDegree{1, 1}}});
    ResolutionDetail<RationalField> e2 = resolve_eval(m11, 2);
    ok = ok && e2.report.t.at(1) == -1 && e2.report.t.at(2) == -1;
    line(6, "free modules are homology acyclic in window 6", ok, t.secs());
}

void criterion_7()
{
    Timer t;
    RationalField k;
    VerifyReport r1 = verify_shift_theorem(k, 2, 1, 6);
    VerifyReport r2 = verify_shift_theorem(k, 2, 2, 6);
    double s = t.secs();
    line(7, "shift theorem at desk scale", r1.pass() && r2.pass() && s < 120.0, s,
         suite_note(r1) + " / " + suite_note(r2));
}

void criterion_8()
{
    Timer t;
    RhoEvaluator ev;
    bool ok = true;
    for (int d = -1; d <= 8; ++d)
        for (int r = -1; r <= 8; ++r)
            ok = ok && ev.rho(1, d, r) == std::max(BigInt(d), BigInt(d + r - 1));
    for (int m : {2, 3})
        for (int r = -1; r <= 6; ++r) ok = ok && ev.rho(m, -1, r) == -1;
    ok = ok && ev.rho(2, 0, -1) == 4;
    RhoScanReport scan = rho_inequality_scan(3, 6, 6);
    ok = ok && scan.violations.empty() && scan.monotone_d && scan.monotone_r;
    for (int d = -1; d <= 6; ++d)
        for (int r = -1; r <= 4; ++r) ok = ok && ev.rho(2, d, r) == rho_naive(2, d, r);
    for (int r = -1; r <= 2; ++r) ok = ok && ev.rho(3, 0, r) == rho_naive(3, 0, r);
    double s = t.secs();
    line(8, "rho recursion", ok && s < 1.0, s,
         std::to_string(scan.checks) + " grid checks, zero violations");
}

void criterion_9()
{
    Timer t;
    PrimeField k3(3);
    VerifyReport r = verify_main_bound(k3, 2, 2, 6, 101, 20);
    line(9, "regularity bound on random presentations", r.pass(), t.secs(), suite_note(r));
}

void criterion_10()
{
    Timer t;
    RationalField k;
    std::mt19937_64 rng(77);
    std::vector<MultiDegree> gen_pool{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<MultiDegree> rel_pool{{1, 0}, {0, 1}, {1, 1}};
    bool ok = true;
    int samples = 0;
    while (samples < 5) {
        Presentation<RationalField> p = random_presentation(k, rng, 2, 2, 4, gen_pool, rel_pool);
        ++samples;
        auto V = make_quotient(k, p);
        int alpha = -1, beta = -1;
        for (int v = 0; v <= 4; ++v) {
            alpha = std::max(alpha,
                             resolve_eval(RestrictEval<RationalField>(V, 1, v), 1).report.reg);
            beta = std::max(beta,
                            resolve_eval(RestrictEval<RationalField>(V, 0, v), 1).report.reg);
        }
        ResolutionDetail<RationalField> det = resolve_presented(k, p, 2);
        for (const auto& [i, ti] : det.report.t)
            ok = ok && ti <= std::max(-1, 2 * i + alpha + beta);
    }
    line(10, "t_i bounded by restrictions", ok, t.secs(), "5 samples");
}

void criterion_11()
{
    Timer t;
    RationalField kq;
    PrimeField k3(3);
    bool ok = true;
    ok = ok
         && verify_euler(k3, 2, 1, 3, 9, 3).to_json().dump()
                == verify_euler(k3, 2, 1, 3, 9, 3).to_json().dump();
    ok = ok
         && verify_main_bound(k3, 2, 1, 4, 9, 3).to_json().dump()
                == verify_main_bound(k3, 2, 1, 4, 9, 3).to_json().dump();
    ok = ok && verify_shift_free(2, 2, 3).negative_control_failed;
    ok = ok && verify_modified_shift_free(kq, 2, 2, 3).negative_control_failed;
    ok = ok && verify_d_of_free(kq, 2, 3).negative_control_failed;
    ok = ok && verify_euler(k3, 2, 1, 3, 1, 2).negative_control_failed;
    ok = ok && verify_commute(kq, 2, 3, 1).negative_control_failed;
    ok = ok && verify_reduce(2).negative_control_failed;
    ok = ok && verify_shift_theorem(kq, 2, 1, 3).negative_control_failed;
    ok = ok && verify_main_bound(k3, 2, 1, 3, 1, 2).negative_control_failed;
    line(11, "determinism and negative controls", ok, t.secs());
}

}  // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
