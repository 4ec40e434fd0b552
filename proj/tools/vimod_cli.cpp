// Command-line front end: rho tables, verification suites, homology
// reports, and dimension tables for presented modules.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 domain error (including
// a failing verification suite), 3 resource cap exceeded.

#include "vimod/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace vimod;

namespace {

CoeffSpec parse_coeff(const std::string& s)
{
    if (s == "Q" || s == "q") return CoeffSpec::rational();
    if ((s[0] == 'F' || s[0] == 'f') && s.size() > 1)
        return CoeffSpec::fp(std::stol(s.substr(1)));
    throw DomainError("coeff must be Q or F<p>");
}

/// Runs fn with a coefficient-field object of the requested kind.
template <class Fn>
auto with_field(const CoeffSpec& coeff, Fn&& fn)
{
    if (coeff.kind == CoeffSpec::Kind::Rational) return fn(RationalField{});
    return fn(PrimeField{std::uint32_t(coeff.p)});
}

nlohmann::json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return nlohmann::json::parse(in);
}

void emit(const nlohmann::json& j, const std::string& format)
{
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

struct Args {
    int q = 2, m = 1, window = 4, imax = 2, n_max = 2, count = 20;
    int d = 0, r = 1;
    std::uint64_t seed = 0, cap = 1ull << 26;
    long long width_cap = 3000;
    std::string coeff = "Q", format = "json", input, suite;
    int rho_m = 1;
    long long rho_d = 0, rho_r = 0;
    bool table = false;
    int m_max = 3, d_max = 4, r_max = 4;
};

int run_rho(const Args& a)
{
    if (a.table) {
        if (a.format == "csv")
            std::cout << rho_table_csv(a.m_max, a.d_max, a.r_max);
        else
            emit(rho_table_json(a.m_max, a.d_max, a.r_max), a.format);
        return 0;
    }
    RhoEvaluator ev;
    std::cout << rho_value_str(ev, ev.rho(a.rho_m, BigInt(a.rho_d), BigInt(a.rho_r))) << "\n";
    return 0;
}

template <class F>
VerifyReport run_suite(const F& f, const Args& a)
{
    if (a.suite == "shift-free") return verify_shift_free(a.q, a.n_max, a.window);
    if (a.suite == "modified-shift-free")
        return verify_modified_shift_free(f, a.q, a.n_max, a.window);
    if (a.suite == "d-of-free") return verify_d_of_free(f, a.q, a.window);
    if (a.suite == "euler") return verify_euler(f, a.q, a.m, a.window, a.seed, a.count);
    if (a.suite == "commute") return verify_commute(f, a.q, a.window, a.seed);
    if (a.suite == "reduce") return verify_reduce(a.q);
    if (a.suite == "shift-theorem") return verify_shift_theorem(f, a.q, a.m, a.window);
    if (a.suite == "main-bound")
        return verify_main_bound(f, a.q, a.m, a.window, a.seed, a.count);
    throw DomainError("unknown suite: " + a.suite);
}

int run_verify(const Args& a)
{
    Context ctx;
    ctx.q = a.q;
    ctx.m = a.m;
    ctx.window = a.window;
    ctx.coeff = parse_coeff(a.coeff);
    ctx.validate();
    VerifyReport rep =
        with_field(ctx.coeff, [&](const auto& f) { return run_suite(f, a); });
    if (a.format == "text")
        std::cout << rep.to_text() << "\n";
    else
        emit(rep.to_json(), a.format);
    return rep.pass() ? 0 : 2;
}

int run_homology(const Args& a)
{
    nlohmann::json j = load_json(a.input);
    Context ctx = context_from_json(j);
    InvariantReport rep = with_field(ctx.coeff, [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        Presentation<F> p = presentation_from_json<F>(j, f);
        return resolve_presented(f, p, a.imax, a.width_cap).report;
    });
    emit(report_to_json(rep), a.format);
    return 0;
}

int run_dims(const Args& a)
{
    nlohmann::json j = load_json(a.input);
    Context ctx = context_from_json(j);
    std::vector<std::pair<MultiDegree, long long>> rows =
        with_field(ctx.coeff, [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            Presentation<F> p = presentation_from_json<F>(j, f);
            auto V = make_quotient(f, p);
            std::vector<std::pair<MultiDegree, long long>> out;
            for (const MultiDegree& n : window_degrees(ctx.m, ctx.window))
                out.emplace_back(n, V->dim(n));
            return out;
        });
    if (a.format == "csv") {
        std::cout << "degree,dim\n";
        for (const auto& [n, d] : rows) {
            for (std::size_t i = 0; i < n.size(); ++i)
                std::cout << (i ? " " : "") << n[i];
            std::cout << ',' << d << "\n";
        }
    } else {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [n, d] : rows) out.push_back({{"degree", n}, {"dim", d}});
        emit(out, a.format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact verification toolkit for VI^m-modules over finite fields"};
    app.require_subcommand(1);
    Args a;

    CLI::App* rho = app.add_subcommand("rho", "evaluate the bound rho_m(d, r)");
    rho->add_option("--m", a.rho_m, "arity");
    rho->add_option("--d", a.rho_d, "generation degree");
    rho->add_option("--r", a.rho_r, "relation degree");
    rho->add_flag("--table", a.table, "emit a full table instead of one value");
    rho->add_option("--mmax", a.m_max, "table: max m");
    rho->add_option("--dmax", a.d_max, "table: max d");
    rho->add_option("--rmax", a.r_max, "table: max r");
    rho->add_option("--format", a.format, "json|csv");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", a.suite, "suite name")->required();
    verify->add_option("--q", a.q, "field size");
    verify->add_option("--m", a.m, "arity");
    verify->add_option("--n", a.n_max, "max n for free-module suites");
    verify->add_option("--d", a.d, "generation degree (informational)");
    verify->add_option("--r", a.r, "relation degree (informational)");
    verify->add_option("--window", a.window, "truncation window");
    verify->add_option("--seed", a.seed, "PRNG seed");
    verify->add_option("--count", a.count, "random sample count");
    verify->add_option("--coeff", a.coeff, "coefficient field: Q or F<p>");
    verify->add_option("--cap", a.cap, "enumeration cap");
    verify->add_option("--format", a.format, "json|text");

    CLI::App* homology = app.add_subcommand("homology", "homology invariants of a presentation");
    homology->add_option("input", a.input, "presentation JSON file")->required();
    homology->add_option("--imax", a.imax, "highest homology functor (0..2)");
    homology->add_option("--cap", a.width_cap, "max ambient width per degree");
    homology->add_option("--format", a.format, "json");

    CLI::App* dims = app.add_subcommand("dims", "dimension table of a presentation");
    dims->add_option("input", a.input, "presentation JSON file")->required();
    dims->add_option("--format", a.format, "json|csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rho->parsed()) return run_rho(a);
        if (verify->parsed()) return run_verify(a);
        if (homology->parsed()) return run_homology(a);
        if (dims->parsed()) return run_dims(a);
    } catch (const SizeError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
