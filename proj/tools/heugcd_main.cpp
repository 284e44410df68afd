// Command-line front end: gcd, bench, diag bound, selftest.

#include "heugcd/bench.hpp"
#include "heugcd/heugcd.hpp"
#include "heugcd/oracle.hpp"
#include "heugcd/parse.hpp"
#include "heugcd/report.hpp"
#include "heugcd/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

namespace {

using namespace heugcd;

constexpr int exit_parse = 2;
constexpr int exit_heuristic = 3;
constexpr int exit_structural = 4;

RingTag parse_ring(const std::string& s) {
    return s == "zi" ? RingTag::GaussianIntegers : RingTag::Integers;
}

std::vector<std::string> split_vars(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw structural_error("empty variable name in --vars");
        if (std::find(out.begin(), out.end(), item) != out.end())
            throw structural_error("variable '" + item + "' listed twice in --vars");
        out.push_back(item);
    }
    return out;
}

std::pair<MultiPoly, MultiPoly> parse_pair(const std::string& a, const std::string& b,
                                           RingTag ring, const std::string& vars) {
    std::vector<std::string> order =
        vars.empty() ? shared_variable_order(a, b, ring) : split_vars(vars);
    return {parse_poly(a, ring, order), parse_poly(b, ring, order)};
}

struct GcdArgs {
    std::string lhs, rhs;
    std::string ring = "z";
    std::string algo = "auto";
    std::string vars;
    bool json = false;
    bool stats = false;
    unsigned max_retries = HeuConfig{}.max_retries;
    std::uint64_t size_guard = HeuConfig{}.size_guard;
};

int run_gcd(const GcdArgs& args) {
    const RingTag ring = parse_ring(args.ring);
    auto [p, q] = parse_pair(args.lhs, args.rhs, ring, args.vars);
    const HeuConfig config{args.max_retries, args.size_guard};

    const auto start = std::chrono::steady_clock::now();
    GcdResult result = args.algo == "heu"   ? heugcd::heugcd(p, q, config)
                       : args.algo == "prs" ? gcd_prs(p, q)
                                            : gcd_auto(p, q, config);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const RunReport report = make_report(result, ring, ms);
    if (args.json) std::cout << to_json(report).dump() << '\n';
    else std::cout << to_text(report, args.stats);
    return 0;
}

struct DiagArgs {
    std::string lhs, rhs;
    bool json = false;
};

int run_diag(const DiagArgs& args) {
    auto [p, q] = parse_pair(args.lhs, args.rhs, RingTag::Integers, "");
    if (p.num_vars() != 1) throw unsupported("diag bound needs univariate input");
    const FirstTryReport r = verify_first_try_bound(p, q);
    const double ratio = r.ratio.get_d();
    if (args.json) {
        nlohmann::ordered_json j;
        j["gamma"] = r.certificate.gamma.get_str();
        j["D"] = format_poly(r.certificate.d);
        j["U"] = format_poly(r.certificate.u);
        j["V"] = format_poly(r.certificate.v);
        j["z_theory"] = r.z_theory.get_str();
        j["z_practical"] = r.z_practical.get_str();
        j["ratio"] = ratio;
        j["first_try"] = r.success;
        j["G"] = format_poly(r.candidate);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "gamma:       " << r.certificate.gamma.get_str() << '\n'
                  << "D:           " << format_poly(r.certificate.d) << '\n'
                  << "U:           " << format_poly(r.certificate.u) << '\n'
                  << "V:           " << format_poly(r.certificate.v) << '\n'
                  << "z_theory:    " << r.z_theory.get_str() << "  (2|D||gamma| + 1)\n"
                  << "z_practical: " << r.z_practical.get_str() << "  (2 min(|P|,|Q|) + 2)\n"
                  << "ratio:       " << ratio << '\n'
                  << "first try:   " << (r.success ? "success" : "FAILED") << ", G = "
                  << format_poly(r.candidate) << '\n';
    }
    return r.success ? 0 : 1;
}

int run_bench_cmd(BenchOptions options, const std::string& height, const std::string& ring,
                  bool json) {
    options.height = Int(height);
    options.ring = parse_ring(ring);
    const BenchReport report = run_bench(options);
    if (json) std::cout << bench_json(report).dump() << '\n';
    else std::cout << bench_table(report);
    return 0;
}

int run_selftest_cmd(std::uint64_t seed) {
    std::size_t failed = 0;
    for (const auto& c : run_selftest(seed)) {
        std::cout << (c.passed == c.total ? "PASS " : "FAIL ") << c.name << ": " << c.passed << '/'
                  << c.total << '\n';
        failed += c.passed != c.total;
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heuristic polynomial gcd over Z and Z[i]"};
    app.require_subcommand(1);

    GcdArgs gcd_args;
    auto* gcd = app.add_subcommand("gcd", "gcd of two polynomials");
    gcd->add_option("expr1", gcd_args.lhs, "first polynomial")->required();
    gcd->add_option("expr2", gcd_args.rhs, "second polynomial")->required();
    gcd->add_option("--ring", gcd_args.ring, "coefficient ring")
        ->check(CLI::IsMember({"z", "zi"}));
    gcd->add_option("--algo", gcd_args.algo, "algorithm")->check(CLI::IsMember({"heu", "prs", "auto"}));
    gcd->add_option("--vars", gcd_args.vars, "comma-separated variable order, main variable last");
    gcd->add_flag("--json", gcd_args.json, "single-line JSON output");
    gcd->add_flag("--stats", gcd_args.stats, "print trace and timing");
    gcd->add_option("--max-retries", gcd_args.max_retries, "evaluation points per level");
    gcd->add_option("--size-guard", gcd_args.size_guard,
                    "abort when bits(z) * (min degree + 1) exceeds this");

    BenchOptions bench_opts;
    std::string bench_height = "1000";
    std::string bench_ring = "z";
    bool bench_json_out = false;
    auto* bench = app.add_subcommand("bench", "heuristic vs PRS timings on seeded corpora");
    bench->add_option("--seed", bench_opts.seed, "generator seed")->required();
    bench->add_option("--cases", bench_opts.cases, "random planted-gcd cases");
    bench->add_option("--num-vars", bench_opts.num_vars, "variables per random case")
        ->check(CLI::Range(1, 8));
    bench->add_option("--max-degree", bench_opts.max_degree, "per-variable degree bound");
    bench->add_option("--height", bench_height, "factor coefficient height");
    bench->add_option("--large-cases", bench_opts.large_cases,
                      "univariate degree-50 cases with ~50-digit coefficients");
    bench->add_option("--ring", bench_ring, "coefficient ring")->check(CLI::IsMember({"z", "zi"}));
    bench->add_option("--threads", bench_opts.threads, "worker threads (0: default)");
    bench->add_flag("--json", bench_json_out, "JSON output");

    DiagArgs diag_args;
    auto* diag = app.add_subcommand("diag", "diagnostics");
    diag->require_subcommand(1);
    auto* bound = diag->add_subcommand("bound", "Bezout first-try bound (univariate Z)");
    bound->add_option("expr1", diag_args.lhs)->required();
    bound->add_option("expr2", diag_args.rhs)->required();
    bound->add_flag("--json", diag_args.json, "JSON output");

    std::uint64_t selftest_seed = 1;
    auto* selftest = app.add_subcommand("selftest", "run the embedded property corpus");
    selftest->add_option("--seed", selftest_seed, "generator seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gcd) return run_gcd(gcd_args);
        if (*bench) return run_bench_cmd(bench_opts, bench_height, bench_ring, bench_json_out);
        if (*bound) return run_diag(diag_args);
        if (*selftest) return run_selftest_cmd(selftest_seed);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const heuristic_failure& e) {
        std::cerr << e.what() << '\n';
        return exit_heuristic;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_structural;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_structural;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
