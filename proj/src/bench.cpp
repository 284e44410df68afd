#include "heugcd/bench.hpp"

#include "heugcd/oracle.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heugcd {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BenchCase time_case(const std::string& family, std::size_t index, const PlantedInstance& inst) {
    BenchCase c{family, index, inst.p.num_vars(), inst.p.main_degree(),
                mpz_sizeinbase(height(inst.p).get_mpz_t(), 10), 0, 0, false, "", 0, false};

    std::optional<MultiPoly> heu;
    auto start = Clock::now();
    try {
        GcdResult r = heugcd(inst.p, inst.q);
        c.heu_ms = elapsed_ms(start);
        c.heu_completed = true;
        c.heu_status = "certified";
        c.retries = r.retries;
        heu = std::move(r.gcd);
    } catch (const heuristic_failure& f) {
        c.heu_ms = elapsed_ms(start);
        c.heu_status = std::string(failure_name(f.reason()));
    }

    start = Clock::now();
    const MultiPoly oracle = prs_gcd(inst.p, inst.q);
    c.prs_ms = elapsed_ms(start);
    c.agree = heu && associate_equal(*heu, oracle);
    return c;
}

} // namespace

std::vector<std::pair<std::string, PlantedInstance>> bench_corpus(const BenchOptions& options) {
    Rng rng(options.seed);
    std::vector<std::pair<std::string, PlantedInstance>> out;
    PlantedSpec random_spec{options.ring, options.num_vars, options.max_degree, options.height, 6};
    for (std::size_t i = 0; i < options.cases; ++i)
        out.emplace_back("random", planted_instance(rng, random_spec));

    Int big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 25);
    for (std::size_t i = 0; i < options.large_cases; ++i) {
        PlantedInstance inst{random_dense_univariate(rng, options.ring, "x", 25, big),
                             random_dense_univariate(rng, options.ring, "x", 25, big),
                             random_dense_univariate(rng, options.ring, "x", 25, big),
                             MultiPoly(options.ring, {"x"}), MultiPoly(options.ring, {"x"})};
        inst.p = inst.a * inst.h;
        inst.q = inst.b * inst.h;
        out.emplace_back("large-height", std::move(inst));
    }
    return out;
}

BenchReport run_bench(const BenchOptions& options) {
    const auto corpus = bench_corpus(options);
    BenchReport report{options, std::vector<BenchCase>(corpus.size()), {}};

    std::vector<std::size_t> family_index(corpus.size());
    for (std::size_t i = 0, r = 0, l = 0; i < corpus.size(); ++i)
        family_index[i] = corpus[i].first == "random" ? r++ : l++;

#ifdef _OPENMP
    if (options.threads > 0) omp_set_num_threads(options.threads);
#endif
    const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        report.cases[k] = time_case(corpus[k].first, family_index[k], corpus[k].second);
    }

    for (const char* family : {"random", "large-height"}) {
        BenchFamilySummary s{family, 0, 0, 0, 0, 0, 0};
        for (const auto& c : report.cases) {
            if (c.family != family) continue;
            ++s.cases;
            s.heu_completed += c.heu_completed;
            s.agreed += c.agree;
            s.heu_total_ms += c.heu_ms;
            s.prs_total_ms += c.prs_ms;
        }
        if (s.cases == 0) continue;
        s.speedup = s.heu_total_ms > 0 ? s.prs_total_ms / s.heu_total_ms : 0;
        report.families.push_back(s);
    }
    return report;
}

std::string bench_table(const BenchReport& report) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << std::left << std::setw(14) << "family" << std::right << std::setw(6) << "case"
       << std::setw(6) << "vars" << std::setw(6) << "deg" << std::setw(8) << "digits"
       << std::setw(12) << "heu_ms" << std::setw(12) << "prs_ms" << std::setw(9) << "retries"
       << "  status" << '\n';
    for (const auto& c : report.cases) {
        os << std::left << std::setw(14) << c.family << std::right << std::setw(6) << c.index
           << std::setw(6) << c.num_vars << std::setw(6) << c.degree << std::setw(8)
           << c.height_digits << std::setw(12) << c.heu_ms << std::setw(12) << c.prs_ms
           << std::setw(9) << c.retries << "  " << c.heu_status
           << (c.heu_completed && !c.agree ? " MISMATCH" : "") << '\n';
    }
    os << '\n'
       << std::left << std::setw(14) << "family" << std::right << std::setw(7) << "cases"
       << std::setw(11) << "heu_done" << std::setw(8) << "agree" << std::setw(14) << "heu_total_ms"
       << std::setw(14) << "prs_total_ms" << std::setw(10) << "prs/heu" << '\n';
    for (const auto& s : report.families) {
        os << std::left << std::setw(14) << s.family << std::right << std::setw(7) << s.cases
           << std::setw(11) << s.heu_completed << std::setw(8) << s.agreed << std::setw(14)
           << s.heu_total_ms << std::setw(14) << s.prs_total_ms << std::setw(10) << s.speedup
           << '\n';
    }
    return os.str();
}

nlohmann::ordered_json bench_json(const BenchReport& report) {
    nlohmann::ordered_json j;
    j["seed"] = report.options.seed;
    j["ring"] = std::string(ring_name(report.options.ring));
    auto& cases = j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
        cases.push_back({{"family", c.family},
                         {"index", c.index},
                         {"vars", c.num_vars},
                         {"degree", c.degree},
                         {"height_digits", c.height_digits},
                         {"heu_ms", c.heu_ms},
                         {"prs_ms", c.prs_ms},
                         {"heu_status", c.heu_status},
                         {"retries", c.retries},
                         {"agree", c.agree}});
    }
    auto& fams = j["families"] = nlohmann::ordered_json::array();
    for (const auto& s : report.families) {
        fams.push_back({{"family", s.family},
                        {"cases", s.cases},
                        {"heu_completed", s.heu_completed},
                        {"agreed", s.agreed},
                        {"heu_total_ms", s.heu_total_ms},
                        {"prs_total_ms", s.prs_total_ms},
                        {"prs_over_heu", s.speedup}});
    }
    return j;
}

} // namespace heugcd
