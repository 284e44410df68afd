#pragma once

// Benchmark harness: heuristic gcd against the PRS oracle on seeded
// planted-gcd corpora.

#include "heugcd/heugcd.hpp"
#include "heugcd/random.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace heugcd {

struct BenchOptions {
    std::uint64_t seed = 42;
    std::size_t cases = 20;
    std::size_t num_vars = 2;
    unsigned max_degree = 6;
    Int height = 1000;
    RingTag ring = RingTag::Integers;
    /// Univariate degree-50 inputs with coefficients near 1e50.
    std::size_t large_cases = 5;
    int threads = 0; // 0: OpenMP default
};

struct BenchCase {
    std::string family;
    std::size_t index;
    std::size_t num_vars;
    std::uint32_t degree;  // main degree of p
    std::size_t height_digits;
    double heu_ms;
    double prs_ms;
    bool heu_completed;    // heuristic certified without fallback
    std::string heu_status;
    unsigned retries;
    bool agree;            // heuristic result associate-equal to PRS
};

struct BenchFamilySummary {
    std::string family;
    std::size_t cases;
    std::size_t heu_completed;
    std::size_t agreed;
    double heu_total_ms;
    double prs_total_ms;
    double speedup;        // prs_total / heu_total
};

struct BenchReport {
    BenchOptions options;
    std::vector<BenchCase> cases;
    std::vector<BenchFamilySummary> families;
};

/// Instances of the two families, generated serially from the seed.
std::vector<std::pair<std::string, PlantedInstance>> bench_corpus(const BenchOptions& options);

BenchReport run_bench(const BenchOptions& options);

std::string bench_table(const BenchReport& report);
nlohmann::ordered_json bench_json(const BenchReport& report);

} // namespace heugcd
