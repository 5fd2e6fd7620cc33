#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlearn/designs.hpp"
#include "hyperlearn/learner_direct.hpp"
#include "hyperlearn/learner_reduced.hpp"

namespace hyperlearn {

enum class Algo : uint8_t { direct, reduced };

const char* algo_name(Algo a);

struct ExperimentConfig {
    uint32_t n = 0, s = 1, r = 1;
    Algo algo = Algo::direct;
    double delta = 0.01;
    uint64_t seed = 0;
    bool verify_designs = false;
    bool check = false;
    std::string cache_dir;    // empty: HYPERLEARN_CACHE or .hyperlearn-cache
    std::string target_path;  // empty: generate the hidden instance from seed
};

struct RunReport {
    Mdnf hidden{0};
    Mdnf recovered{0};
    std::optional<bool> exact;
    uint64_t raw_queries = 0;
    uint64_t dedup_queries = 0;
    double baseline = 0.0;
    double ratio = 0.0;
    double wall_ms = 0.0; // informational; kept off deterministic streams
    Transcript transcript;
};

// Uniformly random reduced target: s distinct pairwise non-nested monomials
// with ranks uniform in [1, min(r, n)]. Whole draws are rejected until the
// result is reduced with exactly s terms.
Mdnf gen_instance(uint32_t n, uint32_t s, uint32_t r, uint64_t seed);

// Equivalence by truth table when var_count <= 24, else by minterm equality
// of the reduced forms.
bool check_recovery(const Mdnf& recovered, const Mdnf& hidden);

std::string default_cache_dir();

// Build-or-load with create-once files keyed by parameters and seed. With
// verify set, the design is verified (once; the flag is cached too) and a
// failed check raises DesignFailure.
DesignMatrix cached_cff(const std::string& dir, uint32_t n, uint32_t s, uint32_t r,
                        double delta, uint64_t seed, bool verify = false);
HashFamily cached_phf(const std::string& dir, uint32_t n, uint32_t q, uint32_t d,
                      double delta, uint64_t seed);

RunReport run_experiment(const ExperimentConfig& config);

// Key=value record of one run, a single '\n'-terminated line.
std::string run_record(const ExperimentConfig& config, const RunReport& report);

struct BenchCell {
    uint32_t n = 0;
    Algo algo = Algo::direct;
    uint64_t seed = 0;
    uint64_t raw_queries = 0;
    uint64_t dedup_queries = 0;
    double baseline = 0.0;
    double ratio = 0.0;
    double wall_ms = 0.0;
};

// Least-squares fits of queries against c*log2(n) and c*(log2(n))^2,
// both through the origin.
struct FitResult {
    double c_log = 0.0, rss_log = 0.0;
    double c_log2 = 0.0, rss_log2 = 0.0;
    bool linear_wins = false;
};

FitResult fit_query_scaling(std::span<const uint32_t> ns, std::span<const uint64_t> queries);

std::vector<BenchCell> bench_grid(uint32_t s, uint32_t r, std::span<const uint32_t> ns,
                                  std::span<const uint64_t> seeds, double delta,
                                  const std::string& cache_dir,
                                  std::span<const Algo> algos);

// Deterministic "%.6g" double formatting for record lines.
std::string format_double(double value);

// Substream tag for deriving the hidden-instance seed from a run seed
// (design tags live in learner_reduced.hpp).
inline constexpr uint64_t kSeedTarget = 7;

} // namespace hyperlearn
