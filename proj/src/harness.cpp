#include "hyperlearn/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hyperlearn/errors.hpp"
#include "hyperlearn/formats.hpp"
#include "hyperlearn/rng.hpp"

namespace fs = std::filesystem;

namespace hyperlearn {
namespace {

std::vector<uint32_t> sample_subset(Rng& rng, uint32_t n, uint32_t k) {
    // Floyd's algorithm; the monomial constructor sorts.
    std::vector<uint32_t> out;
    out.reserve(k);
    for (uint32_t j = n - k + 1; j <= n; ++j) {
        const auto t = static_cast<uint32_t>(1 + rng.below(j));
        if (std::find(out.begin(), out.end(), t) != out.end())
            out.push_back(j);
        else
            out.push_back(t);
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string cache_file(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void write_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    save_text_file(tmp, contents);
    fs::rename(tmp, path);
}

} // namespace

const char* algo_name(Algo a) { return a == Algo::direct ? "direct" : "reduced"; }

Mdnf gen_instance(uint32_t n, uint32_t s, uint32_t r, uint64_t seed) {
    if (n < 1 || s < 1 || r < 1) throw InvalidArgument("gen_instance requires n, s, r >= 1");
    const uint32_t max_rank = std::min(r, n);
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Monomial> terms;
        terms.reserve(s);
        for (uint32_t t = 0; t < s; ++t) {
            const auto k = static_cast<uint32_t>(1 + rng.below(max_rank));
            terms.emplace_back(sample_subset(rng, n, k));
        }
        Mdnf f(n, std::move(terms));
        if (f.term_count() == s && f.is_reduced()) return f;
    }
    throw Error("gen_instance could not draw a reduced instance in 1000 attempts");
}

bool check_recovery(const Mdnf& recovered, const Mdnf& hidden) {
    if (recovered.var_count() != hidden.var_count()) return false;
    if (recovered.var_count() <= 24) return equivalent(recovered, hidden);
    const std::vector<Assignment> a = recovered.reduced().minterms();
    const std::vector<Assignment> b = hidden.reduced().minterms();
    return a == b; // both canonically ordered
}

std::string default_cache_dir() {
    const char* env = std::getenv("HYPERLEARN_CACHE");
    if (env && *env) return env;
    return ".hyperlearn-cache";
}

DesignMatrix cached_cff(const std::string& dir, uint32_t n, uint32_t s, uint32_t r,
                        double delta, uint64_t seed, bool verify) {
    const std::string d = dir.empty() ? default_cache_dir() : dir;
    fs::create_directories(d);
    char name[128];
    std::snprintf(name, sizeof name, "cff_n%u_s%u_r%u_d%s_x%llu.txt", n, s, r,
                  format_double(delta).c_str(), static_cast<unsigned long long>(seed));
    const std::string path = cache_file(d, name);

    DesignMatrix A;
    bool loaded = false;
    if (fs::exists(path)) {
        std::istringstream in(load_text_file(path));
        A = read_cff(in);
        loaded = A.n == n && A.s == s && A.r == r;
    }
    if (!loaded) A = random_cff(n, s, r, delta, seed);

    bool dirty = !loaded;
    if (verify && A.state != VerifyState::verified) {
        const bool ok = verify_cff(A);
        dirty = true;
        if (!ok) {
            std::ostringstream out;
            write_cff(out, A);
            write_atomic(path, out.str());
            throw DesignFailure("cover-free family failed verification: " + path);
        }
    }
    if (dirty) {
        std::ostringstream out;
        write_cff(out, A);
        write_atomic(path, out.str());
    }
    return A;
}

HashFamily cached_phf(const std::string& dir, uint32_t n, uint32_t q, uint32_t d,
                      double delta, uint64_t seed) {
    const std::string dd = dir.empty() ? default_cache_dir() : dir;
    fs::create_directories(dd);
    char name[128];
    std::snprintf(name, sizeof name, "phf_n%u_q%u_d%u_d%s_x%llu.txt", n, q, d,
                  format_double(delta).c_str(), static_cast<unsigned long long>(seed));
    const std::string path = cache_file(dd, name);

    if (fs::exists(path)) {
        std::istringstream in(load_text_file(path));
        HashFamily P = read_phf(in);
        if (P.n == n && P.q == q && P.d == d) return P;
    }
    HashFamily P = build_phf_all_subsets(n, q, d, delta, seed);
    std::ostringstream out;
    write_phf(out, P);
    write_atomic(path, out.str());
    return P;
}

RunReport run_experiment(const ExperimentConfig& config) {
    const uint32_t n = config.n, s = config.s, r = config.r;
    if (n < 1 || s < 1 || r < 1) throw InvalidArgument("run requires n, s, r >= 1");
    if (r > n) throw InvalidArgument("run requires r <= n");
    if (!(config.delta > 0.0) || !(config.delta < 1.0))
        throw InvalidArgument("delta must lie in (0,1)");
    if (r > s)
        std::fprintf(stderr, "hyperlearn: note: r > s is outside the intended regime\n");
    const std::string dir = config.cache_dir.empty() ? default_cache_dir() : config.cache_dir;

    RunReport rep;
    if (config.target_path.empty()) {
        rep.hidden = gen_instance(n, s, r, derive_seed(config.seed, kSeedTarget));
    } else {
        rep.hidden = mdnf_from_string(load_text_file(config.target_path)).reduced();
        if (rep.hidden.var_count() != n)
            throw InvalidArgument("target file has a different variable count than --n");
        if (rep.hidden.term_count() > s || rep.hidden.max_rank() > r)
            throw InvalidArgument("target file is outside the declared (s, r) class");
    }
    Teacher teacher(rep.hidden, /*strict=*/true);

    const auto t0 = std::chrono::steady_clock::now();
    LearnResult lr;
    const ReductionParams params = reduction_params(n, s, r);
    const bool projected = config.algo == Algo::reduced && params.projects;
    if (!projected) {
        DesignMatrix A =
            cached_cff(dir, n, 1, r, config.delta, derive_seed(config.seed, kSeedCffA),
                       config.verify_designs);
        DesignMatrix B =
            cached_cff(dir, n, s - 1, r, config.delta, derive_seed(config.seed, kSeedCffB),
                       config.verify_designs);
        lr = learn_direct(n, s, r, teacher, std::move(A), std::move(B));
    } else {
        HashFamily P = cached_phf(dir, n, params.q, params.d + 1, config.delta,
                                  derive_seed(config.seed, kSeedPhf));
        DesignMatrix A_q =
            cached_cff(dir, params.q, 1, r, config.delta, derive_seed(config.seed, kSeedCffA),
                       config.verify_designs);
        DesignMatrix B_q = cached_cff(dir, params.q, s - 1, r, config.delta,
                                      derive_seed(config.seed, kSeedCffB),
                                      config.verify_designs);
        if (config.verify_designs) {
            // Exhaustive when feasible, else targeted at this run's instance.
            const double choose = std::exp(std::lgamma(double(n) + 1) -
                                           std::lgamma(double(P.d) + 1) -
                                           std::lgamma(double(n - P.d) + 1));
            const bool ok = choose <= 1e7 ? verify_phf(P)
                                          : phf_covers_core(P, rep.hidden.relevant_vars());
            if (!ok) throw DesignFailure("hash family failed verification");
        }
        lr = learn_reduced(n, s, r, teacher, std::move(P), std::move(A_q), std::move(B_q));
    }
    rep.wall_ms = elapsed_ms(t0);

    rep.recovered = std::move(lr.hypothesis);
    rep.raw_queries = lr.raw_queries;
    rep.dedup_queries = lr.dedup_queries;
    rep.transcript = std::move(lr.transcript);
    rep.baseline = cff_baseline(n, s, r);
    rep.ratio = double(rep.dedup_queries) / rep.baseline;
    if (config.check) rep.exact = check_recovery(rep.recovered, rep.hidden);
    return rep;
}

std::string run_record(const ExperimentConfig& config, const RunReport& report) {
    std::ostringstream out;
    out << "run algo=" << algo_name(config.algo) << " n=" << config.n << " s=" << config.s
        << " r=" << config.r << " delta=" << format_double(config.delta)
        << " seed=" << config.seed << " raw=" << report.raw_queries
        << " dedup=" << report.dedup_queries << " baseline=" << format_double(report.baseline)
        << " ratio=" << format_double(report.ratio)
        << " terms=" << report.recovered.term_count() << " exact=";
    if (report.exact.has_value())
        out << (*report.exact ? 1 : 0);
    else
        out << "na";
    out << '\n';
    return out.str();
}

FitResult fit_query_scaling(std::span<const uint32_t> ns, std::span<const uint64_t> queries) {
    if (ns.size() != queries.size() || ns.empty())
        throw InvalidArgument("fit_query_scaling needs matching nonempty inputs");
    double sxy1 = 0, sxx1 = 0, sxy2 = 0, sxx2 = 0;
    for (size_t i = 0; i < ns.size(); ++i) {
        const double x1 = std::log2(double(ns[i]));
        const double x2 = x1 * x1;
        const double y = double(queries[i]);
        sxy1 += x1 * y;
        sxx1 += x1 * x1;
        sxy2 += x2 * y;
        sxx2 += x2 * x2;
    }
    FitResult fit;
    fit.c_log = sxy1 / sxx1;
    fit.c_log2 = sxy2 / sxx2;
    for (size_t i = 0; i < ns.size(); ++i) {
        const double x1 = std::log2(double(ns[i]));
        const double y = double(queries[i]);
        fit.rss_log += (y - fit.c_log * x1) * (y - fit.c_log * x1);
        fit.rss_log2 += (y - fit.c_log2 * x1 * x1) * (y - fit.c_log2 * x1 * x1);
    }
    fit.linear_wins = fit.rss_log <= fit.rss_log2;
    return fit;
}

std::vector<BenchCell> bench_grid(uint32_t s, uint32_t r, std::span<const uint32_t> ns,
                                  std::span<const uint64_t> seeds, double delta,
                                  const std::string& cache_dir, std::span<const Algo> algos) {
    std::vector<BenchCell> cells;
    cells.reserve(algos.size() * ns.size() * seeds.size());
    for (const Algo algo : algos) {
        for (const uint64_t seed : seeds) {
            for (const uint32_t n : ns) {
                ExperimentConfig config;
                config.n = n;
                config.s = s;
                config.r = r;
                config.algo = algo;
                config.delta = delta;
                config.seed = seed;
                config.cache_dir = cache_dir;
                const RunReport rep = run_experiment(config);
                BenchCell cell;
                cell.n = n;
                cell.algo = algo;
                cell.seed = seed;
                cell.raw_queries = rep.raw_queries;
                cell.dedup_queries = rep.dedup_queries;
                cell.baseline = rep.baseline;
                cell.ratio = rep.ratio;
                cell.wall_ms = rep.wall_ms;
                cells.push_back(cell);
            }
        }
    }
    return cells;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

} // namespace hyperlearn
