#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlearn/designs.hpp"
#include "hyperlearn/errors.hpp"
#include "hyperlearn/formats.hpp"
#include "hyperlearn/harness.hpp"
#include "hyperlearn/rng.hpp"

using namespace hyperlearn;

namespace {

// Exit codes: 0 ok, 2 design failure, 3 recovery mismatch, 4 bad input.
constexpr int kExitOk = 0;
constexpr int kExitDesign = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBadInput = 4;

int map_exception(const std::exception& e) {
    std::fprintf(stderr, "hyperlearn: %s\n", e.what());
    if (dynamic_cast<const DesignFailure*>(&e)) return kExitDesign;
    if (dynamic_cast<const PhfFailure*>(&e)) return kExitDesign;
    if (dynamic_cast<const NonAdaptivityViolation*>(&e)) return kExitDesign;
    if (dynamic_cast<const ParseError*>(&e)) return kExitBadInput;
    if (dynamic_cast<const GuardExceeded*>(&e)) return kExitBadInput;
    if (dynamic_cast<const InvalidArgument*>(&e)) return kExitBadInput;
    if (dynamic_cast<const DimensionMismatch*>(&e)) return kExitBadInput;
    return 1;
}

struct GenArgs {
    uint32_t n = 0, s = 1, r = 1;
    uint64_t seed = 0;
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    const Mdnf f = gen_instance(args.n, args.s, args.r, args.seed);
    const std::string text = mdnf_to_string(f);
    if (args.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        save_text_file(args.out, text);
        std::printf("gen n=%u s=%u r=%u seed=%llu terms=%zu out=%s\n", args.n, args.s, args.r,
                    static_cast<unsigned long long>(args.seed), f.term_count(), args.out.c_str());
    }
    return kExitOk;
}

struct DesignArgs {
    std::string kind;
    uint32_t n = 0, s = 2, r = 2;
    uint32_t q = 0, d = 0; // phf only; derived from s, r when left 0
    double delta = 0.01;
    uint64_t seed = 0;
    bool verify = false;
    std::string out;
};

int cmd_design(const DesignArgs& args) {
    if (args.kind == "cff") {
        DesignMatrix A = random_cff(args.n, args.s, args.r, args.delta, args.seed);
        bool ok = true;
        if (args.verify) ok = verify_cff(A);
        std::ostringstream text;
        write_cff(text, A);
        if (args.out.empty()) {
            std::fputs(text.str().c_str(), stdout);
        } else {
            save_text_file(args.out, text.str());
            const SizeReport rep = size_report(A);
            std::printf("design kind=cff n=%u s=%u r=%u delta=%s seed=%llu rows=%llu ideal=%s "
                        "bound=%s verified=%d out=%s\n",
                        args.n, args.s, args.r, format_double(args.delta).c_str(),
                        static_cast<unsigned long long>(args.seed),
                        static_cast<unsigned long long>(rep.achieved_rows),
                        format_double(rep.ideal_rows).c_str(),
                        format_double(rep.lower_bound).c_str(), static_cast<int>(A.state),
                        args.out.c_str());
        }
        return ok ? kExitOk : kExitDesign;
    }

    // phf
    uint32_t d = args.d;
    uint32_t q = args.q;
    if (d == 0) {
        const uint64_t rs = uint64_t(args.r) * args.s;
        d = static_cast<uint32_t>(std::min<uint64_t>(rs, args.n)) + 1;
    }
    if (q == 0) {
        const uint64_t rs = uint64_t(args.r) * args.s;
        q = static_cast<uint32_t>(std::max<uint64_t>(3 * rs * rs, 2ull * d * d));
    }
    HashFamily P = build_phf_all_subsets(args.n, q, d, args.delta, args.seed);
    bool ok = true;
    if (args.verify) ok = verify_phf(P);
    std::ostringstream text;
    write_phf(text, P);
    if (args.out.empty()) {
        std::fputs(text.str().c_str(), stdout);
    } else {
        save_text_file(args.out, text.str());
        std::printf("design kind=phf n=%u q=%u d=%u delta=%s seed=%llu size=%zu target=%s "
                    "verified=%d out=%s\n",
                    args.n, q, d, format_double(args.delta).c_str(),
                    static_cast<unsigned long long>(args.seed), P.funcs.size(),
                    format_double(phf_classical_target(args.n, q, d)).c_str(), ok ? 1 : 0,
                    args.out.c_str());
    }
    return ok ? kExitOk : kExitDesign;
}

int cmd_verify(const std::string& path) {
    std::string text;
    try {
        text = load_text_file(path);
        if (text.rfind("cff ", 0) == 0) {
            std::istringstream in(text);
            DesignMatrix A = read_cff(in);
            const bool ok = verify_cff(A);
            std::printf("verify kind=cff file=%s n=%u s=%u r=%u rows=%zu verified=%d\n",
                        path.c_str(), A.n, A.s, A.r, A.rows.size(), ok ? 1 : 0);
            return ok ? kExitOk : kExitDesign;
        }
        if (text.rfind("phf ", 0) == 0) {
            std::istringstream in(text);
            const HashFamily P = read_phf(in);
            const bool ok = verify_phf(P);
            std::printf("verify kind=phf file=%s n=%u q=%u d=%u size=%zu verified=%d\n",
                        path.c_str(), P.n, P.q, P.d, P.funcs.size(), ok ? 1 : 0);
            return ok ? kExitOk : kExitDesign;
        }
        throw ParseError("unrecognized design header");
    } catch (const GuardExceeded& e) {
        std::fprintf(stderr, "hyperlearn: %s\n", e.what());
        return kExitBadInput;
    } catch (const Error& e) {
        // A design file that cannot be parsed is a failed design.
        std::fprintf(stderr, "hyperlearn: %s\n", e.what());
        return kExitDesign;
    }
}

struct LearnArgs {
    ExperimentConfig config;
    std::string out;
    std::string transcript_out;
};

int cmd_learn(const LearnArgs& args) {
    const RunReport rep = run_experiment(args.config);
    std::fputs(run_record(args.config, rep).c_str(), stdout);
    std::fprintf(stderr, "# learn wall_ms=%.3f\n", rep.wall_ms);
    if (!args.out.empty()) save_text_file(args.out, mdnf_to_string(rep.recovered));
    if (!args.transcript_out.empty()) {
        std::ostringstream text;
        write_transcript(text, rep.transcript);
        save_text_file(args.transcript_out, text.str());
    }
    if (rep.exact.has_value() && !*rep.exact) return kExitMismatch;
    return kExitOk;
}

struct BenchArgs {
    uint32_t s = 2, r = 2;
    double delta = 0.01;
    std::vector<uint32_t> ns{256, 1024, 4096, 16384};
    std::vector<uint64_t> seeds{0, 1, 2, 3};
    std::string algo; // empty: both
    std::string cache_dir;
};

int cmd_bench(const BenchArgs& args) {
    std::vector<Algo> algos;
    if (args.algo.empty() || args.algo == "direct") algos.push_back(Algo::direct);
    if (args.algo.empty() || args.algo == "reduced") algos.push_back(Algo::reduced);
    if (algos.empty()) throw InvalidArgument("--algo must be direct or reduced");

    const std::vector<BenchCell> cells =
        bench_grid(args.s, args.r, args.ns, args.seeds, args.delta, args.cache_dir, algos);
    for (const BenchCell& cell : cells) {
        std::printf("bench algo=%s n=%u s=%u r=%u seed=%llu raw=%llu dedup=%llu baseline=%s "
                    "ratio=%s\n",
                    algo_name(cell.algo), cell.n, args.s, args.r,
                    static_cast<unsigned long long>(cell.seed),
                    static_cast<unsigned long long>(cell.raw_queries),
                    static_cast<unsigned long long>(cell.dedup_queries),
                    format_double(cell.baseline).c_str(), format_double(cell.ratio).c_str());
        std::fprintf(stderr, "# bench algo=%s n=%u seed=%llu wall_ms=%.3f\n",
                     algo_name(cell.algo), cell.n,
                     static_cast<unsigned long long>(cell.seed), cell.wall_ms);
    }

    // Per (algo, seed): fit dedup counts against c*log2(n) and c*(log2 n)^2.
    for (const Algo algo : algos) {
        for (const uint64_t seed : args.seeds) {
            std::vector<uint32_t> ns;
            std::vector<uint64_t> ys;
            for (const BenchCell& cell : cells)
                if (cell.algo == algo && cell.seed == seed) {
                    ns.push_back(cell.n);
                    ys.push_back(cell.dedup_queries);
                }
            if (ns.size() < 2) continue;
            const FitResult fit = fit_query_scaling(ns, ys);
            std::printf("fit algo=%s seed=%llu c_log=%s rss_log=%s c_log2=%s rss_log2=%s "
                        "winner=%s\n",
                        algo_name(algo), static_cast<unsigned long long>(seed),
                        format_double(fit.c_log).c_str(), format_double(fit.rss_log).c_str(),
                        format_double(fit.c_log2).c_str(), format_double(fit.rss_log2).c_str(),
                        fit.linear_wins ? "log" : "log2");
        }
    }
    return kExitOk;
}

int cmd_replay(const std::string& transcript_path, const std::string& target_path) {
    std::istringstream tin(load_text_file(transcript_path));
    const Transcript t = read_transcript(tin);
    const Mdnf target = mdnf_from_string(load_text_file(target_path));
    if (target.var_count() != t.n)
        throw DimensionMismatch("target and transcript variable counts differ");
    uint64_t mismatches = 0;
    for (size_t i = 0; i < t.queries.size(); ++i)
        if (target.eval(t.queries[i]) != (t.answers[i] != 0)) ++mismatches;
    std::printf("replay n=%u k=%zu mismatches=%llu\n", t.n, t.queries.size(),
                static_cast<unsigned long long>(mismatches));
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-adaptive exact learner for sparse monotone DNF / hypergraphs"};
    app.require_subcommand(1);

    const std::map<std::string, Algo> algo_map{{"direct", Algo::direct},
                                               {"reduced", Algo::reduced}};

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a random reduced instance");
    gen->add_option("--n", gen_args.n, "variable count")->required();
    gen->add_option("--s", gen_args.s, "term count");
    gen->add_option("--r", gen_args.r, "max rank");
    gen->add_option("--seed", gen_args.seed, "seed");
    gen->add_option("--out", gen_args.out, "output path (default stdout)");

    DesignArgs design_args;
    CLI::App* design = app.add_subcommand("design", "construct a design");
    design->add_option("kind", design_args.kind, "cff or phf")
        ->required()
        ->check(CLI::IsMember({"cff", "phf"}));
    design->add_option("--n", design_args.n, "variable count")->required();
    design->add_option("--s", design_args.s, "s parameter");
    design->add_option("--r", design_args.r, "r parameter");
    design->add_option("--q", design_args.q, "phf range size (derived from s,r when omitted)");
    design->add_option("--d", design_args.d, "phf subset size (derived from s,r when omitted)");
    design->add_option("--delta", design_args.delta, "failure budget");
    design->add_option("--seed", design_args.seed, "seed");
    design->add_flag("--verify", design_args.verify, "verify after construction");
    design->add_option("--out", design_args.out, "output path (default stdout)");

    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "verify a design file");
    verify->add_option("--design", verify_path, "design file path")->required();

    LearnArgs learn_args;
    CLI::App* learn = app.add_subcommand("learn", "run a learning experiment");
    learn->add_option("--n", learn_args.config.n, "variable count")->required();
    learn->add_option("--s", learn_args.config.s, "term budget")->required();
    learn->add_option("--r", learn_args.config.r, "rank budget")->required();
    learn->add_option("--algo", learn_args.config.algo, "direct or reduced")
        ->transform(CLI::CheckedTransformer(algo_map, CLI::ignore_case));
    learn->add_option("--delta", learn_args.config.delta, "design failure budget");
    learn->add_option("--seed", learn_args.config.seed, "seed");
    learn->add_flag("--check", learn_args.config.check, "compare against the hidden instance");
    learn->add_flag("--verify", learn_args.config.verify_designs, "verify designs before use");
    learn->add_option("--target", learn_args.config.target_path,
                      "hidden instance file (default: generated from seed)");
    learn->add_option("--cache", learn_args.config.cache_dir, "design cache directory");
    learn->add_option("--out", learn_args.out, "write the recovered instance here");
    learn->add_option("--transcript", learn_args.transcript_out, "write the transcript here");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "query-count scaling grid");
    bench->add_option("--s", bench_args.s, "term budget");
    bench->add_option("--r", bench_args.r, "rank budget");
    bench->add_option("--delta", bench_args.delta, "design failure budget");
    bench->add_option("--n", bench_args.ns, "grid variable counts");
    bench->add_option("--seeds", bench_args.seeds, "grid seeds");
    bench->add_option("--algo", bench_args.algo, "restrict to one algorithm")
        ->check(CLI::IsMember({"direct", "reduced"}));
    bench->add_option("--cache", bench_args.cache_dir, "design cache directory");

    std::string replay_transcript, replay_target;
    CLI::App* replay = app.add_subcommand("replay", "re-check a transcript against an instance");
    replay->add_option("--transcript", replay_transcript, "transcript file")->required();
    replay->add_option("--target", replay_target, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*gen) return cmd_gen(gen_args);
        if (*design) return cmd_design(design_args);
        if (*verify) return cmd_verify(verify_path);
        if (*learn) return cmd_learn(learn_args);
        if (*bench) return cmd_bench(bench_args);
        if (*replay) return cmd_replay(replay_transcript, replay_target);
    } catch (const std::exception& e) {
        return map_exception(e);
    }
    return kExitOk;
}
