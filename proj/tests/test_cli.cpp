#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "hyperlearn/formats.hpp"
#include "hyperlearn/mdnf.hpp"

using namespace hyperlearn;
using namespace testutil;

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen writes a parsable instance and is deterministic") {
    const std::string cmd = cli_path() + " gen --n 12 --s 3 --r 2 --seed 4";
    const CommandResult a = run_command(cmd);
    REQUIRE(a.exit_code == 0);
    const Mdnf f = mdnf_from_string(a.out);
    CHECK(f.var_count() == 12);
    CHECK(f.term_count() == 3);
    CHECK(f.is_reduced());
    CHECK(run_command(cmd).out == a.out);

    TempDir dir("cli-gen");
    const std::string out = dir.path() + "/inst.txt";
    const CommandResult b =
        run_command(cli_path() + " gen --n 12 --s 3 --r 2 --seed 4 --out " + quoted(out));
    REQUIRE(b.exit_code == 0);
    CHECK(b.out == "gen n=12 s=3 r=2 seed=4 terms=3 out=" + out + "\n");
    CHECK(mdnf_from_string(load_text_file(out)) == f);
}

TEST_CASE("design cff and the verify subcommand") {
    TempDir dir("cli-design");
    const std::string out = dir.path() + "/cff.txt";
    const CommandResult made = run_command(cli_path() + " design cff --n 12 --s 1 --r 2 --seed 1 " +
                                            "--verify --out " + quoted(out));
    REQUIRE(made.exit_code == 0);
    CHECK(made.out.rfind("design kind=cff n=12 s=1 r=2 delta=0.01 seed=1 rows=70 ", 0) == 0);
    CHECK(made.out.find(" verified=1 ") != std::string::npos);

    const CommandResult ok = run_command(cli_path() + " verify --design " + quoted(out));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("verified=1") != std::string::npos);

    // corrupted file: a design that cannot be parsed counts as failed
    const std::string bad = dir.path() + "/bad.txt";
    save_text_file(bad, "cff n=12 s=1 r=2 m=2 verified=0\n0101\n");
    CHECK(run_command(cli_path() + " verify --design " + quoted(bad)).exit_code == 2);
    const std::string junk = dir.path() + "/junk.txt";
    save_text_file(junk, "not a design\n");
    CHECK(run_command(cli_path() + " verify --design " + quoted(junk)).exit_code == 2);
    CHECK(run_command(cli_path() + " verify --design " + quoted(dir.path() + "/absent.txt"))
              .exit_code == 2);

    // a matrix that fails the cover-free check: single zero row
    const std::string zero = dir.path() + "/zero.txt";
    save_text_file(zero, "cff n=6 s=1 r=2 m=1 verified=0\n000000\n");
    const CommandResult failed = run_command(cli_path() + " verify --design " + quoted(zero));
    CHECK(failed.exit_code == 2);
    CHECK(failed.out.find("verified=0") != std::string::npos);
}

TEST_CASE("design phf to stdout and with derived parameters") {
    const CommandResult raw = run_command(cli_path() + " design phf --n 30 --seed 2");
    REQUIRE(raw.exit_code == 0);
    std::istringstream in(raw.out);
    const HashFamily P = read_phf(in);
    CHECK(P.n == 30);
    CHECK(P.q == 50); // derived: d = 2*2+1 = 5, q = max(3*16, 2*25)
    CHECK(P.d == 5);

    TempDir dir("cli-phf");
    const std::string out = dir.path() + "/phf.txt";
    const CommandResult rec = run_command(cli_path() + " design phf --n 30 --seed 2 --verify " +
                                          "--out " + quoted(out));
    REQUIRE(rec.exit_code == 0);
    CHECK(rec.out.rfind("design kind=phf n=30 q=50 d=5 delta=0.01 seed=2 size=", 0) == 0);
    CHECK(rec.out.find(" verified=1 ") != std::string::npos);
    CHECK(run_command(cli_path() + " verify --design " + quoted(out)).exit_code == 0);

    // q below the builder's floor
    CHECK(run_command(cli_path() + " design phf --n 30 --q 10 --d 3").exit_code == 4);
}

TEST_CASE("learn with --check reports an exact recovery") {
    TempDir dir("cli-learn");
    const std::string cmd = cli_path() + " learn --n 30 --s 2 --r 2 --seed 6 --check --cache " +
                            quoted(dir.path());
    const CommandResult a = run_command(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out.rfind("run algo=direct n=30 s=2 r=2 delta=0.01 seed=6 ", 0) == 0);
    CHECK(a.out.find("exact=1") != std::string::npos);
    // second run hits the design cache and must produce identical bytes
    CHECK(run_command(cmd).out == a.out);

    const CommandResult b = run_command(cli_path() +
                                        " learn --n 200 --s 2 --r 2 --algo REDUCED --seed 6 "
                                        "--check --verify --cache " +
                                        quoted(dir.path()));
    REQUIRE(b.exit_code == 0);
    CHECK(b.out.find("algo=reduced") != std::string::npos);
    CHECK(b.out.find("exact=1") != std::string::npos);
}

TEST_CASE("learn against a target file, recovered output and transcript replay") {
    TempDir dir("cli-replay");
    const std::string target = dir.path() + "/target.txt";
    const std::string other = dir.path() + "/other.txt";
    const std::string recovered = dir.path() + "/recovered.txt";
    const std::string transcript = dir.path() + "/transcript.txt";
    REQUIRE(run_command(cli_path() + " gen --n 12 --s 2 --r 2 --seed 9 --out " + quoted(target))
                .exit_code == 0);
    REQUIRE(run_command(cli_path() + " gen --n 12 --s 2 --r 2 --seed 10 --out " + quoted(other))
                .exit_code == 0);

    const CommandResult learned =
        run_command(cli_path() + " learn --n 12 --s 2 --r 2 --check --cache " + quoted(dir.path()) +
                    " --target " + quoted(target) + " --out " + quoted(recovered) +
                    " --transcript " + quoted(transcript));
    REQUIRE(learned.exit_code == 0);
    CHECK(mdnf_from_string(load_text_file(recovered)) ==
          mdnf_from_string(load_text_file(target)).reduced());

    const CommandResult match = run_command(cli_path() + " replay --transcript " +
                                            quoted(transcript) + " --target " + quoted(target));
    CHECK(match.exit_code == 0);
    CHECK(match.out.find("mismatches=0") != std::string::npos);

    const CommandResult differ = run_command(cli_path() + " replay --transcript " +
                                             quoted(transcript) + " --target " + quoted(other));
    CHECK(differ.exit_code == 3);

    const std::string narrow = dir.path() + "/narrow.txt";
    REQUIRE(run_command(cli_path() + " gen --n 8 --s 2 --r 2 --seed 9 --out " + quoted(narrow))
                .exit_code == 0);
    CHECK(run_command(cli_path() + " replay --transcript " + quoted(transcript) + " --target " +
                      quoted(narrow))
              .exit_code == 4);
}

TEST_CASE("malformed invocations exit with the bad-input code") {
    CHECK(run_command(cli_path() + " gen --n 5 --bogus 3").exit_code == 4);
    CHECK(run_command(cli_path() + " frobnicate").exit_code == 4);
    CHECK(run_command(cli_path()).exit_code == 4);
    CHECK(run_command(cli_path() + " gen").exit_code == 4); // --n required
    CHECK(run_command(cli_path() + " learn --n 0 --s 1 --r 1").exit_code == 4);
    CHECK(run_command(cli_path() + " learn --n 4 --s 1 --r 1 --algo sideways").exit_code == 4);
    CHECK(run_command(cli_path() + " design wavelet --n 4").exit_code == 4);
    CHECK(run_command(cli_path() + " --help").exit_code == 0);
}

TEST_CASE("cache directory comes from the environment when not given") {
    TempDir dir("cli-env-cache");
    const CommandResult r = run_command("HYPERLEARN_CACHE=" + quoted(dir.path()) + " " +
                                        cli_path() + " learn --n 16 --s 1 --r 2 --seed 2 --check");
    REQUIRE(r.exit_code == 0);
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir.path())) {
        (void)entry;
        ++files;
    }
    CHECK(files > 0);
}

TEST_CASE("kernel override changes nothing observable") {
    TempDir dir("cli-kernel");
    const std::string tail = cli_path() + " learn --n 40 --s 2 --r 2 --seed 3 --check --cache " +
                             quoted(dir.path());
    const CommandResult plain = run_command(tail);
    REQUIRE(plain.exit_code == 0);
    const CommandResult scalar = run_command("HYPERLEARN_KERNEL=scalar " + tail);
    CHECK(scalar.exit_code == 0);
    CHECK(scalar.out == plain.out);
    const CommandResult bogus = run_command("HYPERLEARN_KERNEL=quantum " + tail);
    CHECK(bogus.exit_code == 0);
    CHECK(bogus.out == plain.out);
}

} // TEST_SUITE
