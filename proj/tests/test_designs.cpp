#include <cmath>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "hyperlearn/designs.hpp"
#include "hyperlearn/errors.hpp"
#include "hyperlearn/formats.hpp"
#include "hyperlearn/rng.hpp"

using namespace hyperlearn;
using namespace testutil;

namespace {

// Exact small binomial, independent of the library's log-gamma route.
double exact_binom(uint32_t n, uint32_t k) {
    double b = 1.0;
    for (uint32_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

uint64_t independent_row_count(uint32_t n, uint32_t s, uint32_t r, double delta) {
    const double p = double(r) / (s + r);
    const double hit = std::pow(p, r) * std::pow(1.0 - p, s);
    const double events =
        std::log(exact_binom(n, s + r)) + std::log(exact_binom(s + r, s)) - std::log(delta);
    return static_cast<uint64_t>(std::ceil(events / -std::log1p(-hit)));
}

} // namespace

TEST_SUITE("designs") {

TEST_CASE("n_s_r closed-form values") {
    CHECK(n_s_r(1, 1) == doctest::Approx(4.0));
    CHECK(n_s_r(2, 2) == doctest::Approx(24.0 / std::log2(6.0)).epsilon(1e-12));
    CHECK(n_s_r(2, 2) == doctest::Approx(9.283).epsilon(1e-3));
    CHECK(n_s_r(3, 1) == doctest::Approx(8.0));
    CHECK(std::isinf(n_s_r(0, 2)));
    CHECK(n_s_r(100, 7) > 0);
    CHECK_THROWS_AS(n_s_r(1, 0), InvalidArgument);
    CHECK_THROWS_AS(n_s_r(0, 1), InvalidArgument);
    CHECK(cff_baseline(16, 1, 1) == doctest::Approx(16.0));
}

TEST_CASE("row count matches an independent evaluation of the union bound") {
    CHECK(cff_row_count(20, 3, 2, 0.01) == independent_row_count(20, 3, 2, 0.01));
    CHECK(cff_row_count(20, 3, 2, 0.01) == 471);
    CHECK(cff_row_count(12, 1, 2, 0.01) == independent_row_count(12, 1, 2, 0.01));
    CHECK(cff_row_count(12, 1, 2, 0.01) == 70);
    CHECK(cff_row_count(50, 1, 2, 0.01) == independent_row_count(50, 1, 2, 0.01));
    CHECK_THROWS_AS(cff_row_count(3, 3, 2, 0.01), InvalidArgument); // n < s + r
    CHECK_THROWS_AS(cff_row_count(20, 3, 2, 0.0), InvalidArgument);
    CHECK_THROWS_AS(cff_row_count(20, 3, 2, 1.0), InvalidArgument);
    CHECK_THROWS_AS(cff_row_count(100, 30, 30, 0.01), GuardExceeded);
}

TEST_CASE("random_cff shape and determinism") {
    const DesignMatrix A = random_cff(20, 3, 2, 0.01, 5);
    CHECK(A.rows.size() == 471);
    CHECK(A.n == 20);
    CHECK(A.state == VerifyState::unverified);
    for (const Assignment& row : A.rows) CHECK(row.var_count() == 20);

    const DesignMatrix B = random_cff(20, 3, 2, 0.01, 5);
    std::ostringstream sa, sb;
    write_cff(sa, A);
    write_cff(sb, B);
    CHECK(sa.str() == sb.str()); // same seed, byte-identical

    const DesignMatrix C = random_cff(20, 3, 2, 0.01, 6);
    bool same = true;
    for (size_t i = 0; i < A.rows.size() && same; ++i) same = A.rows[i] == C.rows[i];
    CHECK(!same);

    const DesignMatrix Z = random_cff(9, 0, 2, 0.01, 0);
    REQUIRE(Z.rows.size() == 1);
    CHECK(Z.rows[0].all());
}

TEST_CASE("verify_cff fixed examples") {
    DesignMatrix cube = cube_design(3, 1, 1);
    CHECK(verify_cff(cube));
    CHECK(cube.state == VerifyState::verified);

    DesignMatrix zero{3, 1, 1, {Assignment::from_bits("000")}, VerifyState::unverified};
    CHECK(!verify_cff(zero));
    CHECK(zero.state == VerifyState::failed);

    DesignMatrix identity{3, 2, 1,
                          {Assignment::from_bits("100"), Assignment::from_bits("010"),
                           Assignment::from_bits("001")},
                          VerifyState::unverified};
    CHECK(verify_cff(identity));

    DesignMatrix allones{4, 0, 2, {Assignment::ones(4)}, VerifyState::unverified};
    CHECK(verify_cff(allones));

    DesignMatrix small{2, 2, 1, {}, VerifyState::unverified};
    CHECK_THROWS_AS(verify_cff(small), InvalidArgument); // n < s + r
    DesignMatrix wide{40, 14, 14, {}, VerifyState::unverified};
    CHECK_THROWS_AS(verify_cff(wide), GuardExceeded);
}

TEST_CASE("verify_cff agrees with the naive checker") {
    Rng rng(404);
    int verified = 0;
    for (int rep = 0; rep < 30; ++rep) {
        DesignMatrix A{10, 2, 2, {}, VerifyState::unverified};
        // sparse draws are sure to fail the property, dense ones almost
        // surely satisfy it; both verdicts get exercised
        const uint32_t m = rep < 24 ? 5 + static_cast<uint32_t>(rng.below(60))
                                    : 150 + static_cast<uint32_t>(rng.below(40));
        for (uint32_t j = 0; j < m; ++j) {
            Assignment row(10);
            for (uint32_t i = 1; i <= 10; ++i) row.set(i, rng.chance(1, 2));
            A.rows.push_back(std::move(row));
        }
        const bool naive = naive_cff_check(A);
        CHECK(verify_cff(A) == naive);
        verified += naive;
    }
    CHECK(verified > 0); // the sample hits both verdicts
    CHECK(verified < 30);
}

TEST_CASE("adding rows preserves a verified design, deleting may not") {
    DesignMatrix A = verified_cff(12, 1, 2, 0.01, 99);
    DesignMatrix extended = A;
    extended.rows.push_back(Assignment::ones(12));
    extended.rows.push_back(Assignment::zeros(12));
    CHECK(verify_cff(extended));

    DesignMatrix clipped = A;
    clipped.rows.resize(2);
    verify_cff(clipped); // either verdict is legal; it must not throw
    CHECK((clipped.state == VerifyState::verified || clipped.state == VerifyState::failed));
}

TEST_CASE("size_report") {
    DesignMatrix A = random_cff(20, 2, 2, 0.01, 1);
    const SizeReport rep = size_report(A);
    CHECK(rep.achieved_rows == A.rows.size());
    CHECK(rep.ideal_rows == doctest::Approx(n_s_r(2, 2)));
    CHECK(rep.lower_bound == doctest::Approx(n_s_r(2, 2) * std::log2(20.0)));
    CHECK(rep.ideal_rows > 0);

    const DesignMatrix Z = random_cff(9, 0, 2, 0.01, 0);
    const SizeReport zrep = size_report(Z);
    CHECK(zrep.achieved_rows == 1);
}

TEST_CASE("phf probability and family size") {
    CHECK(phf_collision_free_prob(12, 3) == doctest::Approx(55.0 / 72.0).epsilon(1e-12));
    CHECK(phf_collision_free_prob(4, 2) == doctest::Approx(0.75));
    CHECK(phf_collision_free_prob(7, 1) == doctest::Approx(1.0));

    CHECK(phf_family_size(4, 2, 1.0 / 16.0) == 2);
    CHECK(phf_family_size(10, 3, 0.1) ==
          static_cast<uint64_t>(
              std::ceil(std::log(10.0) / -std::log1p(-phf_collision_free_prob(10, 3)))));
    CHECK(phf_family_size(100, 1, 0.5) == 1);
    CHECK_THROWS_AS(phf_family_size(3, 3, 0.1), InvalidArgument); // q <= d(d-1)/2
}

TEST_CASE("random_phf shape and determinism") {
    const HashFamily P = random_phf(30, 10, 3, 0.1, 7);
    CHECK(P.funcs.size() == phf_family_size(10, 3, 0.1));
    for (const auto& func : P.funcs) {
        CHECK(func.size() == 30);
        for (uint32_t img : func) {
            CHECK(img >= 1);
            CHECK(img <= 10);
        }
    }
    const HashFamily Q = random_phf(30, 10, 3, 0.1, 7);
    CHECK(P.funcs == Q.funcs);
    CHECK_THROWS_AS(random_phf(2, 10, 3, 0.1, 7), InvalidArgument); // d > n
}

TEST_CASE("build_phf_all_subsets verifies when feasible") {
    const HashFamily P = build_phf_all_subsets(6, 9, 2, 0.1, 1);
    CHECK(verify_phf(P));
    CHECK(P.funcs.size() <= 3 * phf_classical_target(6, 9, 2));

    const HashFamily single = build_phf_all_subsets(8, 8, 2, 0.1, 3);
    CHECK(verify_phf(single));

    const HashFamily deg = build_phf_all_subsets(5, 2, 1, 0.1, 0);
    CHECK(deg.funcs.size() == 1);
    CHECK(verify_phf(deg));

    CHECK_THROWS_AS(build_phf_all_subsets(6, 7, 2, 0.1, 1), InvalidArgument); // q < 2d^2
}

TEST_CASE("verify_phf fixed examples") {
    HashFamily ident{5, 5, 5, {{1, 2, 3, 4, 5}}};
    CHECK(verify_phf(ident));

    HashFamily constant{5, 5, 2, {{3, 3, 3, 3, 3}}};
    CHECK(!verify_phf(constant));

    HashFamily wide{5000, 100, 6, {}};
    CHECK_THROWS_AS(verify_phf(wide), GuardExceeded);
}

TEST_CASE("phf_covers_core checks the decoder's needs") {
    const HashFamily P = build_phf_all_subsets(10, 8, 2, 0.1, 2);
    // verified family: injective somewhere on every pair, so every
    // single-variable core extends
    CHECK(phf_covers_core(P, std::vector<uint32_t>{4}));

    HashFamily constant{10, 8, 2, {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}};
    CHECK(!phf_covers_core(constant, std::vector<uint32_t>{4}));
    CHECK_THROWS_AS(phf_covers_core(P, std::vector<uint32_t>{11}), InvalidArgument);
}

TEST_CASE("hash_injective_on") {
    const std::vector<uint32_t> func = {1, 2, 1, 3};
    CHECK(hash_injective_on(func, std::vector<uint32_t>{1, 2, 4}));
    CHECK(!hash_injective_on(func, std::vector<uint32_t>{1, 3}));
}

TEST_CASE("phf_classical_target") {
    CHECK(phf_classical_target(6, 9, 2) ==
          doctest::Approx(4.0 * std::log2(6.0) / std::log2(9.0 / 4.0)));
    CHECK_THROWS_AS(phf_classical_target(6, 4, 2), InvalidArgument);
}

} // TEST_SUITE
