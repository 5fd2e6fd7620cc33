#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hyperlearn/errors.hpp"
#include "hyperlearn/oracle.hpp"

using namespace hyperlearn;

namespace {

Mdnf sample_formula() {
    return Mdnf(6, {Monomial({1, 2}), Monomial({4})});
}

std::vector<Assignment> sample_batch() {
    return {Assignment::from_bits("110000"), Assignment::from_bits("100100"),
            Assignment::from_bits("010000"), Assignment::from_bits("000000"),
            Assignment::ones(6)};
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("answers are evaluations of the hidden formula") {
    Teacher t(sample_formula());
    const std::vector<Assignment> batch = sample_batch();
    const std::vector<uint8_t> answers = t.query_batch(batch);
    REQUIRE(answers.size() == batch.size());
    CHECK(answers == std::vector<uint8_t>{1, 1, 0, 0, 1});
    CHECK(t.batches_served() == 1);
    CHECK(t.queries_served() == 5);
    CHECK(t.sealed());
}

TEST_CASE("a strict teacher answers exactly one batch") {
    Teacher t(sample_formula());
    CHECK(t.strict());
    const std::vector<Assignment> batch = sample_batch();
    t.query_batch(batch);
    CHECK_THROWS_AS(t.query_batch(batch), NonAdaptivityViolation);
    CHECK_THROWS_AS(t.edge_detecting_query(std::vector<uint32_t>{4}), NonAdaptivityViolation);
    CHECK(t.batches_served() == 1);
}

TEST_CASE("a relaxed teacher keeps answering and answers are pure") {
    Teacher t(sample_formula(), false);
    std::vector<Assignment> batch = sample_batch();
    const std::vector<uint8_t> first = t.query_batch(batch);

    std::reverse(batch.begin(), batch.end());
    std::vector<uint8_t> reversed = t.query_batch(batch);
    std::reverse(reversed.begin(), reversed.end());
    CHECK(first == reversed); // same query, same answer, any order
    CHECK(t.batches_served() == 2);
    CHECK(t.queries_served() == 10);
}

TEST_CASE("the hidden formula is reduced on ingest") {
    // x1 | x1x2 collapses to x1, so the subsumed term can never matter
    Teacher verbose(Mdnf(3, {Monomial({1}), Monomial({1, 2})}), false);
    Teacher plain(Mdnf(3, {Monomial({1})}), false);
    for (uint64_t mask = 0; mask < 8; ++mask) {
        Assignment a(3);
        for (uint32_t i = 0; i < 3; ++i)
            if (mask & (1ull << i)) a.set(i + 1, true);
        const Assignment batch[1] = {a};
        CHECK(verbose.query_batch(batch) == plain.query_batch(batch));
    }
}

TEST_CASE("edge-detecting query is membership on the characteristic assignment") {
    Teacher t(sample_formula(), false);
    CHECK(t.edge_detecting_query(std::vector<uint32_t>{1, 2, 3}));  // contains edge {1,2}
    CHECK(t.edge_detecting_query(std::vector<uint32_t>{4}));        // the edge itself
    CHECK(!t.edge_detecting_query(std::vector<uint32_t>{1, 3, 5})); // no edge inside
    CHECK(!t.edge_detecting_query(std::vector<uint32_t>{}));
    CHECK(t.queries_served() == 4);
    CHECK(t.batches_served() == 4);
}

} // TEST_SUITE
