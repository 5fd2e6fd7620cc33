#pragma once

#include <cstdint>
#include <span>

#include "hyperlearn/designs.hpp"
#include "hyperlearn/mdnf.hpp"
#include "hyperlearn/oracle.hpp"

namespace hyperlearn {

// One-shot query plan: the conjunction a & b of every row pair, a from the
// singleton-side family A, b from the (s-1)-side family B, deduplicated.
struct DirectPlan {
    uint32_t n = 0;
    uint32_t s = 0;
    uint32_t r = 1;
    DesignMatrix a_design;
    DesignMatrix b_design;
    std::vector<Assignment> queries;     // deduplicated, first-use order
    std::vector<uint32_t> pair_to_query; // |A| x |B|, a-major

    uint64_t raw_count() const {
        return uint64_t(a_design.rows.size()) * b_design.rows.size();
    }
    uint32_t query_index(uint32_t a_row, uint32_t b_row) const {
        return pair_to_query[uint64_t(a_row) * b_design.rows.size() + b_row];
    }
};

// A must be an (n,(1,r)) design and B an (n,(s-1,r)) design. Verified-state
// "failed" is rejected; unverified designs are accepted as-is.
DirectPlan plan_direct(uint32_t n, uint32_t s, uint32_t r, DesignMatrix A, DesignMatrix B);

// Per-b evidence before pruning: forced holds the variables set in every
// positively answered a & b for this b. With no positive answer forced stays
// the full variable set and evidenced is false.
struct DirectCandidate {
    uint32_t b_row = 0;
    Assignment forced;
    bool evidenced = false;
};

std::vector<DirectCandidate> direct_candidates(const DirectPlan& plan,
                                               std::span<const uint8_t> answers);

// Turns answers into the reduced hypothesis: drops no-information candidates,
// deduplicates, and removes candidates properly contained in another (the
// kept maxima are exactly the true terms when the designs are genuine).
Mdnf decode_direct(const DirectPlan& plan, std::span<const uint8_t> answers);

struct LearnResult {
    Mdnf hypothesis{0};
    Transcript transcript;
    uint64_t raw_queries = 0;
    uint64_t dedup_queries = 0;
};

// Plans, asks the single batch, decodes.
LearnResult learn_direct(uint32_t n, uint32_t s, uint32_t r, Teacher& teacher,
                         DesignMatrix A, DesignMatrix B);

} // namespace hyperlearn
