#pragma once

#include <cstdint>
#include <span>

#include "hyperlearn/designs.hpp"
#include "hyperlearn/learner_direct.hpp"

namespace hyperlearn {

// Substream tags for deriving the design seeds of a self-building run.
inline constexpr uint64_t kSeedPhf = 1;
inline constexpr uint64_t kSeedCffA = 2;
inline constexpr uint64_t kSeedCffB = 3;

// Working parameters of the projection route. d bounds the relevant-variable
// count, q is the compressed variable count. When q >= n the projection buys
// nothing and the learner runs the direct route over the original variables.
struct ReductionParams {
    uint32_t d = 0;
    uint32_t q = 0;
    bool projects = false;
};

ReductionParams reduction_params(uint32_t n, uint32_t s, uint32_t r);

// One-shot plan of the projection route: a direct plan over q variables,
// lifted through every function of the hash family, globally deduplicated.
struct ReducedPlan {
    uint32_t n = 0, s = 0, r = 1, q = 0, d = 0;
    HashFamily family;                          // (n, q, d+1) candidate PHF
    DirectPlan inner;                           // shared across all functions
    std::vector<Assignment> queries;            // lifted, first-use order
    std::vector<std::vector<uint32_t>> slices;  // [func][inner index] -> flat index

    uint64_t raw_count() const {
        return uint64_t(family.funcs.size()) * inner.queries.size();
    }
};

ReducedPlan plan_reduced(uint32_t n, uint32_t s, uint32_t r, HashFamily P,
                         DesignMatrix A_q, DesignMatrix B_q);

// Intermediate decode state, exposed for property tests.
struct ReducedDecodeDetail {
    std::vector<Mdnf> projections;               // learned image per function
    std::vector<std::vector<uint32_t>> relevant; // its relevant variables
    uint32_t width = 0;                          // max relevant-set size
    std::vector<uint32_t> survivors;             // variables not eliminated
    uint32_t chosen = 0;                         // first function of full width
    Mdnf result{0};
};

ReducedDecodeDetail decode_reduced_detail(const ReducedPlan& plan,
                                          std::span<const uint8_t> answers);

// Learns every projection, keeps the variables consistent with all widest
// projections, and renames the widest projection back through the unique
// surviving preimages. Throws PhfFailure when a preimage is not unique,
// which can only happen if the family misses a subset it should separate.
Mdnf decode_reduced(const ReducedPlan& plan, std::span<const uint8_t> answers);

// Self-building variant: derives design seeds from seed, builds the hash
// family and inner designs, asks one strict batch, decodes. Falls back to
// the direct route when reduction_params says the projection buys nothing.
LearnResult learn_reduced(uint32_t n, uint32_t s, uint32_t r, Teacher& teacher,
                          double delta, uint64_t seed);

// Prebuilt-design variant.
LearnResult learn_reduced(uint32_t n, uint32_t s, uint32_t r, Teacher& teacher,
                          HashFamily P, DesignMatrix A_q, DesignMatrix B_q);

} // namespace hyperlearn
