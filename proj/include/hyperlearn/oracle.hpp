#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlearn/mdnf.hpp"

namespace hyperlearn {

// Record of everything a learner asked and was told, sufficient to re-run
// the decode offline.
struct Transcript {
    uint32_t n = 0;
    std::vector<Assignment> queries;
    std::vector<uint8_t> answers;
    uint64_t batches = 0;
};

// Membership oracle for a hidden formula. A strict teacher answers exactly
// one batch and then refuses further queries, which is how non-adaptivity
// is enforced end to end. The hidden formula is reduced on ingest.
class Teacher {
public:
    explicit Teacher(Mdnf hidden, bool strict = true);

    std::vector<uint8_t> query_batch(std::span<const Assignment> batch);

    // Single edge-detecting query: is some hidden term contained in the set?
    // Counts as a batch of size one.
    bool edge_detecting_query(std::span<const uint32_t> vertex_set);

    uint32_t var_count() const { return hidden_.var_count(); }
    bool strict() const { return strict_; }
    bool sealed() const { return sealed_; }
    uint64_t batches_served() const { return batches_; }
    uint64_t queries_served() const { return queries_; }

private:
    Mdnf hidden_;
    bool strict_;
    bool sealed_ = false;
    uint64_t batches_ = 0;
    uint64_t queries_ = 0;
};

} // namespace hyperlearn
