#pragma once

#include <unordered_map>
#include <vector>

#include "hyperlearn/assignment.hpp"

namespace hyperlearn::detail {

// Deduplicates assignments into a store, returning stable indices in
// first-use order. Hash collisions are resolved by full comparison.
class QueryPool {
public:
    explicit QueryPool(std::vector<Assignment>& store) : store_(store) {}

    uint32_t intern(Assignment&& a) {
        const uint64_t h = AssignmentHash{}(a);
        auto range = index_.equal_range(h);
        for (auto it = range.first; it != range.second; ++it)
            if (store_[it->second] == a) return it->second;
        const auto idx = static_cast<uint32_t>(store_.size());
        store_.push_back(std::move(a));
        index_.emplace(h, idx);
        return idx;
    }

private:
    std::vector<Assignment>& store_;
    std::unordered_multimap<uint64_t, uint32_t> index_;
};

} // namespace hyperlearn::detail
