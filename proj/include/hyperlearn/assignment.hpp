#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlearn {

// Packed 0/1 assignment to variables x_1..x_n. Variable indices are 1-based
// throughout; bit i-1 of the word block holds x_i. Bits past n stay zero.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static Assignment zeros(uint32_t n) { return Assignment(n); }
    static Assignment ones(uint32_t n);
    // Parses "0101..." where the leftmost character is x_1.
    static Assignment from_bits(std::string_view bits);

    uint32_t var_count() const { return n_; }
    size_t word_count() const { return words_.size(); }
    uint64_t* words() { return words_.data(); }
    const uint64_t* words() const { return words_.data(); }

    bool get(uint32_t var) const;
    void set(uint32_t var, bool value);

    uint64_t count_ones() const;
    bool none() const;
    bool all() const;

    // True when every set bit of *this is also set in other.
    bool is_subset_of(const Assignment& other) const;

    Assignment operator&(const Assignment& other) const;
    Assignment& operator&=(const Assignment& other);
    bool operator==(const Assignment& other) const;
    bool operator!=(const Assignment& other) const { return !(*this == other); }

    std::string to_bit_string() const;

    // 1-based indices of the set bits, ascending.
    std::vector<uint32_t> one_positions() const;

private:
    void check_same_n(const Assignment& other) const;
    uint32_t n_ = 0;
    std::vector<uint64_t> words_;
};

struct AssignmentHash {
    size_t operator()(const Assignment& a) const;
};

} // namespace hyperlearn
