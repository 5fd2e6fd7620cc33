#include "hyperlearn/assignment.hpp"

#include <bit>

#include "hyperlearn/errors.hpp"
#include "hyperlearn/kernels.hpp"

namespace hyperlearn {

Assignment Assignment::ones(uint32_t n) {
    Assignment a(n);
    if (n == 0) return a;
    for (auto& w : a.words_) w = ~0ull;
    const uint32_t tail = n % 64;
    if (tail) a.words_.back() = (1ull << tail) - 1;
    return a;
}

Assignment Assignment::from_bits(std::string_view bits) {
    Assignment a(static_cast<uint32_t>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            a.words_[i / 64] |= 1ull << (i % 64);
        else if (bits[i] != '0')
            throw ParseError("assignment strings may contain only 0 and 1");
    }
    return a;
}

bool Assignment::get(uint32_t var) const {
    if (var == 0 || var > n_) throw DimensionMismatch("variable index out of range");
    return (words_[(var - 1) / 64] >> ((var - 1) % 64)) & 1;
}

void Assignment::set(uint32_t var, bool value) {
    if (var == 0 || var > n_) throw DimensionMismatch("variable index out of range");
    const uint64_t mask = 1ull << ((var - 1) % 64);
    if (value)
        words_[(var - 1) / 64] |= mask;
    else
        words_[(var - 1) / 64] &= ~mask;
}

uint64_t Assignment::count_ones() const {
    return popcount_words(words_.data(), words_.size());
}

bool Assignment::none() const {
    return active_kernels().is_zero(words_.data(), words_.size());
}

bool Assignment::all() const {
    return *this == ones(n_);
}

bool Assignment::is_subset_of(const Assignment& other) const {
    check_same_n(other);
    return active_kernels().is_subset(words_.data(), other.words_.data(), words_.size());
}

Assignment Assignment::operator&(const Assignment& other) const {
    check_same_n(other);
    Assignment out(n_);
    active_kernels().bit_and(out.words_.data(), words_.data(), other.words_.data(), words_.size());
    return out;
}

Assignment& Assignment::operator&=(const Assignment& other) {
    check_same_n(other);
    active_kernels().and_inplace(words_.data(), other.words_.data(), words_.size());
    return *this;
}

bool Assignment::operator==(const Assignment& other) const {
    if (n_ != other.n_) return false;
    return active_kernels().equals(words_.data(), other.words_.data(), words_.size());
}

std::string Assignment::to_bit_string() const {
    std::string out(n_, '0');
    for (uint32_t i = 0; i < n_; ++i)
        if ((words_[i / 64] >> (i % 64)) & 1) out[i] = '1';
    return out;
}

std::vector<uint32_t> Assignment::one_positions() const {
    std::vector<uint32_t> out;
    out.reserve(count_ones());
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<uint32_t>(w * 64 + b + 1));
            bits &= bits - 1;
        }
    }
    return out;
}

void Assignment::check_same_n(const Assignment& other) const {
    if (n_ != other.n_) throw DimensionMismatch("assignments have different variable counts");
}

size_t AssignmentHash::operator()(const Assignment& a) const {
    // fnv-1a over the words plus the length
    uint64_t h = 0xcbf29ce484222325ull ^ a.var_count();
    for (size_t i = 0; i < a.word_count(); ++i) {
        h ^= a.words()[i];
        h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h ^ (h >> 32));
}

} // namespace hyperlearn
