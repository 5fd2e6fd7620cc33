#include "hyperlearn/kernels.hpp"

#include <bit>

namespace hyperlearn {
namespace {

void k_and(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
    for (size_t i = 0; i < nw; ++i) dst[i] = a[i] & b[i];
}

void k_and_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    for (size_t i = 0; i < nw; ++i) dst[i] &= src[i];
}

void k_andnot_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    for (size_t i = 0; i < nw; ++i) dst[i] &= ~src[i];
}

void k_or_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    for (size_t i = 0; i < nw; ++i) dst[i] |= src[i];
}

bool k_is_subset(const uint64_t* sub, const uint64_t* sup, size_t nw) {
    for (size_t i = 0; i < nw; ++i)
        if (sub[i] & ~sup[i]) return false;
    return true;
}

bool k_equals(const uint64_t* a, const uint64_t* b, size_t nw) {
    for (size_t i = 0; i < nw; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool k_is_zero(const uint64_t* a, size_t nw) {
    for (size_t i = 0; i < nw; ++i)
        if (a[i]) return false;
    return true;
}

} // namespace

const BitKernels& scalar_kernels() {
    static const BitKernels k = {
        "scalar", k_and, k_and_inplace, k_andnot_inplace, k_or_inplace,
        k_is_subset, k_equals, k_is_zero,
    };
    return k;
}

uint64_t popcount_words(const uint64_t* a, size_t nw) {
    uint64_t total = 0;
    for (size_t i = 0; i < nw; ++i) total += std::popcount(a[i]);
    return total;
}

} // namespace hyperlearn
