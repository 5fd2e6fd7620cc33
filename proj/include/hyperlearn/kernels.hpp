#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperlearn {

// Word-block kernels behind all bit-vector operations. Each entry has a
// scalar reference implementation plus SIMD variants selected at runtime;
// variants must agree bit-for-bit (see tests/test_kernels.cpp).
struct BitKernels {
    const char* name;
    void (*bit_and)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw);
    void (*and_inplace)(uint64_t* dst, const uint64_t* src, size_t nw);
    void (*andnot_inplace)(uint64_t* dst, const uint64_t* src, size_t nw); // dst &= ~src
    void (*or_inplace)(uint64_t* dst, const uint64_t* src, size_t nw);
    bool (*is_subset)(const uint64_t* sub, const uint64_t* sup, size_t nw);
    bool (*equals)(const uint64_t* a, const uint64_t* b, size_t nw);
    bool (*is_zero)(const uint64_t* a, size_t nw);
};

const BitKernels& scalar_kernels();
#if defined(HYPERLEARN_HAVE_AVX2)
const BitKernels& avx2_kernels();
#endif
#if defined(HYPERLEARN_HAVE_NEON)
const BitKernels& neon_kernels();
#endif

// Best implementation for this machine. HYPERLEARN_KERNEL=scalar|avx2|neon
// forces a choice; an unavailable choice falls back to scalar with a warning.
const BitKernels& active_kernels();

// Every implementation usable on this machine (for equivalence tests).
std::vector<const BitKernels*> available_kernels();

uint64_t popcount_words(const uint64_t* a, size_t nw);

} // namespace hyperlearn
