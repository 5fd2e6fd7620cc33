#include "hyperlearn/kernels.hpp"

#include <immintrin.h>

namespace hyperlearn {
namespace {

void k_and(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
    }
    for (; i < nw; ++i) dst[i] = a[i] & b[i];
}

void k_and_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(vd, vs));
    }
    for (; i < nw; ++i) dst[i] &= src[i];
}

void k_andnot_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // andnot computes ~vs & vd
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(vs, vd));
    }
    for (; i < nw; ++i) dst[i] &= ~src[i];
}

void k_or_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(vd, vs));
    }
    for (; i < nw; ++i) dst[i] |= src[i];
}

bool k_is_subset(const uint64_t* sub, const uint64_t* sup, size_t nw) {
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i vsub = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sub + i));
        __m256i vsup = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sup + i));
        // testc(sup, sub) == 1 iff (~sup & sub) == 0
        if (!_mm256_testc_si256(vsup, vsub)) return false;
    }
    for (; i < nw; ++i)
        if (sub[i] & ~sup[i]) return false;
    return true;
}

bool k_equals(const uint64_t* a, const uint64_t* b, size_t nw) {
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i vx = _mm256_xor_si256(va, vb);
        if (!_mm256_testz_si256(vx, vx)) return false;
    }
    for (; i < nw; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool k_is_zero(const uint64_t* a, size_t nw) {
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(va, va)) return false;
    }
    for (; i < nw; ++i)
        if (a[i]) return false;
    return true;
}

} // namespace

const BitKernels& avx2_kernels() {
    static const BitKernels k = {
        "avx2", k_and, k_and_inplace, k_andnot_inplace, k_or_inplace,
        k_is_subset, k_equals, k_is_zero,
    };
    return k;
}

} // namespace hyperlearn
