#include "hyperlearn/kernels.hpp"

#include <arm_neon.h>

namespace hyperlearn {
namespace {

void k_and(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t nw) {
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        vst1q_u64(dst + i, vandq_u64(va, vb));
    }
    for (; i < nw; ++i) dst[i] = a[i] & b[i];
}

void k_and_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t vd = vld1q_u64(dst + i);
        uint64x2_t vs = vld1q_u64(src + i);
        vst1q_u64(dst + i, vandq_u64(vd, vs));
    }
    for (; i < nw; ++i) dst[i] &= src[i];
}

void k_andnot_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t vd = vld1q_u64(dst + i);
        uint64x2_t vs = vld1q_u64(src + i);
        // bic computes vd & ~vs
        vst1q_u64(dst + i, vbicq_u64(vd, vs));
    }
    for (; i < nw; ++i) dst[i] &= ~src[i];
}

void k_or_inplace(uint64_t* dst, const uint64_t* src, size_t nw) {
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t vd = vld1q_u64(dst + i);
        uint64x2_t vs = vld1q_u64(src + i);
        vst1q_u64(dst + i, vorrq_u64(vd, vs));
    }
    for (; i < nw; ++i) dst[i] |= src[i];
}

bool k_is_subset(const uint64_t* sub, const uint64_t* sup, size_t nw) {
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t vsub = vld1q_u64(sub + i);
        uint64x2_t vsup = vld1q_u64(sup + i);
        uint64x2_t stray = vbicq_u64(vsub, vsup);
        if (vgetq_lane_u64(stray, 0) | vgetq_lane_u64(stray, 1)) return false;
    }
    for (; i < nw; ++i)
        if (sub[i] & ~sup[i]) return false;
    return true;
}

bool k_equals(const uint64_t* a, const uint64_t* b, size_t nw) {
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t vx = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vgetq_lane_u64(vx, 0) | vgetq_lane_u64(vx, 1)) return false;
    }
    for (; i < nw; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool k_is_zero(const uint64_t* a, size_t nw) {
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        if (vgetq_lane_u64(va, 0) | vgetq_lane_u64(va, 1)) return false;
    }
    for (; i < nw; ++i)
        if (a[i]) return false;
    return true;
}

} // namespace

const BitKernels& neon_kernels() {
    static const BitKernels k = {
        "neon", k_and, k_and_inplace, k_andnot_inplace, k_or_inplace,
        k_is_subset, k_equals, k_is_zero,
    };
    return k;
}

} // namespace hyperlearn
