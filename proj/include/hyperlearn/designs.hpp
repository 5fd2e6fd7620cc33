#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlearn/assignment.hpp"

namespace hyperlearn {

enum class VerifyState : uint8_t { unverified = 0, verified = 1, failed = 2 };

// Rows of a candidate (n,(s,r)) cover-free family, one 0/1 row per query.
// The defining property: for every choice of s+r distinct columns and every
// way to name s of them "excluded", some row is 1 on the r kept columns and
// 0 on the s excluded ones.
struct DesignMatrix {
    uint32_t n = 0;
    uint32_t s = 0;
    uint32_t r = 1;
    std::vector<Assignment> rows;
    VerifyState state = VerifyState::unverified;
};

// Candidate (n,q,d) perfect hash family: functions [n] -> [q] such that every
// d-subset of [n] is mapped injectively by at least one function.
struct HashFamily {
    uint32_t n = 0;
    uint32_t q = 0;
    uint32_t d = 0;
    std::vector<std::vector<uint32_t>> funcs; // funcs[k][i-1] in [1, q]
};

struct SizeReport {
    double ideal_rows;    // the combinatorial target for (s, r) alone
    double lower_bound;   // ideal_rows * log2(n)
    uint64_t achieved_rows;
};

// Base-2 target row count for an (s,r) cover-free family, n-independent part.
double n_s_r(uint32_t s, uint32_t r);

// n_s_r(s, r) * log2(n): the yardstick query counts are reported against.
double cff_baseline(uint32_t n, uint32_t s, uint32_t r);

// Rows the randomized construction uses so that a union bound brings the
// failure probability under delta.
uint64_t cff_row_count(uint32_t n, uint32_t s, uint32_t r, double delta);

// Random construction: each bit is 1 with probability r/(s+r). For s = 0 a
// single all-ones row suffices and is returned directly.
DesignMatrix random_cff(uint32_t n, uint32_t s, uint32_t r, double delta, uint64_t seed);

// Exhaustive check of the cover-free property. Sets A.state and returns the
// verdict. Guarded to C(n,s+r)*C(s+r,s) <= 1e8 subset/split pairs.
bool verify_cff(DesignMatrix& A);

SizeReport size_report(const DesignMatrix& A);

// Probability that one uniform function [d] -> [q] is injective on a fixed
// d-subset: product over k < d of (1 - k/q).
double phf_collision_free_prob(uint32_t q, uint32_t d);

// Family size for a *fixed* d-subset to be separated with probability
// >= 1 - delta. Requires q > d(d-1)/2.
uint64_t phf_family_size(uint32_t q, uint32_t d, double delta);

// Uniformly random functions, sized by phf_family_size.
HashFamily random_phf(uint32_t n, uint32_t q, uint32_t d, double delta, uint64_t seed);

// Family sized so a union bound covers all C(n,d) subsets at once; verified
// and regrown when exhaustive verification is feasible. Requires q >= 2*d*d.
HashFamily build_phf_all_subsets(uint32_t n, uint32_t q, uint32_t d, double delta, uint64_t seed);

// Exhaustive check over all d-subsets. Guarded to C(n,d) <= 1e7.
bool verify_phf(const HashFamily& P);

// Checks exactly what decoding a particular target needs from P: some
// function injective on core, and for every outside point j some function
// injective on core + j. Linear in n, so usable far beyond the exhaustive
// verification guard.
bool phf_covers_core(const HashFamily& P, std::span<const uint32_t> core);

// Classical size target d^2 log n / log(q / d^2) for comparison output.
double phf_classical_target(uint32_t n, uint32_t q, uint32_t d);

bool hash_injective_on(std::span<const uint32_t> func, std::span<const uint32_t> subset);

} // namespace hyperlearn
