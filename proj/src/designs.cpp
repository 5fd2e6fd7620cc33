#include "hyperlearn/designs.hpp"

#include <cmath>
#include <cstdio>

#include "hyperlearn/errors.hpp"
#include "hyperlearn/kernels.hpp"
#include "hyperlearn/rng.hpp"

namespace hyperlearn {
namespace {

double ln_binom(uint64_t n, uint64_t k) {
    if (k > n) return -INFINITY;
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
}

double binom_approx(uint64_t n, uint64_t k) { return std::exp(ln_binom(n, k)); }

void check_delta(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0)) throw InvalidArgument("delta must lie in (0,1)");
}

// Advances `comb` (ascending k-subset of [1..n]) to the next combination in
// lexicographic order; returns false after the last one.
bool next_combination(std::vector<uint32_t>& comb, uint32_t n) {
    const uint32_t k = static_cast<uint32_t>(comb.size());
    for (uint32_t i = k; i-- > 0;) {
        if (comb[i] < n - (k - 1 - i)) {
            ++comb[i];
            for (uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<uint32_t> first_combination(uint32_t k) {
    std::vector<uint32_t> comb(k);
    for (uint32_t i = 0; i < k; ++i) comb[i] = i + 1;
    return comb;
}

} // namespace

double n_s_r(uint32_t s, uint32_t r) {
    if (r < 1 || uint64_t(s) + r < 2)
        throw InvalidArgument("n_s_r requires r >= 1 and s + r >= 2");
    // For s = 0 the binomial is 1, the log is 0, and the quotient is +inf.
    const double log2_binom = ln_binom(uint64_t(s) + r, r) / std::log(2.0);
    const double binom = std::exp2(log2_binom);
    return (double(s) + r) / log2_binom * binom;
}

double cff_baseline(uint32_t n, uint32_t s, uint32_t r) {
    return n_s_r(s, r) * std::log2(double(n));
}

uint64_t cff_row_count(uint32_t n, uint32_t s, uint32_t r, double delta) {
    check_delta(delta);
    if (r < 1) throw InvalidArgument("cff_row_count requires r >= 1");
    if (n < uint64_t(s) + r) throw InvalidArgument("cff_row_count requires n >= s + r");
    if (s == 0) return 1;
    const double d = double(s) + r;
    const double p = r / d;
    // One row isolates a fixed split with probability p^r (1-p)^s.
    const double ln_hit = r * std::log(p) + s * std::log1p(-p);
    const double rate = -std::log1p(-std::exp(ln_hit));
    const double events = ln_binom(n, s + r) + ln_binom(uint64_t(s) + r, s) - std::log(delta);
    const double m = std::ceil(events / rate);
    if (!(m >= 1) || m > 2e8) throw GuardExceeded("cff row count exceeds builder bound of 2e8");
    return static_cast<uint64_t>(m);
}

DesignMatrix random_cff(uint32_t n, uint32_t s, uint32_t r, double delta, uint64_t seed) {
    DesignMatrix A;
    A.n = n;
    A.s = s;
    A.r = r;
    if (s == 0) {
        if (n < r) throw InvalidArgument("random_cff requires n >= s + r");
        A.rows.push_back(Assignment::ones(n));
        return A;
    }
    const uint64_t m = cff_row_count(n, s, r, delta);
    Rng rng(seed);
    A.rows.reserve(m);
    for (uint64_t row = 0; row < m; ++row) {
        Assignment a(n);
        for (uint32_t i = 1; i <= n; ++i)
            if (rng.chance(r, uint64_t(s) + r)) a.set(i, true);
        A.rows.push_back(std::move(a));
    }
    return A;
}

bool verify_cff(DesignMatrix& A) {
    const uint32_t d = A.s + A.r;
    if (A.r < 1) throw InvalidArgument("verify_cff requires r >= 1");
    if (A.n < d) throw InvalidArgument("verify_cff requires n >= s + r");
    if (binom_approx(A.n, d) * binom_approx(d, A.s) > 1e8)
        throw GuardExceeded("verify_cff is guarded to C(n,s+r)*C(s+r,s) <= 1e8");
    const uint32_t m = static_cast<uint32_t>(A.rows.size());
    for (const Assignment& row : A.rows)
        if (row.var_count() != A.n) throw DimensionMismatch("design row has wrong length");

    // Column masks: bit j of cols[i] is entry (row j, variable i+1).
    std::vector<Assignment> cols(A.n, Assignment(m));
    for (uint32_t j = 0; j < m; ++j)
        for (uint32_t i = 1; i <= A.n; ++i)
            if (A.rows[j].get(i)) cols[i - 1].set(j + 1, true);

    const BitKernels& k = active_kernels();
    const size_t nw = Assignment(m).word_count();
    const Assignment full = Assignment::ones(m);
    Assignment acc(m);

    std::vector<uint32_t> dset = first_combination(d);
    std::vector<uint32_t> pick = first_combination(A.s); // positions within dset to exclude
    bool ok = true;
    do {
        if (A.s > 0)
            for (uint32_t i = 0; i < A.s; ++i) pick[i] = i + 1;
        bool more_splits = true;
        while (more_splits) {
            acc = full;
            bool live = true;
            uint32_t pi = 0;
            for (uint32_t i = 0; i < d && live; ++i) {
                const Assignment& col = cols[dset[i] - 1];
                if (pi < A.s && pick[pi] == i + 1) {
                    k.andnot_inplace(acc.words(), col.words(), nw);
                    ++pi;
                } else {
                    k.and_inplace(acc.words(), col.words(), nw);
                }
                live = !k.is_zero(acc.words(), nw);
            }
            if (!live) {
                ok = false;
                break;
            }
            more_splits = A.s > 0 && next_combination(pick, d);
        }
        if (!ok) break;
    } while (next_combination(dset, A.n));

    A.state = ok ? VerifyState::verified : VerifyState::failed;
    return ok;
}

SizeReport size_report(const DesignMatrix& A) {
    SizeReport rep{};
    if (A.s >= 1) {
        rep.ideal_rows = n_s_r(A.s, A.r);
        rep.lower_bound = cff_baseline(A.n, A.s, A.r);
    } else {
        rep.ideal_rows = 1.0;
        rep.lower_bound = 1.0;
    }
    rep.achieved_rows = A.rows.size();
    return rep;
}

double phf_collision_free_prob(uint32_t q, uint32_t d) {
    if (q < 1 || d < 1) throw InvalidArgument("phf_collision_free_prob requires q, d >= 1");
    double g = 1.0;
    for (uint32_t k = 1; k < d; ++k) g *= 1.0 - double(k) / q;
    return g;
}

uint64_t phf_family_size(uint32_t q, uint32_t d, double delta) {
    check_delta(delta);
    if (d == 1) return 1;
    if (uint64_t(q) * 2 <= uint64_t(d) * (d - 1))
        throw InvalidArgument("phf_family_size requires q > d(d-1)/2");
    const double g = phf_collision_free_prob(q, d);
    const double size = std::ceil(std::log(1.0 / delta) / -std::log1p(-g));
    if (!(size >= 1) || size > 1e8) throw GuardExceeded("phf family size exceeds builder bound of 1e8");
    return static_cast<uint64_t>(size);
}

namespace {

HashFamily draw_phf(uint32_t n, uint32_t q, uint32_t d, uint64_t count, uint64_t seed) {
    HashFamily P;
    P.n = n;
    P.q = q;
    P.d = d;
    Rng rng(seed);
    P.funcs.resize(count);
    for (auto& func : P.funcs) {
        func.resize(n);
        for (uint32_t i = 0; i < n; ++i)
            func[i] = 1 + static_cast<uint32_t>(rng.below(q));
    }
    return P;
}

} // namespace

HashFamily random_phf(uint32_t n, uint32_t q, uint32_t d, double delta, uint64_t seed) {
    if (d > n) throw InvalidArgument("random_phf requires d <= n");
    return draw_phf(n, q, d, phf_family_size(q, d, delta), seed);
}

HashFamily build_phf_all_subsets(uint32_t n, uint32_t q, uint32_t d, double delta, uint64_t seed) {
    check_delta(delta);
    if (d > n) throw InvalidArgument("build_phf_all_subsets requires d <= n");
    if (uint64_t(q) < 2ull * d * d)
        throw InvalidArgument("build_phf_all_subsets requires q >= 2*d*d");
    uint64_t count = 1;
    if (d > 1) {
        const double g = phf_collision_free_prob(q, d);
        const double size =
            std::ceil((ln_binom(n, d) + std::log(1.0 / delta)) / -std::log1p(-g));
        if (!(size >= 1) || size > 1e8)
            throw GuardExceeded("phf family size exceeds builder bound of 1e8");
        count = static_cast<uint64_t>(size);
    }
    const bool can_verify = binom_approx(n, d) <= 1e7;
    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        HashFamily P = draw_phf(n, q, d, count, derive_seed(seed, attempt));
        if (!can_verify || verify_phf(P)) return P;
    }
    throw DesignFailure("hash family failed verification on 64 consecutive draws");
}

bool verify_phf(const HashFamily& P) {
    if (P.d > P.n) throw InvalidArgument("verify_phf requires d <= n");
    if (P.d < 1) throw InvalidArgument("verify_phf requires d >= 1");
    if (binom_approx(P.n, P.d) > 1e7)
        throw GuardExceeded("verify_phf is guarded to C(n,d) <= 1e7");
    std::vector<uint32_t> dset = first_combination(P.d);
    do {
        bool separated = false;
        for (const auto& func : P.funcs) {
            if (hash_injective_on(func, dset)) {
                separated = true;
                break;
            }
        }
        if (!separated) return false;
    } while (next_combination(dset, P.n));
    return true;
}

bool phf_covers_core(const HashFamily& P, std::span<const uint32_t> core) {
    for (uint32_t v : core)
        if (v == 0 || v > P.n) throw InvalidArgument("core variable out of range");
    auto separated = [&](std::span<const uint32_t> subset) {
        for (const auto& func : P.funcs)
            if (hash_injective_on(func, subset)) return true;
        return false;
    };
    if (!separated(core)) return false;
    std::vector<uint32_t> extended(core.begin(), core.end());
    extended.push_back(0);
    Assignment in_core(P.n);
    for (uint32_t v : core) in_core.set(v, true);
    for (uint32_t j = 1; j <= P.n; ++j) {
        if (in_core.get(j)) continue;
        extended.back() = j;
        if (!separated(extended)) return false;
    }
    return true;
}

double phf_classical_target(uint32_t n, uint32_t q, uint32_t d) {
    const double dd = double(d) * d;
    if (!(q > dd)) throw InvalidArgument("phf_classical_target requires q > d*d");
    return dd * std::log2(double(n)) / std::log2(q / dd);
}

bool hash_injective_on(std::span<const uint32_t> func, std::span<const uint32_t> subset) {
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (func[subset[i] - 1] == func[subset[j] - 1]) return false;
    return true;
}

} // namespace hyperlearn
