#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "hyperlearn/designs.hpp"
#include "hyperlearn/errors.hpp"
#include "hyperlearn/mdnf.hpp"
#include "hyperlearn/rng.hpp"

namespace testutil {

using namespace hyperlearn;

// The complete cube {0,1}^n labeled as an (n,(s,r)) design. For s + r <= n
// it genuinely is one: the indicator row of any kept set is present.
inline DesignMatrix cube_design(uint32_t n, uint32_t s, uint32_t r) {
    DesignMatrix A{n, s, r, {}, VerifyState::unverified};
    const uint64_t total = 1ull << n;
    A.rows.reserve(total);
    for (uint64_t mask = 0; mask < total; ++mask) {
        Assignment row(n);
        for (uint32_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) row.set(i + 1, true);
        A.rows.push_back(std::move(row));
    }
    return A;
}

inline std::vector<Monomial> all_monomials(uint32_t n, uint32_t max_rank) {
    std::vector<Monomial> out;
    const uint32_t cap = std::min(max_rank, n);
    for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
        if (static_cast<uint32_t>(__builtin_popcountll(mask)) > cap) continue;
        std::vector<uint32_t> vars;
        for (uint32_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) vars.push_back(i + 1);
        out.emplace_back(std::move(vars));
    }
    return out;
}

// Every reduced formula with at most s terms of rank at most r, including
// the constant-0 empty one.
inline std::vector<Mdnf> enumerate_reduced_targets(uint32_t n, uint32_t s, uint32_t r) {
    const std::vector<Monomial> pool = all_monomials(n, r);
    std::vector<Mdnf> out;
    std::vector<Monomial> picked;
    auto rec = [&](auto&& self, size_t start) -> void {
        out.emplace_back(n, picked);
        if (picked.size() == s) return;
        for (size_t i = start; i < pool.size(); ++i) {
            bool comparable = false;
            for (const Monomial& t : picked)
                if (pool[i].subset_of(t) || t.subset_of(pool[i])) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            picked.push_back(pool[i]);
            self(self, i + 1);
            picked.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Independently coded cover-free check, deliberately index-based and slow.
inline bool naive_cff_check(const DesignMatrix& A) {
    const uint32_t n = A.n, s = A.s, r = A.r;
    std::vector<uint32_t> cols(s + r);
    auto next_subset = [&](std::vector<uint32_t>& c, uint32_t limit) {
        const size_t k = c.size();
        size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] < limit - (k - 1 - i)) {
                ++c[i];
                for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (uint32_t i = 0; i < s + r; ++i) cols[i] = i + 1;
    do {
        std::vector<uint32_t> keep(r);
        for (uint32_t i = 0; i < r; ++i) keep[i] = i;
        do {
            bool hit = false;
            for (const Assignment& row : A.rows) {
                bool good = true;
                std::vector<bool> kept(s + r, false);
                for (uint32_t ki : keep) {
                    kept[ki] = true;
                    if (!row.get(cols[ki])) good = false;
                }
                for (uint32_t i = 0; i < s + r && good; ++i)
                    if (!kept[i] && row.get(cols[i])) good = false;
                if (good) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        } while ([&] {
            size_t i = r;
            while (i > 0) {
                --i;
                if (keep[i] < s + r - (r - i)) {
                    ++keep[i];
                    for (size_t j = i + 1; j < r; ++j) keep[j] = keep[j - 1] + 1;
                    return true;
                }
            }
            return false;
        }());
    } while (next_subset(cols, n));
    return true;
}

// Retries seeds until the randomized construction verifies; the draw is
// deterministic in base_seed.
inline DesignMatrix verified_cff(uint32_t n, uint32_t s, uint32_t r, double delta,
                                 uint64_t base_seed) {
    for (uint64_t attempt = 0; attempt < 16; ++attempt) {
        DesignMatrix A = random_cff(n, s, r, delta, derive_seed(base_seed, attempt));
        if (verify_cff(A)) return A;
    }
    throw DesignFailure("verified_cff: no verified draw in 16 attempts");
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, captures stdout (stderr goes to the null device).
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::string cli_path() {
#ifdef HYPERLEARN_CLI_PATH
    return HYPERLEARN_CLI_PATH;
#else
    return "./hyperlearn";
#endif
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = (std::filesystem::temp_directory_path() /
                 (tag + "." + std::to_string(::getpid()) + "." + std::to_string(counter_++)))
                    .string();
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::string& path() const { return path_; }

private:
    static inline int counter_ = 0;
    std::string path_;
};

} // namespace testutil
