#include "hyperlearn/mdnf.hpp"

#include <algorithm>

#include "hyperlearn/errors.hpp"

namespace hyperlearn {

Monomial::Monomial(std::vector<uint32_t> vars) : vars_(std::move(vars)) {
    if (vars_.empty()) throw InvalidArgument("monomial needs at least one variable");
    std::sort(vars_.begin(), vars_.end());
    if (vars_.front() == 0) throw InvalidArgument("variable indices are 1-based");
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
        throw InvalidArgument("monomial has a repeated variable");
}

Monomial Monomial::from_support(const Assignment& support) {
    return Monomial(support.one_positions());
}

bool Monomial::satisfied_by(const Assignment& a) const {
    for (uint32_t v : vars_)
        if (!a.get(v)) return false;
    return true;
}

bool Monomial::subset_of(const Monomial& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

Assignment Monomial::support(uint32_t n) const {
    Assignment a(n);
    for (uint32_t v : vars_) a.set(v, true);
    return a;
}

Mdnf::Mdnf(uint32_t n, std::vector<Monomial> terms) : n_(n), terms_(std::move(terms)) {
    for (const Monomial& t : terms_)
        if (t.max_var() > n_) throw DimensionMismatch("term variable exceeds variable count");
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

uint32_t Mdnf::max_rank() const {
    uint32_t m = 0;
    for (const Monomial& t : terms_) m = std::max(m, t.rank());
    return m;
}

bool Mdnf::eval(const Assignment& a) const {
    if (a.var_count() != n_) throw DimensionMismatch("assignment does not match formula");
    for (const Monomial& t : terms_)
        if (t.satisfied_by(a)) return true;
    return false;
}

Mdnf Mdnf::reduced() const {
    std::vector<Monomial> kept;
    for (size_t i = 0; i < terms_.size(); ++i) {
        bool subsumed = false;
        for (size_t j = 0; j < terms_.size() && !subsumed; ++j)
            if (i != j && terms_[j].subset_of(terms_[i]) && terms_[j] != terms_[i])
                subsumed = true;
        if (!subsumed) kept.push_back(terms_[i]);
    }
    Mdnf out(n_);
    out.terms_ = std::move(kept);
    return out;
}

bool Mdnf::is_reduced() const {
    for (size_t i = 0; i < terms_.size(); ++i)
        for (size_t j = 0; j < terms_.size(); ++j)
            if (i != j && terms_[j].subset_of(terms_[i]))
                return false;
    return true;
}

void Mdnf::require_reduced(const char* op) const {
    if (!is_reduced()) throw InvalidArgument(std::string(op) + " requires a reduced formula");
}

std::vector<Assignment> Mdnf::minterms() const {
    require_reduced("minterms");
    std::vector<Assignment> out;
    out.reserve(terms_.size());
    for (const Monomial& t : terms_) out.push_back(t.support(n_));
    return out;
}

std::vector<uint32_t> Mdnf::relevant_vars() const {
    require_reduced("relevant_vars");
    Assignment seen(n_);
    for (const Monomial& t : terms_)
        for (uint32_t v : t.vars()) seen.set(v, true);
    return seen.one_positions();
}

Mdnf project(const Mdnf& f, std::span<const uint32_t> h, uint32_t q) {
    if (h.size() != f.var_count()) throw DimensionMismatch("renaming must cover every variable");
    for (uint32_t img : h)
        if (img == 0 || img > q) throw InvalidArgument("renaming image out of range");
    std::vector<Monomial> terms;
    terms.reserve(f.term_count());
    for (const Monomial& t : f.terms()) {
        std::vector<uint32_t> mapped;
        mapped.reserve(t.rank());
        for (uint32_t v : t.vars()) mapped.push_back(h[v - 1]);
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        terms.emplace_back(std::move(mapped));
    }
    return Mdnf(q, std::move(terms)).reduced();
}

Assignment lift(const Assignment& b, std::span<const uint32_t> h, uint32_t n) {
    if (h.size() != n) throw DimensionMismatch("renaming must cover every variable");
    Assignment out(n);
    for (uint32_t i = 1; i <= n; ++i)
        if (b.get(h[i - 1])) out.set(i, true);
    return out;
}

namespace {

// Truth table of f restricted to assignments 64*w .. 64*w+63, one bit each.
// Assignment index bits encode the variables: bit v-1 of the index is x_v.
uint64_t table_word(const Mdnf& f, uint64_t w) {
    static constexpr uint64_t low_var_pattern[6] = {
        0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
    };
    uint64_t acc = 0;
    for (const Monomial& t : f.terms()) {
        uint64_t tw = ~0ull;
        for (uint32_t v : t.vars()) {
            if (v <= 6) {
                tw &= low_var_pattern[v - 1];
            } else if (!((w >> (v - 7)) & 1)) {
                tw = 0;
                break;
            }
        }
        acc |= tw;
        if (acc == ~0ull) break;
    }
    return acc;
}

} // namespace

bool equivalent(const Mdnf& f, const Mdnf& g) {
    if (f.var_count() != g.var_count())
        throw DimensionMismatch("formulas have different variable counts");
    const uint32_t n = f.var_count();
    if (n > 24) throw GuardExceeded("equivalence check is guarded to 24 variables");
    if (n < 6) {
        const uint64_t mask = (1ull << (1u << n)) - 1;
        return ((table_word(f, 0) ^ table_word(g, 0)) & mask) == 0;
    }
    const uint64_t words = 1ull << (n - 6);
    for (uint64_t w = 0; w < words; ++w)
        if (table_word(f, w) != table_word(g, w)) return false;
    return true;
}

} // namespace hyperlearn
