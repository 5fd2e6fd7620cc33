#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlearn/assignment.hpp"

namespace hyperlearn {

// A nonempty conjunction of variables, kept as ascending 1-based indices.
// The empty conjunction (constant 1) is deliberately unrepresentable.
class Monomial {
public:
    explicit Monomial(std::vector<uint32_t> vars);
    static Monomial from_support(const Assignment& support);

    const std::vector<uint32_t>& vars() const { return vars_; }
    uint32_t rank() const { return static_cast<uint32_t>(vars_.size()); }
    uint32_t max_var() const { return vars_.back(); }

    bool satisfied_by(const Assignment& a) const;
    bool subset_of(const Monomial& other) const;
    Assignment support(uint32_t n) const;

    bool operator==(const Monomial& other) const { return vars_ == other.vars_; }
    bool operator!=(const Monomial& other) const { return vars_ != other.vars_; }
    bool operator<(const Monomial& other) const { return vars_ < other.vars_; }

private:
    std::vector<uint32_t> vars_;
};

// Monotone DNF over x_1..x_n: a set of monomials, none negated. Terms are
// stored sorted lexicographically with exact duplicates removed; subsumed
// terms may still be present until reduced(). An empty term set is the
// constant-0 function.
class Mdnf {
public:
    explicit Mdnf(uint32_t n) : n_(n) {}
    Mdnf(uint32_t n, std::vector<Monomial> terms);

    uint32_t var_count() const { return n_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool constant_zero() const { return terms_.empty(); }
    uint32_t max_rank() const;

    bool eval(const Assignment& a) const;

    // Drops every term that contains another term; the result is the unique
    // reduced form (an antichain).
    Mdnf reduced() const;
    bool is_reduced() const;

    // One satisfying assignment per term, exactly the term's variables set.
    // Requires *this reduced; then these are precisely the minimal
    // satisfying assignments.
    std::vector<Assignment> minterms() const;

    // Ascending indices of variables appearing in some term. For a reduced
    // form this is exactly the set of semantically relevant variables.
    std::vector<uint32_t> relevant_vars() const;

    bool operator==(const Mdnf& other) const {
        return n_ == other.n_ && terms_ == other.terms_;
    }
    bool operator!=(const Mdnf& other) const { return !(*this == other); }

private:
    void require_reduced(const char* op) const;
    uint32_t n_;
    std::vector<Monomial> terms_;
};

// Renames variables: x_i becomes y_{h(i)}. h has one entry per variable of f,
// values in [1, q]. The result is reduced.
Mdnf project(const Mdnf& f, std::span<const uint32_t> h, uint32_t q);

// Pulls an assignment on y_1..y_q back through h: bit i of the result is
// bit h(i) of b.
Assignment lift(const Assignment& b, std::span<const uint32_t> h, uint32_t n);

// Truth-table equality. Guarded to var_count <= 24.
bool equivalent(const Mdnf& f, const Mdnf& g);

} // namespace hyperlearn
