#include "hyperlearn/learner_direct.hpp"

#include <algorithm>

#include "hyperlearn/errors.hpp"
#include "intern.hpp"

namespace hyperlearn {
namespace {

void check_design(const DesignMatrix& D, uint32_t n, uint32_t s, uint32_t r, const char* which) {
    if (D.n != n || D.s != s || D.r != r)
        throw InvalidArgument(std::string("design ") + which + " has wrong parameters");
    if (D.state == VerifyState::failed)
        throw DesignFailure(std::string("design ") + which + " failed verification");
    if (D.rows.empty()) throw InvalidArgument(std::string("design ") + which + " is empty");
    for (const Assignment& row : D.rows)
        if (row.var_count() != n) throw DimensionMismatch("design row has wrong length");
}

} // namespace

DirectPlan plan_direct(uint32_t n, uint32_t s, uint32_t r, DesignMatrix A, DesignMatrix B) {
    if (n < 1 || s < 1 || r < 1) throw InvalidArgument("plan_direct requires n, s, r >= 1");
    check_design(A, n, 1, r, "A");
    check_design(B, n, s - 1, r, "B");

    DirectPlan plan;
    plan.n = n;
    plan.s = s;
    plan.r = r;
    plan.a_design = std::move(A);
    plan.b_design = std::move(B);
    plan.pair_to_query.reserve(plan.raw_count());
    detail::QueryPool pool(plan.queries);
    for (const Assignment& a : plan.a_design.rows)
        for (const Assignment& b : plan.b_design.rows)
            plan.pair_to_query.push_back(pool.intern(a & b));
    return plan;
}

std::vector<DirectCandidate> direct_candidates(const DirectPlan& plan,
                                               std::span<const uint8_t> answers) {
    if (answers.size() != plan.queries.size())
        throw DimensionMismatch("answer list does not match plan");
    const size_t na = plan.a_design.rows.size();
    const size_t nb = plan.b_design.rows.size();
    std::vector<DirectCandidate> out;
    out.reserve(nb);
    for (size_t bi = 0; bi < nb; ++bi) {
        DirectCandidate cand;
        cand.b_row = static_cast<uint32_t>(bi);
        cand.forced = Assignment::ones(plan.n);
        bool any_positive = false;
        for (size_t ai = 0; ai < na; ++ai) {
            const uint32_t qi = plan.query_index(static_cast<uint32_t>(ai),
                                                 static_cast<uint32_t>(bi));
            if (answers[qi]) {
                cand.forced &= plan.queries[qi];
                any_positive = true;
            }
        }
        cand.evidenced = any_positive;
        out.push_back(std::move(cand));
    }
    return out;
}

Mdnf decode_direct(const DirectPlan& plan, std::span<const uint8_t> answers) {
    const std::vector<DirectCandidate> cands = direct_candidates(plan, answers);

    std::vector<Assignment> supports;
    for (const DirectCandidate& c : cands) {
        // A candidate with no positive answer is the no-information sentinel.
        // A full-variable candidate backed by positive answers is kept: it can
        // only arise when the hidden function is the single all-variable term,
        // which is a legitimate rank <= r term when n <= r.
        if (!c.evidenced) continue;
        if (std::find(supports.begin(), supports.end(), c.forced) == supports.end())
            supports.push_back(c.forced);
    }

    // Keep the maximal supports; smaller ones are fragments of real terms.
    std::vector<Monomial> terms;
    for (size_t i = 0; i < supports.size(); ++i) {
        bool proper_subset = false;
        for (size_t j = 0; j < supports.size() && !proper_subset; ++j)
            if (i != j && supports[i].is_subset_of(supports[j]) && supports[i] != supports[j])
                proper_subset = true;
        if (!proper_subset && !supports[i].none())
            terms.push_back(Monomial::from_support(supports[i]));
    }
    return Mdnf(plan.n, std::move(terms));
}

LearnResult learn_direct(uint32_t n, uint32_t s, uint32_t r, Teacher& teacher,
                         DesignMatrix A, DesignMatrix B) {
    if (teacher.var_count() != n) throw DimensionMismatch("teacher has wrong variable count");
    DirectPlan plan = plan_direct(n, s, r, std::move(A), std::move(B));
    LearnResult result;
    result.raw_queries = plan.raw_count();
    result.dedup_queries = plan.queries.size();
    result.transcript.n = n;
    result.transcript.queries = plan.queries;
    result.transcript.answers = teacher.query_batch(plan.queries);
    result.transcript.batches = 1;
    result.hypothesis = decode_direct(plan, result.transcript.answers);
    return result;
}

} // namespace hyperlearn
