#include "hyperlearn/learner_reduced.hpp"

#include <algorithm>

#include "hyperlearn/errors.hpp"
#include "hyperlearn/kernels.hpp"
#include "hyperlearn/rng.hpp"
#include "intern.hpp"

namespace hyperlearn {

ReductionParams reduction_params(uint32_t n, uint32_t s, uint32_t r) {
    if (n < 1 || s < 1 || r < 1) throw InvalidArgument("reduction_params requires n, s, r >= 1");
    ReductionParams p;
    const uint64_t rs = uint64_t(r) * s;
    // any rs at or past 2^20 pushes q over 2^31, and refusing here also keeps
    // 3*rs*rs inside 64 bits
    if (rs >= (1ull << 20)) throw GuardExceeded("reduction_params q exceeds 2^31");
    p.d = static_cast<uint32_t>(std::min<uint64_t>(rs, n));
    // 3 r^2 s^2 keeps distinct terms separated with good probability; the
    // second operand keeps the all-subsets family builder's q >= 2*(d+1)^2
    // precondition satisfiable for small r*s.
    const uint64_t q = std::max<uint64_t>(3 * rs * rs, 2 * uint64_t(p.d + 1) * (p.d + 1));
    if (q > (1ull << 31)) throw GuardExceeded("reduction_params q exceeds 2^31");
    p.q = static_cast<uint32_t>(q);
    p.projects = p.q < n;
    return p;
}

ReducedPlan plan_reduced(uint32_t n, uint32_t s, uint32_t r, HashFamily P,
                         DesignMatrix A_q, DesignMatrix B_q) {
    if (n < 1 || s < 1 || r < 1) throw InvalidArgument("plan_reduced requires n, s, r >= 1");
    const uint32_t d = static_cast<uint32_t>(std::min<uint64_t>(uint64_t(r) * s, n));
    if (P.n != n) throw InvalidArgument("hash family is over the wrong variable count");
    if (P.d != d + 1) throw InvalidArgument("hash family must separate d+1 points, d = min(r*s, n)");
    if (P.funcs.empty()) throw InvalidArgument("hash family is empty");
    const uint32_t q = P.q;
    if (uint64_t(q) < 2ull * d * d) throw InvalidArgument("plan_reduced requires q >= 2*d*d");
    if (A_q.n != q || B_q.n != q)
        throw InvalidArgument("inner designs must be over q variables");
    for (const auto& func : P.funcs) {
        if (func.size() != n) throw DimensionMismatch("hash function has wrong length");
        for (uint32_t img : func)
            if (img == 0 || img > q) throw InvalidArgument("hash image out of range");
    }

    ReducedPlan plan;
    plan.n = n;
    plan.s = s;
    plan.r = r;
    plan.q = q;
    plan.d = d;
    plan.family = std::move(P);
    plan.inner = plan_direct(q, s, r, std::move(A_q), std::move(B_q));

    const BitKernels& kern = active_kernels();
    const size_t nw = Assignment(n).word_count();
    const Assignment full = Assignment::ones(n);
    detail::QueryPool pool(plan.queries);
    plan.slices.resize(plan.family.funcs.size());

    std::vector<Assignment> image_mask(q, Assignment(n));
    for (size_t k = 0; k < plan.family.funcs.size(); ++k) {
        const auto& func = plan.family.funcs[k];
        for (auto& mask : image_mask) mask = Assignment(n);
        for (uint32_t i = 1; i <= n; ++i) image_mask[func[i - 1] - 1].set(i, true);

        auto& slice = plan.slices[k];
        slice.reserve(plan.inner.queries.size());
        for (const Assignment& c : plan.inner.queries) {
            // lift(c, func): variable i takes the value of c at func(i).
            // Built from per-image masks, from whichever side of c is smaller.
            Assignment lifted(n);
            if (2 * c.count_ones() <= q) {
                for (uint32_t j : c.one_positions())
                    kern.or_inplace(lifted.words(), image_mask[j - 1].words(), nw);
            } else {
                lifted = full;
                for (uint32_t j = 1; j <= q; ++j)
                    if (!c.get(j))
                        kern.andnot_inplace(lifted.words(), image_mask[j - 1].words(), nw);
            }
            slice.push_back(pool.intern(std::move(lifted)));
        }
    }
    return plan;
}

ReducedDecodeDetail decode_reduced_detail(const ReducedPlan& plan,
                                          std::span<const uint8_t> answers) {
    if (answers.size() != plan.queries.size())
        throw DimensionMismatch("answer list does not match plan");
    const size_t nfuncs = plan.family.funcs.size();

    ReducedDecodeDetail detail;
    detail.projections.reserve(nfuncs);
    detail.relevant.reserve(nfuncs);
    std::vector<uint8_t> inner_answers(plan.inner.queries.size());
    for (size_t k = 0; k < nfuncs; ++k) {
        for (size_t j = 0; j < inner_answers.size(); ++j)
            inner_answers[j] = answers[plan.slices[k][j]];
        Mdnf proj = decode_direct(plan.inner, inner_answers);
        detail.relevant.push_back(proj.relevant_vars());
        detail.projections.push_back(std::move(proj));
    }

    detail.width = 0;
    for (const auto& vars : detail.relevant)
        detail.width = std::max(detail.width, static_cast<uint32_t>(vars.size()));

    // Keep variable i only if every widest projection saw its image as
    // relevant; any genuinely irrelevant i is dropped by a function that
    // separates the relevant set plus i.
    Assignment alive = Assignment::ones(plan.n);
    detail.chosen = 0;
    bool chosen_set = false;
    for (size_t k = 0; k < nfuncs; ++k) {
        if (detail.relevant[k].size() != detail.width) continue;
        if (!chosen_set) {
            detail.chosen = static_cast<uint32_t>(k);
            chosen_set = true;
        }
        Assignment image_relevant(plan.q);
        for (uint32_t j : detail.relevant[k]) image_relevant.set(j, true);
        const auto& func = plan.family.funcs[k];
        for (uint32_t i = 1; i <= plan.n; ++i)
            if (alive.get(i) && !image_relevant.get(func[i - 1])) alive.set(i, false);
    }
    detail.survivors = alive.one_positions();

    // Rename the chosen projection back through the surviving preimages.
    const auto& func = plan.family.funcs[detail.chosen];
    std::vector<std::vector<uint32_t>> preimage(plan.q);
    for (uint32_t i : detail.survivors) preimage[func[i - 1] - 1].push_back(i);
    std::vector<Monomial> terms;
    terms.reserve(detail.projections[detail.chosen].term_count());
    for (const Monomial& t : detail.projections[detail.chosen].terms()) {
        std::vector<uint32_t> vars;
        vars.reserve(t.rank());
        for (uint32_t j : t.vars()) {
            const auto& pre = preimage[j - 1];
            if (pre.size() != 1)
                throw PhfFailure("projected variable has no unique surviving preimage");
            vars.push_back(pre[0]);
        }
        terms.emplace_back(std::move(vars));
    }
    detail.result = Mdnf(plan.n, std::move(terms)).reduced();
    return detail;
}

Mdnf decode_reduced(const ReducedPlan& plan, std::span<const uint8_t> answers) {
    return decode_reduced_detail(plan, answers).result;
}

LearnResult learn_reduced(uint32_t n, uint32_t s, uint32_t r, Teacher& teacher,
                          HashFamily P, DesignMatrix A_q, DesignMatrix B_q) {
    if (teacher.var_count() != n) throw DimensionMismatch("teacher has wrong variable count");
    ReducedPlan plan = plan_reduced(n, s, r, std::move(P), std::move(A_q), std::move(B_q));
    LearnResult result;
    result.raw_queries = plan.raw_count();
    result.dedup_queries = plan.queries.size();
    result.transcript.n = n;
    result.transcript.queries = plan.queries;
    result.transcript.answers = teacher.query_batch(plan.queries);
    result.transcript.batches = 1;
    result.hypothesis = decode_reduced(plan, result.transcript.answers);
    return result;
}

LearnResult learn_reduced(uint32_t n, uint32_t s, uint32_t r, Teacher& teacher,
                          double delta, uint64_t seed) {
    const ReductionParams params = reduction_params(n, s, r);
    if (!params.projects) {
        DesignMatrix A = random_cff(n, 1, r, delta, derive_seed(seed, kSeedCffA));
        DesignMatrix B = random_cff(n, s - 1, r, delta, derive_seed(seed, kSeedCffB));
        return learn_direct(n, s, r, teacher, std::move(A), std::move(B));
    }
    HashFamily P = build_phf_all_subsets(n, params.q, params.d + 1, delta,
                                         derive_seed(seed, kSeedPhf));
    DesignMatrix A_q = random_cff(params.q, 1, r, delta, derive_seed(seed, kSeedCffA));
    DesignMatrix B_q = random_cff(params.q, s - 1, r, delta, derive_seed(seed, kSeedCffB));
    return learn_reduced(n, s, r, teacher, std::move(P), std::move(A_q), std::move(B_q));
}

} // namespace hyperlearn
