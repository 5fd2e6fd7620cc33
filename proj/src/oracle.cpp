#include "hyperlearn/oracle.hpp"

#include "hyperlearn/errors.hpp"

namespace hyperlearn {

Teacher::Teacher(Mdnf hidden, bool strict)
    : hidden_(hidden.reduced()), strict_(strict) {}

std::vector<uint8_t> Teacher::query_batch(std::span<const Assignment> batch) {
    if (strict_ && sealed_)
        throw NonAdaptivityViolation("strict teacher already answered its batch");
    sealed_ = true;
    ++batches_;
    queries_ += batch.size();
    std::vector<uint8_t> answers;
    answers.reserve(batch.size());
    for (const Assignment& a : batch)
        answers.push_back(hidden_.eval(a) ? 1 : 0);
    return answers;
}

bool Teacher::edge_detecting_query(std::span<const uint32_t> vertex_set) {
    Assignment a(var_count());
    for (uint32_t v : vertex_set) a.set(v, true);
    const Assignment batch[1] = {a};
    return query_batch(batch)[0] != 0;
}

} // namespace hyperlearn
