#include "hyperlearn/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace hyperlearn {
namespace {

const BitKernels* best_kernels() {
#if defined(HYPERLEARN_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
#if defined(HYPERLEARN_HAVE_NEON)
    return &neon_kernels();
#endif
    return &scalar_kernels();
}

const BitKernels* pick() {
    const char* want = std::getenv("HYPERLEARN_KERNEL");
    if (!want || !*want) return best_kernels();
    for (const BitKernels* k : available_kernels())
        if (std::strcmp(k->name, want) == 0) return k;
    std::fprintf(stderr, "hyperlearn: kernel '%s' unavailable, using scalar\n", want);
    return &scalar_kernels();
}

} // namespace

const BitKernels& active_kernels() {
    static const BitKernels* chosen = pick();
    return *chosen;
}

std::vector<const BitKernels*> available_kernels() {
    std::vector<const BitKernels*> out;
    out.push_back(&scalar_kernels());
#if defined(HYPERLEARN_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) out.push_back(&avx2_kernels());
#endif
#if defined(HYPERLEARN_HAVE_NEON)
    out.push_back(&neon_kernels());
#endif
    return out;
}

} // namespace hyperlearn
