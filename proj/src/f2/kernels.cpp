#include "f2/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define SU_F2_X86 1
#include <immintrin.h>
#else
#define SU_F2_X86 0
#endif

namespace su::f2 {

void xor_rows_scalar(Word* dst, const Word* src, std::size_t nwords)
{
    for (std::size_t i = 0; i < nwords; ++i)
        dst[i] ^= src[i];
}

#if SU_F2_X86
__attribute__((target("avx2"))) static void xor_rows_avx2(Word* dst, const Word* src, std::size_t nwords)
{
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < nwords; ++i)
        dst[i] ^= src[i];
}
#endif

static const KernelEntry g_kernels[] = {
    {"scalar", &xor_rows_scalar},
#if SU_F2_X86
    {"avx2", &xor_rows_avx2},
#endif
};

const KernelEntry* compiled_kernels(std::size_t* count)
{
    *count = sizeof(g_kernels) / sizeof(g_kernels[0]);
    return g_kernels;
}

struct Dispatch {
    XorRowsFn fn;
    const char* name;
    Dispatch()
    {
        fn = &xor_rows_scalar;
        name = "scalar";
#if SU_F2_X86
        if (__builtin_cpu_supports("avx2")) {
            fn = &xor_rows_avx2;
            name = "avx2";
        }
#endif
    }
};

static const Dispatch& dispatch()
{
    static const Dispatch d;
    return d;
}

void xor_rows(Word* dst, const Word* src, std::size_t nwords)
{
    dispatch().fn(dst, src, nwords);
}

const char* active_kernel_name()
{
    return dispatch().name;
}

}  // namespace su::f2
