#pragma once

#include <cstddef>
#include <cstdint>

// Row-combination kernels for bit-packed GF(2) rows.  A scalar reference
// kernel always exists; on x86-64 an AVX2 variant is selected at runtime
// when the CPU supports it.  Both compute dst ^= src over nwords words.

namespace su::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

using XorRowsFn = void (*)(Word* dst, const Word* src, std::size_t nwords);

void xor_rows_scalar(Word* dst, const Word* src, std::size_t nwords);

// Dispatched entry point; resolved once on first use.
void xor_rows(Word* dst, const Word* src, std::size_t nwords);

// Name of the kernel the dispatcher picked ("scalar" or "avx2").
const char* active_kernel_name();

// For equivalence tests: every compiled kernel with its name.
struct KernelEntry {
    const char* name;
    XorRowsFn fn;
};
const KernelEntry* compiled_kernels(std::size_t* count);

}  // namespace su::f2
