#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic.hpp"

// Character rings R(V_s) = Z_p[V^_s] with the additive Steinberg idempotent,
// transfers as induction, Adams operations, and the K- and j-theory
// complexes of the symmetric-power filtration.  Same flag conventions as the
// Burnside module: V_s enters V_{s+1} as the last s coordinates, so a
// transfer prepends the new coordinate, and the effective Borel on character
// indices is lower-triangular with distinguished line spanned by the last
// basis vector.

namespace su::reprings {

// A virtual character sum c_v chi_v, coefficients mod p^N, v coded in base p
// with the first coordinate least significant.
struct CharElem {
    std::uint32_t p = 3, N = 10;
    int s = 1;
    std::vector<std::uint64_t> coeff;  // size p^s

    static CharElem zero(std::uint32_t p, std::uint32_t N, int s);
    static CharElem chi(std::uint32_t p, std::uint32_t N, int s, int vcode);
    CharElem operator+(const CharElem& o) const;
    CharElem operator-(const CharElem& o) const;
    CharElem scaled(std::uint64_t c) const;
    bool operator==(const CharElem& o) const { return coeff == o.coeff; }
    bool is_zero() const;
};

// x * e_s, the signed Borel x Sigma_s average (orbit sums via stabilizer
// counting rather than raw enumeration).
CharElem steinberg_add(const CharElem& x);

// chi_v -> chi_{l v}.
CharElem psi_l(const CharElem& x, std::uint64_t l);

// Transfer R(V_s) -> R(V_{s+1}): chi_v -> sum_a chi_{(a,v)}, then e_{s+1}.
CharElem transfer_K(const CharElem& x);

// Named generators: alpha = chi_0, beta = sum_{b != 0} chi_b in R(V_1);
// gamma = sum_{b != 0} (chi_{b e_1} - chi_{b e_2}) in R(V_2).
CharElem gen_alpha(std::uint32_t p, std::uint32_t N);
CharElem gen_beta(std::uint32_t p, std::uint32_t N);
CharElem gen_gamma(std::uint32_t p, std::uint32_t N);

struct K0Result {
    int rank = 0;
    std::vector<std::uint32_t> divisor_valuations;
    bool generators_match = true;  // image span equals the named generators
};

// Rank of the image of e_s on R(V_s) over Z/p^N: (1, 2, 1, 0, 0) for s = 0..4.
K0Result k0_rank(int s, std::uint32_t p, std::uint32_t N);

struct ExactnessReport {
    bool m_exact = false;       // 0 -> K0 M(0) -> K0 M(1) -> K0 M(2) -> 0
    bool l_exact = false;       // 0 -> K0 L(0) -> K0 L(1) -> 0
    bool composite_zero = false;
    bool images_match = false;  // 1 -> alpha+beta, alpha -> gamma/(p+1), beta -> -gamma/(p+1)
};

ExactnessReport ktheory_complex_check(std::uint32_t p, std::uint32_t N);

struct PsiKernel {
    int rank = 0;  // expected (p^s - 1)/(p - 1)
    std::vector<CharElem> basis;
};

// Kernel of psi^l - 1 on rank-zero virtual characters, with the line basis.
PsiKernel psi_l_kernel(int s, std::uint32_t p, std::uint64_t l, std::uint32_t N);

struct JGroup {
    // [M(s), Omega^i j]: free_rank copies of Z_p plus one cyclic p-power part.
    int free_rank = 0;
    std::uint64_t torsion_order = 1;
    std::string generator;  // descriptive tag when known
};

JGroup j_groups(int s, int i, std::uint32_t p, std::uint64_t l, std::uint32_t N);

struct JComplexReport {
    int i = 0;
    std::vector<std::uint64_t> homology_orders;  // s = 0, 1, 2, 3
    bool exact = false;
    bool middle_map_matches = true;  // i = 0: transfer of the s=1 generator is -p/(p+1) gamma
    std::uint64_t l_rank_s1 = 0;     // [L(1), j] rank bookkeeping at i = 0
};

JComplexReport j_complex_homology(std::uint32_t p, std::uint64_t l, std::uint32_t N, int i);

// Smallest topological generator mod p^2.
std::uint64_t default_generator(std::uint32_t p);

}  // namespace su::reprings
