#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

// Exact arithmetic in Z/p^N for small p and N (one machine word), plus the
// unit-group operations the Burnside and representation-ring modules need:
// unique fractional powers of principal units and valuations of 1 - l^i.

namespace su::padic {

struct RootDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp);  // overflow-unchecked small cases

class PadicInt {
  public:
    PadicInt() = default;
    PadicInt(std::uint32_t p, std::uint32_t N, std::uint64_t value);
    static PadicInt from_signed(std::uint32_t p, std::uint32_t N, long long value);

    std::uint32_t prime() const { return p_; }
    std::uint32_t precision() const { return N_; }
    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return mod_; }

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    bool operator==(const PadicInt& o) const;

    bool is_unit() const { return r_ % p_ != 0; }
    PadicInt inverse() const;        // unit only
    PadicInt pow(long long e) const; // negative e inverts first
    // p-adic valuation of the residue; N when the residue is 0 mod p^N.
    std::uint32_t valuation() const;

  private:
    PadicInt at_precision(std::uint32_t N) const;
    friend PadicInt align(const PadicInt& a, const PadicInt& b, PadicInt& bb);

    std::uint32_t p_ = 2, N_ = 1;
    std::uint64_t mod_ = 2, r_ = 0;
};

// The unique y in the principal units with y^den = x^num.  Preconditions:
// den coprime to p; x = 1 mod p for odd p; for p = 2, den odd and x = 1 mod 4
// (or any odd x, with the sign riding along since den is odd).
PadicInt unit_pow(const PadicInt& x, long long num, long long den);

// v_p(1 - l^i) for a topological generator l: 0 when (p-1) does not divide i,
// else v_p(i) + 1.  Computed from the residue, not the formula.  Throws
// NotAGenerator unless l generates (Z/p)^x and l^{p-1} != 1 mod p^2.
std::uint32_t valuation_one_minus_power(std::uint32_t p, std::uint64_t l, std::uint64_t i,
                                        std::uint32_t N = 12);

// Order of the quotient of principal-unit subgroups with valuations a >= b >= 1.
std::uint64_t quotient_order(std::uint32_t p, std::uint32_t a, std::uint32_t b);

// Checks l is a topological generator (no throw).
bool is_topological_generator(std::uint32_t p, std::uint64_t l);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// p-adic logarithm of a principal unit (u = 1 mod p, p odd; u = 1 mod 4 for
// p = 2), exact mod p^N, and its inverse exponential on p Z / 4 Z_2.
std::uint64_t plog(std::uint32_t p, std::uint32_t N, std::uint64_t u);
std::uint64_t pexp(std::uint32_t p, std::uint32_t N, std::uint64_t x);

// Discrete log of a principal unit to base 1+p (base 5 for p = 2), i.e. the
// additive coordinate in (1+pZ)/p^N; defined mod p^{N-1} (2^{N-2} at p = 2).
std::uint64_t unit_dlog(std::uint32_t p, std::uint32_t N, std::uint64_t u);

// Smith-style reduction of an integer matrix over Z/p^N.  Returns the
// valuations of the elementary divisors in ascending order; a valuation of N
// stands for a divisor that vanishes at this precision.
struct SnfResult {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> valuations;
    // Orders of kernel and image of the induced map (Z/p^N)^cols -> (Z/p^N)^rows.
    std::uint64_t kernel_order(std::uint32_t p, std::uint32_t N) const;
    std::uint64_t image_order(std::uint32_t p, std::uint32_t N) const;
    std::uint64_t cokernel_order(std::uint32_t p, std::uint32_t N) const;
};
SnfResult snf_valuations(std::vector<std::vector<long long>> m, std::uint32_t p, std::uint32_t N);

}  // namespace su::padic
