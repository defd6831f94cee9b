#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2/bitmat.hpp"

// The mod-2 algebra generated by Sq^i under Adem rewriting.  Two conventions
// coexist: Sq0Convention::One is the classical Steenrod algebra; ::Zero is
// the variant where the Sq^0-term of every Adem expansion is dropped (the
// algebra acting in the co-Koszul complexes).  Elements carry their
// convention and a quotient flag for working mod the left ideal A.Sq^1.

namespace su::steenrod {

using SqMonomial = std::vector<int>;  // (i_1, ..., i_s), each >= 1; empty = unit

enum class Sq0Convention : std::uint8_t { One, Zero };

int degree(const SqMonomial& m);
bool admissible(const SqMonomial& m);               // i_j >= 2 i_{j+1}
int excess(const SqMonomial& m);                    // i_1 - (i_2 + ... + i_s)
// The suffix-dominance predicate i_j - 1 >= sum of later (i_k - 1); kept for
// audit next to the admissible basis, never asserted equal to it degreewise.
bool suffix_dominant(const SqMonomial& m);

// Global monomial order: length, then lexicographic.
bool mono_less(const SqMonomial& a, const SqMonomial& b);

struct ConventionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SteenrodElement {
  public:
    SteenrodElement() = default;
    SteenrodElement(Sq0Convention conv, bool quotient_sq1) : conv_(conv), quot_(quotient_sq1) {}

    Sq0Convention convention() const { return conv_; }
    bool quotient_sq1() const { return quot_; }
    const std::vector<SqMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool homogeneous(int* deg_out = nullptr) const;

    void add_term(SqMonomial m);  // symmetric difference; m must be admissible
    bool operator==(const SteenrodElement& o) const;

    std::string str() const;  // "Sq[5,2]+Sq[7]" style; "0" when zero

  private:
    Sq0Convention conv_ = Sq0Convention::One;
    bool quot_ = false;
    std::vector<SqMonomial> terms_;  // sorted by mono_less, admissible
};

// Admissible normal form of Sq^{w_1}...Sq^{w_k}.  Terminates; each rewrite
// strictly lowers the standard well-ordering on words.
SteenrodElement adem_reduce(const std::vector<int>& word, Sq0Convention conv, bool quotient_sq1 = false);

// All admissible monomials of the given degree, sorted by mono_less; with
// quotient_sq1, those with trailing index 1 are excluded (basis of A/A.Sq^1).
// Cached; safe for concurrent readers.
const std::vector<SqMonomial>& basis(int degree, bool quotient_sq1);

SteenrodElement left_multiply(int k, const SteenrodElement& x);

// Matrix of Sq^k . (-) from basis(d, quotient) to basis(d + k, quotient),
// columns indexed by the sorted source basis.
f2::F2Matrix left_mult_matrix(int k, int source_degree, Sq0Convention conv = Sq0Convention::One,
                              bool quotient_sq1 = true);

std::string mono_str(const SqMonomial& m);
SqMonomial parse_mono(const std::string& s);  // "Sq[8,4,2]" / "Sq[]" for the unit

}  // namespace su::steenrod
