#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "padic.hpp"

// Burnside rings A(V_s) of elementary abelian p-groups through their tables
// of marks: ghost vectors, the multiplicative norm, the Steinberg idempotent
// acting on units, and the unit complexes built from them.
//
// Conventions, fixed throughout: V_s sits inside V_{s+1} as the last s
// coordinates, and the Steinberg products run over the lower-triangular
// Borel, whose fixed flag starts at the last-coordinate line.  That aligns
// the distinguished line of the Steinberg formula with the image of V_s,
// which the closed-form norm computations require.

namespace su::burnside {

struct NotInImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Matrix = std::vector<std::vector<int>>;  // s x s over F_p

// All subspaces of F_p^s, id-indexed; id 0 is the zero subspace and ids are
// sorted by (dimension, member list).
class SubspaceLattice {
  public:
    SubspaceLattice(std::uint32_t p, int s);

    std::uint32_t prime() const { return p_; }
    int ambient_dim() const { return s_; }
    int count() const { return static_cast<int>(members_.size()); }
    int dim(int id) const { return dims_[id]; }
    int zero_id() const { return 0; }
    int full_id() const { return count() - 1; }
    const std::vector<int>& members(int id) const { return members_[id]; }  // point codes, sorted
    bool contains(int big, int small) const;                                // W_small <= W_big
    int apply(const Matrix& g, int id) const;                               // image subspace
    int id_of_members(std::vector<int> pts) const;

    // Intersection with the last-coordinates copy of F_p^{sub_s}, as an id in
    // that smaller lattice.
    int intersect_last(const SubspaceLattice& small, int id) const;

    // Line spanned by a point code.
    int line_of(int point) const;

  private:
    std::uint32_t p_;
    int s_;
    std::vector<std::vector<int>> members_;
    std::vector<int> dims_;
    std::map<std::vector<int>, int> index_;
};

const SubspaceLattice& lattice(std::uint32_t p, int s);

struct GhostVector {
    std::uint32_t p = 3, N = 10;
    int s = 1;
    std::vector<std::uint64_t> value;  // per subspace id, residues mod p^N

    bool operator==(const GhostVector& o) const { return value == o.value; }
};

struct BurnsideElem {
    std::uint32_t p = 3, N = 10;
    int s = 1;
    std::vector<std::uint64_t> coeff;  // per subspace id

    static BurnsideElem one(std::uint32_t p, std::uint32_t N, int s);
    BurnsideElem operator*(const BurnsideElem& o) const;
    BurnsideElem operator+(const BurnsideElem& o) const;
    // Right action of g: coefficient of [V/W] moves to [V/g^{-1}W].
    BurnsideElem acted(const Matrix& g) const;
};

GhostVector marks(const BurnsideElem& x);
BurnsideElem inverse_marks(const GhostVector& g);  // NotInImage on failed division

// Multiplicative norm A(V_s) -> A(V_{s+1}), ghostwise
// phi(NX)(W) = phi(X)(W cap V_s)^{c(W)}, c(W) = |G||W cap V_s| / (|W||V_s|).
GhostVector norm(const GhostVector& x);

// Signed Borel x Sigma_s product followed by the [GL_s:U_s]-th root; x must
// have principal-unit marks for odd p (any odd marks at p = 2).
GhostVector steinberg_mult(const GhostVector& x);

// prod_{i=1..s} (p^i - 1).
std::uint64_t gl_mod_unipotent_index(std::uint32_t p, int s);

// e_s * e_s == e_s in (Z/p^N)[GL_s(F_p)] by direct convolution.
bool steinberg_idempotent_check(int s, std::uint32_t p, std::uint32_t N);

struct UnitsComplexReport {
    std::uint32_t p = 3, N = 10;
    char variant = 'M';
    // Homology orders at s = 0, 1, 2, 3 as powers of p (order, not exponent).
    std::vector<std::uint64_t> homology_orders;
    // Exponent of the s = 2 homology group (distinguishes Z/4 from Z/2 x Z/2).
    std::uint64_t s2_exponent = 1;
};

// The norm-then-Steinberg complex on unit groups for odd p (variant M), and
// the reduced-transfer complex (variant L).
UnitsComplexReport units_complex_homology(std::uint32_t p, std::uint32_t N, char variant);

// p = 2 analogue; the complex whose homology carries the nontrivial answer
// is labelled L here, matching the statement it verifies.
UnitsComplexReport p2_units_complex(std::uint32_t N);

// t(X) parameter of X * e_2 (the mark at the distinguished line).
std::uint64_t steinberg_t_parameter(const GhostVector& x);

}  // namespace su::burnside
