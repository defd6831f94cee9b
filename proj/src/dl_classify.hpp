#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyer_lashof.hpp"

// Classification of the Dyer-Lashof module structures on F_2[u] with
// Q^{2r} u = eps_r u^{r+1}, plus the binomial-parity identities the
// classification rests on.

namespace su::dl_classify {

// C(a, b) mod 2 by bitwise containment; 0 when b < 0 or b > a.
inline int binom_parity(long long a, long long b)
{
    if (b < 0 || b > a || a < 0) return 0;
    return ((~a & b) == 0) ? 1 : 0;
}

// a_{n,q} = sum_k C(k, n-k) C(n+3q, 2k+2q+1) mod 2.
int a_nq(int n, int q);
// b_{n,q} = C(n+3q, 2q-1) mod 2.
int b_nq(int n, int q);
// a_{n,q} == b_{n,q} mod 2.
bool check_identity_anq(int n, int q);

struct AdemInstance {
    int a, b;  // the inadmissible pair Q^a Q^b, a > 2b, acting on u
};

struct CandidateReport {
    su::dyer_lashof::EpsilonStructure eps;
    std::string name;
    std::vector<AdemInstance> violations;
    int skipped = 0;  // instances whose evaluation exceeded the cutoff
};

struct ClassificationReport {
    int cutoff = 0;
    std::vector<CandidateReport> survivors;
    std::vector<CandidateReport> eliminated;  // branch candidates that failed
    int instances_checked = 0;
};

// Checks one Adem instance Q^{2r} Q^{2s} u against the structure constants.
// Returns +1 satisfied, 0 violated, -1 not evaluable within the cutoff.
int adem_instance_holds(const su::dyer_lashof::EpsilonStructure& eps, int r, int s);

// Violated derived relations, by name, on the stored range.  Empty iff all
// of: even-vanishing under eps_2 = 0; eps_3 eps_r = eps_{2r+1} (odd r >= 3,
// eps_2 = 0); the mod-2^s vanishing induction; constant zeta classes when
// eps_3 = 1.
std::vector<std::string> structural_constraints(const su::dyer_lashof::EpsilonStructure& eps);

// Branch on (eps_2, eps_3, zeta) as the constraints force, then verify each
// branch candidate against every Adem instance evaluable within the cutoff.
ClassificationReport enumerate_structures(int cutoff);

}  // namespace su::dl_classify
