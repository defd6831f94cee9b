#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// The mod-2 Dyer-Lashof algebra and its possible actions on F_2[u].
// Q-indices are kept unhalved (topological) throughout; the structure
// constants eps are indexed by the halved convention, Q^{2r} u = eps_r
// u^{r+1}, with explicit conversion at the call sites.

namespace su::dyer_lashof {

using DLMonomial = std::vector<int>;  // (i_1, ..., i_s), each >= 0

int dl_degree(const DLMonomial& m);
bool allowable(const DLMonomial& m);  // i_j <= 2 i_{j+1}
int dl_excess(const DLMonomial& m);   // i_1 - (i_2 + ... + i_s)

// GF(2) sum of allowable monomials (sorted, xor-combined).
using DLElement = std::vector<DLMonomial>;

// Allowable normal form of Q^{w_1}...Q^{w_k} via Q^i Q^j =
// sum_k C(k-j-1, 2k-i) Q^{i+j-k} Q^k for i > 2j.
DLElement dl_adem_reduce(const std::vector<int>& word);

struct PastCutoff : std::out_of_range {
    using std::out_of_range::out_of_range;
};

class EpsilonStructure {
  public:
    EpsilonStructure() = default;
    // bits[r] = eps_r; requires eps_0 = 0, eps_1 = 1 when size permits.
    explicit EpsilonStructure(std::vector<std::uint8_t> bits, std::string name = "");

    int cutoff() const { return static_cast<int>(bits_.size()) - 1; }
    // Queries beyond the cutoff throw PastCutoff, never silently read zero.
    int at(int r) const;
    const std::string& name() const { return name_; }
    std::string bitstring() const;  // "eps=01..." indexed from r = 0

    static EpsilonStructure preset(const std::string& name, int cutoff);  // segal|bllmm|thh|odd
    static EpsilonStructure parse(const std::string& text);               // "eps=0110..."

    bool operator==(const EpsilonStructure& o) const { return bits_ == o.bits_; }

  private:
    std::vector<std::uint8_t> bits_;
    std::string name_;
};

// Coefficient c with Q^{2r}(u^n) = c u^{n+r}, via the parity rule: sum over
// the ways to split r as sum_{i in bits(n)} a_i 2^i of prod eps_{a_i}.
int act_on_power(const EpsilonStructure& eps, int r, int n);

// Composite action Q^{w_1}(Q^{w_2}(...u^n)).  Odd indices annihilate.
// Returns the exponent of the surviving power of u, or nullopt for zero.
std::optional<int> act_word(const EpsilonStructure& eps, const std::vector<int>& word, int n);

// Coefficient c with Q^{2r}(du) = c u^r du.
int kahler_action(const EpsilonStructure& eps, int r);

}  // namespace su::dyer_lashof
