#include "dl_classify.hpp"

#include <algorithm>

namespace su::dl_classify {

using su::dyer_lashof::EpsilonStructure;

int a_nq(int n, int q)
{
    int acc = 0;
    for (int k = 0; k <= n; ++k)
        acc ^= binom_parity(k, n - k) & binom_parity(n + 3LL * q, 2LL * k + 2 * q + 1);
    return acc;
}

int b_nq(int n, int q)
{
    return binom_parity(n + 3LL * q, 2LL * q - 1);
}

bool check_identity_anq(int n, int q)
{
    return a_nq(n, q) == b_nq(n, q);
}

int adem_instance_holds(const EpsilonStructure& eps, int r, int s)
{
    // Q^{2r} Q^{2s} u with r > 2s.  Left side by Cartan, right side through
    // the Adem expansion; both reduce to sums of eps-products.
    try {
        int lhs = eps.at(s) ? su::dyer_lashof::act_on_power(eps, r, s + 1) : 0;
        int rhs = 0;
        for (int i = s + 1; i <= r - s - 1; ++i) {
            if (!binom_parity(i - s - 1, 2LL * i - r)) continue;
            if (!eps.at(i)) continue;
            rhs ^= su::dyer_lashof::act_on_power(eps, r + s - i, i + 1);
        }
        return lhs == rhs ? 1 : 0;
    } catch (const su::dyer_lashof::PastCutoff&) {
        return -1;
    }
}

std::vector<std::string> structural_constraints(const EpsilonStructure& eps)
{
    std::vector<std::string> bad;
    const int R = eps.cutoff();

    if (R >= 2 && eps.at(2) == 0) {
        for (int r = 2; r <= R; r += 2)
            if (eps.at(r)) {
                bad.push_back("even-vanishing: eps_2 = 0 but eps_" + std::to_string(r) + " = 1");
                break;
            }
        for (int r = 3; 2 * r + 1 <= R; r += 2)
            if ((eps.at(3) & eps.at(r)) != eps.at(2 * r + 1)) {
                bad.push_back("doubling: eps_3 eps_" + std::to_string(r) + " != eps_" + std::to_string(2 * r + 1));
                break;
            }
    }

    // Vanishing induction on residues mod 2^s.
    for (int s = 1; (1 << (s + 1)) + 1 <= R; ++s) {
        bool hyp = true;
        for (int r = 2; r <= R; ++r)
            if (r % (1 << s) != 1 && eps.at(r)) hyp = false;
        if (hyp && eps.at((1 << s) + 1) == 0) {
            for (int r = 2; r <= R; ++r)
                if (r % (1 << (s + 1)) != 1 && eps.at(r)) {
                    bad.push_back("induction(i) fails at s = " + std::to_string(s));
                    break;
                }
        }
        bool hyp2 = true;
        for (int r = 2; r <= R; ++r)
            if (r % (1 << (s + 1)) != 1 && eps.at(r)) hyp2 = false;
        if (hyp2 && eps.at((1 << (s + 1)) + 1) != 0)
            bad.push_back("induction(ii) fails at s = " + std::to_string(s));
    }

    // Constant zeta classes: under eps_2 = 0, eps_3 = 1, every odd index with
    // the same even label shares one value, and all labels >= 2 agree.
    if (R >= 3 && eps.at(2) == 0 && eps.at(3) == 1) {
        auto label = [](int x) {
            while (x % 2 == 1)
                x = (x - 1) / 2;
            return x;
        };
        int zeta = -1;
        bool ok = true;
        for (int r = 3; r <= R && ok; r += 2) {
            if (label(r) == 0) {
                if (eps.at(r) != 1) ok = false;
            } else {
                if (zeta < 0)
                    zeta = eps.at(r);
                else if (eps.at(r) != zeta)
                    ok = false;
            }
        }
        if (!ok) bad.push_back("zeta classes not constant");
    }
    return bad;
}

ClassificationReport enumerate_structures(int cutoff)
{
    if (cutoff < 4) throw std::invalid_argument("cutoff must be >= 4");
    ClassificationReport rep;
    rep.cutoff = cutoff;

    // Branch candidates forced by eps_0 = 0, eps_1 = 1 and the case tree on
    // (eps_2, eps_3, zeta); each branch pins the whole bitstring.
    std::vector<EpsilonStructure> branch = {
        EpsilonStructure::preset("bllmm", cutoff),  // eps_2 = 1
        EpsilonStructure::preset("segal", cutoff),  // eps_2 = 0, eps_3 = 0
        EpsilonStructure::preset("thh", cutoff),    // eps_2 = 0, eps_3 = 1, zeta = 0
        EpsilonStructure::preset("odd", cutoff),    // eps_2 = 0, eps_3 = 1, zeta = 1
    };

    for (const auto& eps : branch) {
        CandidateReport cr;
        cr.eps = eps;
        cr.name = eps.name();
        for (int s = 1; s <= cutoff; ++s) {
            for (int r = 2 * s + 1; r + s <= cutoff; ++r) {
                int v = adem_instance_holds(eps, r, s);
                if (v == 0) cr.violations.push_back({2 * r, 2 * s});
                if (v == -1) ++cr.skipped;
                if (v >= 0) ++rep.instances_checked;
            }
        }
        if (cr.violations.empty() && structural_constraints(eps).empty())
            rep.survivors.push_back(std::move(cr));
        else
            rep.eliminated.push_back(std::move(cr));
    }
    return rep;
}

}  // namespace su::dl_classify
