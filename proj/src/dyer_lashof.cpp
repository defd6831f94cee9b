#include "dyer_lashof.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dl_classify.hpp"

namespace su::dyer_lashof {

int dl_degree(const DLMonomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

bool allowable(const DLMonomial& m)
{
    for (std::size_t j = 0; j + 1 < m.size(); ++j)
        if (m[j] > 2 * m[j + 1]) return false;
    return true;
}

int dl_excess(const DLMonomial& m)
{
    if (m.empty()) return 0;
    return m[0] - (dl_degree(m) - m[0]);
}

namespace {

void set_flip(DLElement& s, const DLMonomial& m)
{
    auto it = std::lower_bound(s.begin(), s.end(), m);
    if (it != s.end() && *it == m)
        s.erase(it);
    else
        s.insert(it, m);
}

}  // namespace

DLElement dl_adem_reduce(const std::vector<int>& word)
{
    for (int i : word)
        if (i < 0) throw std::invalid_argument("Q index must be >= 0");

    static std::map<std::vector<int>, DLElement> cache;
    auto it = cache.find(word);
    if (it != cache.end()) return it->second;

    DLElement result;
    std::size_t bad = word.size();
    for (std::size_t j = 0; j + 1 < word.size(); ++j) {
        if (word[j] > 2 * word[j + 1]) {
            bad = j;
            break;
        }
    }
    if (bad == word.size()) {
        result.push_back(word);
    } else {
        const int i = word[bad], j = word[bad + 1];
        for (int k = 0; 2 * k <= i + j; ++k) {
            if (!su::dl_classify::binom_parity(k - j - 1, 2 * k - i)) continue;
            std::vector<int> next;
            next.reserve(word.size());
            next.insert(next.end(), word.begin(), word.begin() + bad);
            next.push_back(i + j - k);
            next.push_back(k);
            next.insert(next.end(), word.begin() + bad + 2, word.end());
            DLElement sub = dl_adem_reduce(next);
            for (const auto& m : sub)
                set_flip(result, m);
        }
    }
    cache[word] = result;
    return result;
}

EpsilonStructure::EpsilonStructure(std::vector<std::uint8_t> bits, std::string name)
    : bits_(std::move(bits)), name_(std::move(name))
{
    if (!bits_.empty() && bits_[0] != 0)
        throw std::invalid_argument("eps_0 must be 0");
    if (bits_.size() > 1 && bits_[1] != 1)
        throw std::invalid_argument("eps_1 must be 1");
}

int EpsilonStructure::at(int r) const
{
    if (r < 0 || r > cutoff())
        throw PastCutoff("eps_" + std::to_string(r) + " beyond cutoff " + std::to_string(cutoff()));
    return bits_[static_cast<std::size_t>(r)];
}

std::string EpsilonStructure::bitstring() const
{
    std::string s = "eps=";
    for (auto b : bits_)
        s += static_cast<char>('0' + b);
    return s;
}

EpsilonStructure EpsilonStructure::preset(const std::string& name, int cutoff)
{
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(cutoff) + 1, 0);
    auto is_pow2 = [](int x) { return x > 0 && (x & (x - 1)) == 0; };
    for (int r = 1; r <= cutoff; ++r) {
        if (name == "segal")
            bits[r] = (r == 1);
        else if (name == "bllmm")
            bits[r] = 1;
        else if (name == "thh")
            bits[r] = is_pow2(r + 1);
        else if (name == "odd")
            bits[r] = (r % 2 == 1);
        else
            throw std::invalid_argument("unknown preset: " + name);
    }
    return EpsilonStructure(std::move(bits), name);
}

EpsilonStructure EpsilonStructure::parse(const std::string& text)
{
    std::string body = text;
    if (body.rfind("eps=", 0) == 0) body = body.substr(4);
    std::vector<std::uint8_t> bits;
    for (char c : body) {
        if (c != '0' && c != '1') throw std::invalid_argument("bad eps bitstring");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return EpsilonStructure(std::move(bits));
}

int act_on_power(const EpsilonStructure& eps, int r, int n)
{
    if (r < 0) return 0;
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    // Split r over the set bits of n: r = sum a_i 2^i, contribute prod eps_{a_i}.
    std::vector<int> shifts;
    for (int i = 0; (1 << i) <= n; ++i)
        if (n & (1 << i)) shifts.push_back(i);
    int total = 0;
    auto rec = [&](auto&& self, std::size_t idx, int rem) -> int {
        if (idx == shifts.size()) return rem == 0 ? 1 : 0;
        int acc = 0;
        int step = 1 << shifts[idx];
        for (int a = 0; a * step <= rem; ++a)
            if (eps.at(a)) acc ^= self(self, idx + 1, rem - a * step);
        return acc;
    };
    total = rec(rec, 0, r);
    return total;
}

std::optional<int> act_word(const EpsilonStructure& eps, const std::vector<int>& word, int n)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    int exp = n;
    for (std::size_t j = word.size(); j-- > 0;) {
        int q = word[j];
        if (q % 2 != 0) return std::nullopt;  // odd operations kill even-degree powers
        int r = q / 2;
        if (!act_on_power(eps, r, exp)) return std::nullopt;
        exp += r;
    }
    return exp;
}

int kahler_action(const EpsilonStructure& eps, int r)
{
    if (r < 0) return 0;
    return (eps.at(r) & (r + 1)) & 1;
}

}  // namespace su::dyer_lashof
