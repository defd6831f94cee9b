#include "steenrod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "dl_classify.hpp"  // binom_parity

namespace su::steenrod {

int degree(const SqMonomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

bool admissible(const SqMonomial& m)
{
    for (std::size_t j = 0; j + 1 < m.size(); ++j)
        if (m[j] < 2 * m[j + 1]) return false;
    return true;
}

int excess(const SqMonomial& m)
{
    if (m.empty()) return 0;
    return m[0] - (degree(m) - m[0]);
}

bool suffix_dominant(const SqMonomial& m)
{
    int tail = 0;
    for (std::size_t j = m.size(); j-- > 0;) {
        if (m[j] - 1 < tail) return false;
        tail += m[j] - 1;
    }
    return true;
}

bool mono_less(const SqMonomial& a, const SqMonomial& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool SteenrodElement::homogeneous(int* deg_out) const
{
    if (terms_.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    int d = degree(terms_.front());
    for (const auto& t : terms_)
        if (degree(t) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

void SteenrodElement::add_term(SqMonomial m)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, mono_less);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, std::move(m));
}

bool SteenrodElement::operator==(const SteenrodElement& o) const
{
    return conv_ == o.conv_ && quot_ == o.quot_ && terms_ == o.terms_;
}

std::string mono_str(const SqMonomial& m)
{
    std::ostringstream os;
    os << "Sq[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << m[i];
    }
    os << ']';
    return os.str();
}

SqMonomial parse_mono(const std::string& s)
{
    auto lb = s.find('['), rb = s.rfind(']');
    if (s.substr(0, 2) != "Sq" || lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("bad monomial: " + s);
    SqMonomial m;
    std::string body = s.substr(lb + 1, rb - lb - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) m.push_back(std::stoi(tok));
    return m;
}

std::string SteenrodElement::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << '+';
        os << mono_str(terms_[i]);
    }
    return os.str();
}

namespace {

struct WordKey {
    std::vector<int> w;
    Sq0Convention conv;
    bool operator<(const WordKey& o) const
    {
        if (conv != o.conv) return conv < o.conv;
        return w < o.w;
    }
};

// GF(2) set of admissible words; cached across calls.
using MonoSet = std::vector<SqMonomial>;  // sorted (plain <), xor-combined

void set_flip(MonoSet& s, const SqMonomial& m)
{
    auto it = std::lower_bound(s.begin(), s.end(), m);
    if (it != s.end() && *it == m)
        s.erase(it);
    else
        s.insert(it, m);
}

void set_xor(MonoSet& s, const MonoSet& o)
{
    for (const auto& m : o)
        set_flip(s, m);
}

const MonoSet& reduce_word(const std::vector<int>& word, Sq0Convention conv)
{
    static std::map<WordKey, MonoSet> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find({word, conv});
        if (it != cache.end()) return it->second;
    }

    MonoSet result;
    std::size_t bad = word.size();
    for (std::size_t j = 0; j + 1 < word.size(); ++j) {
        if (word[j] < 2 * word[j + 1]) {
            bad = j;
            break;
        }
    }
    if (bad == word.size()) {
        result.push_back(word);
    } else {
        const int i = word[bad], j = word[bad + 1];
        const int kmin = (conv == Sq0Convention::Zero) ? 1 : 0;
        for (int k = kmin; 2 * k <= i; ++k) {
            if (!su::dl_classify::binom_parity(j - k - 1, i - 2 * k)) continue;
            std::vector<int> next;
            next.reserve(word.size());
            next.insert(next.end(), word.begin(), word.begin() + bad);
            next.push_back(i + j - k);
            if (k > 0) next.push_back(k);
            next.insert(next.end(), word.begin() + bad + 2, word.end());
            set_xor(result, reduce_word(next, conv));
        }
    }

    std::lock_guard<std::mutex> lk(mtx);
    return cache.emplace(WordKey{word, conv}, std::move(result)).first->second;
}

}  // namespace

SteenrodElement adem_reduce(const std::vector<int>& word, Sq0Convention conv, bool quotient_sq1)
{
    for (int i : word)
        if (i < 1) throw std::invalid_argument("Sq index must be >= 1");
    SteenrodElement out(conv, quotient_sq1);
    for (const auto& m : reduce_word(word, conv)) {
        if (quotient_sq1 && !m.empty() && m.back() == 1) continue;
        out.add_term(m);
    }
    return out;
}

const std::vector<SqMonomial>& basis(int degree, bool quotient_sq1)
{
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    static std::map<std::pair<int, bool>, std::vector<SqMonomial>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(degree, quotient_sq1);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<SqMonomial> out;
    SqMonomial cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            if (!cur.empty() || degree == 0) out.push_back(cur);
            if (degree == 0 && cur.empty()) {}
            return;
        }
        int lo = quotient_sq1 ? 2 : 1;
        for (int i = lo; i <= rem; ++i) {
            if (!cur.empty() && cur.back() < 2 * i) continue;
            cur.push_back(i);
            self(self, rem - i);
            cur.pop_back();
        }
    };
    if (degree == 0)
        out.push_back({});
    else
        rec(rec, degree);
    std::sort(out.begin(), out.end(), mono_less);
    return cache.emplace(key, std::move(out)).first->second;
}

SteenrodElement left_multiply(int k, const SteenrodElement& x)
{
    if (k < 1) throw std::invalid_argument("Sq index must be >= 1");
    SteenrodElement out(x.convention(), x.quotient_sq1());
    for (const auto& m : x.terms()) {
        std::vector<int> word;
        word.reserve(m.size() + 1);
        word.push_back(k);
        word.insert(word.end(), m.begin(), m.end());
        SteenrodElement part = adem_reduce(word, x.convention(), x.quotient_sq1());
        for (const auto& t : part.terms())
            out.add_term(t);
    }
    return out;
}

f2::F2Matrix left_mult_matrix(int k, int source_degree, Sq0Convention conv, bool quotient_sq1)
{
    const auto& src = basis(source_degree, quotient_sq1);
    const auto& tgt = basis(source_degree + k, quotient_sq1);
    f2::F2Matrix m(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        std::vector<int> word;
        word.push_back(k);
        word.insert(word.end(), src[c].begin(), src[c].end());
        SteenrodElement img = adem_reduce(word, conv, quotient_sq1);
        for (const auto& t : img.terms()) {
            auto it = std::lower_bound(tgt.begin(), tgt.end(), t, mono_less);
            m.set(static_cast<std::size_t>(it - tgt.begin()), c, true);
        }
    }
    return m;
}

}  // namespace su::steenrod
