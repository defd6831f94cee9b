#include "reprings.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace su::reprings {

using padic::mod_inverse;
using padic::mod_mul;
using padic::mod_pow;
using padic::pow_u64;

namespace {

int ipow(int b, int e)
{
    int acc = 1;
    while (e--)
        acc *= b;
    return acc;
}

std::vector<int> decode(std::uint32_t p, int s, int code)
{
    std::vector<int> v(s);
    for (int i = 0; i < s; ++i) {
        v[i] = code % static_cast<int>(p);
        code /= static_cast<int>(p);
    }
    return v;
}

int encode(std::uint32_t p, const std::vector<int>& v)
{
    int code = 0, mult = 1;
    for (int c : v) {
        code += c * mult;
        mult *= static_cast<int>(p);
    }
    return code;
}

}  // namespace

CharElem CharElem::zero(std::uint32_t p, std::uint32_t N, int s)
{
    CharElem e;
    e.p = p;
    e.N = N;
    e.s = s;
    e.coeff.assign(static_cast<std::size_t>(ipow(static_cast<int>(p), s)), 0);
    return e;
}

CharElem CharElem::chi(std::uint32_t p, std::uint32_t N, int s, int vcode)
{
    CharElem e = zero(p, N, s);
    e.coeff[static_cast<std::size_t>(vcode)] = 1;
    return e;
}

CharElem CharElem::operator+(const CharElem& o) const
{
    CharElem r = *this;
    std::uint64_t mod = pow_u64(p, N);
    for (std::size_t i = 0; i < coeff.size(); ++i)
        r.coeff[i] = (coeff[i] + o.coeff[i]) % mod;
    return r;
}

CharElem CharElem::operator-(const CharElem& o) const
{
    CharElem r = *this;
    std::uint64_t mod = pow_u64(p, N);
    for (std::size_t i = 0; i < coeff.size(); ++i)
        r.coeff[i] = (coeff[i] + mod - o.coeff[i]) % mod;
    return r;
}

CharElem CharElem::scaled(std::uint64_t c) const
{
    CharElem r = *this;
    std::uint64_t mod = pow_u64(p, N);
    for (auto& x : r.coeff)
        x = mod_mul(x, c % mod, mod);
    return r;
}

bool CharElem::is_zero() const
{
    for (auto x : coeff)
        if (x) return false;
    return true;
}

namespace {

// Orbit data of the lower-triangular Borel acting on vector codes, with the
// orbit multiplicity |B| / |orbit|, and the signed symmetric-group sweep.
struct SteinbergData {
    // For each code: list of (code', signed count) for e_s applied to chi_v,
    // scaled by [GL_s:U_s]^{-1} at use time.
    std::vector<std::map<int, long long>> terms;
};

std::uint64_t borel_order(std::uint32_t p, int s)
{
    std::uint64_t acc = 1;
    for (int i = 0; i < s; ++i)
        acc *= (p - 1);
    for (int i = 0; i < s * (s - 1) / 2; ++i)
        acc *= p;
    return acc;
}

const SteinbergData& steinberg_data(std::uint32_t p, int s)
{
    static std::map<std::pair<std::uint32_t, int>, SteinbergData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(p, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int n = ipow(static_cast<int>(p), s);
    SteinbergData data;
    data.terms.resize(n);

    // Generators of the lower-triangular group acting on coordinates:
    // scale one coordinate by a unit, or add coordinate j into i > j.
    auto apply_scale = [&](std::vector<int> v, int i, int d) {
        v[i] = (v[i] * d) % static_cast<int>(p);
        return v;
    };
    auto apply_add = [&](std::vector<int> v, int i, int j) {
        v[i] = (v[i] + v[j]) % static_cast<int>(p);
        return v;
    };

    std::vector<int> perm_base(s);
    std::iota(perm_base.begin(), perm_base.end(), 0);

    std::uint64_t bord = borel_order(p, s);

    for (int code = 0; code < n; ++code) {
        // Borel orbit by BFS.
        std::set<int> orbit = {code};
        std::vector<int> queue = {code};
        while (!queue.empty()) {
            int c = queue.back();
            queue.pop_back();
            auto v = decode(p, s, c);
            for (int i = 0; i < s; ++i) {
                for (std::uint32_t d = 2; d < p; ++d) {
                    int c2 = encode(p, apply_scale(v, i, static_cast<int>(d)));
                    if (orbit.insert(c2).second) queue.push_back(c2);
                }
                for (int j = 0; j < i; ++j) {
                    int c2 = encode(p, apply_add(v, i, j));
                    if (orbit.insert(c2).second) queue.push_back(c2);
                }
            }
        }
        long long mult = static_cast<long long>(bord / orbit.size());
        // Signed symmetric-group sweep over each orbit element.
        auto perm = perm_base;
        for (int w : orbit) {
            auto v = decode(p, s, w);
            std::sort(perm.begin(), perm.end());
            do {
                int inv = 0;
                for (int i = 0; i < s; ++i)
                    for (int j = i + 1; j < s; ++j)
                        if (perm[i] > perm[j]) ++inv;
                std::vector<int> pv(s);
                for (int i = 0; i < s; ++i)
                    pv[perm[i]] = v[i];
                data.terms[code][encode(p, pv)] += (inv % 2) ? -mult : mult;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return cache.emplace(key, std::move(data)).first->second;
}

}  // namespace

CharElem steinberg_add(const CharElem& x)
{
    const auto& data = steinberg_data(x.p, x.s);
    std::uint64_t mod = pow_u64(x.p, x.N);
    std::uint64_t idx = 1;
    for (int i = 1; i <= x.s; ++i)
        idx *= pow_u64(x.p, static_cast<std::uint32_t>(i)) - 1;
    std::uint64_t cinv = mod_inverse(idx % mod, mod);

    CharElem out = CharElem::zero(x.p, x.N, x.s);
    for (std::size_t v = 0; v < x.coeff.size(); ++v) {
        if (x.coeff[v] == 0) continue;
        for (const auto& [w, cnt] : data.terms[v]) {
            if (cnt == 0) continue;
            std::uint64_t c = static_cast<std::uint64_t>(cnt > 0 ? cnt : -cnt) % mod;
            std::uint64_t term = mod_mul(mod_mul(x.coeff[v], c, mod), cinv, mod);
            if (cnt < 0) term = (mod - term) % mod;
            out.coeff[static_cast<std::size_t>(w)] = (out.coeff[static_cast<std::size_t>(w)] + term) % mod;
        }
    }
    return out;
}

CharElem psi_l(const CharElem& x, std::uint64_t l)
{
    CharElem out = CharElem::zero(x.p, x.N, x.s);
    for (std::size_t v = 0; v < x.coeff.size(); ++v) {
        if (x.coeff[v] == 0) continue;
        auto vec = decode(x.p, x.s, static_cast<int>(v));
        for (auto& c : vec)
            c = static_cast<int>((static_cast<std::uint64_t>(c) * l) % x.p);
        out.coeff[static_cast<std::size_t>(encode(x.p, vec))] =
            (out.coeff[static_cast<std::size_t>(encode(x.p, vec))] + x.coeff[v]) % pow_u64(x.p, x.N);
    }
    return out;
}

CharElem transfer_K(const CharElem& x)
{
    CharElem up = CharElem::zero(x.p, x.N, x.s + 1);
    const int pn = ipow(static_cast<int>(x.p), x.s);
    for (int v = 0; v < pn; ++v) {
        if (x.coeff[static_cast<std::size_t>(v)] == 0) continue;
        for (std::uint32_t a = 0; a < x.p; ++a) {
            int code = static_cast<int>(a) + static_cast<int>(x.p) * v;  // prepend the new coordinate
            up.coeff[static_cast<std::size_t>(code)] =
                (up.coeff[static_cast<std::size_t>(code)] + x.coeff[static_cast<std::size_t>(v)]) %
                pow_u64(x.p, x.N);
        }
    }
    return steinberg_add(up);
}

CharElem gen_alpha(std::uint32_t p, std::uint32_t N)
{
    return CharElem::chi(p, N, 1, 0);
}

CharElem gen_beta(std::uint32_t p, std::uint32_t N)
{
    CharElem e = CharElem::zero(p, N, 1);
    for (std::uint32_t b = 1; b < p; ++b)
        e.coeff[b] = 1;
    return e;
}

CharElem gen_gamma(std::uint32_t p, std::uint32_t N)
{
    CharElem e = CharElem::zero(p, N, 2);
    std::uint64_t mod = pow_u64(p, N);
    for (std::uint32_t b = 1; b < p; ++b) {
        e.coeff[b] = (e.coeff[b] + 1) % mod;                       // chi_{b e_1}
        e.coeff[b * p] = (e.coeff[b * p] + mod - 1) % mod;         // - chi_{b e_2}
    }
    return e;
}

namespace {

std::vector<std::vector<long long>> char_columns_matrix(const std::vector<CharElem>& cols)
{
    if (cols.empty()) return {};
    std::size_t rows = cols[0].coeff.size();
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m[i][j] = static_cast<long long>(cols[j].coeff[i]);
    return m;
}

int free_rank_of(const padic::SnfResult& snf, std::uint32_t N)
{
    int r = 0;
    for (auto v : snf.valuations)
        if (v == 0) ++r;
    (void)N;
    return r;
}

// Does span(cols_a) contain every column of cols_b over Z/p^N?
bool span_contains(const std::vector<CharElem>& a, const std::vector<CharElem>& b, std::uint32_t p, std::uint32_t N)
{
    auto base = padic::snf_valuations(char_columns_matrix(a), p, N);
    for (const auto& col : b) {
        auto aug = a;
        aug.push_back(col);
        auto s2 = padic::snf_valuations(char_columns_matrix(aug), p, N);
        if (s2.valuations != base.valuations) return false;
    }
    return true;
}

}  // namespace

K0Result k0_rank(int s, std::uint32_t p, std::uint32_t N)
{
    K0Result res;
    if (s == 0) {
        res.rank = 1;
        res.divisor_valuations = {0};
        return res;
    }
    const int n = ipow(static_cast<int>(p), s);
    std::vector<CharElem> images;
    for (int v = 0; v < n; ++v)
        images.push_back(steinberg_add(CharElem::chi(p, N, s, v)));
    auto snf = padic::snf_valuations(char_columns_matrix(images), p, N);
    res.rank = free_rank_of(snf, N);
    res.divisor_valuations.assign(snf.valuations.begin(), snf.valuations.end());

    if (s == 1) {
        std::vector<CharElem> gens = {gen_alpha(p, N), gen_beta(p, N)};
        res.generators_match = span_contains(images, gens, p, N) && span_contains(gens, images, p, N);
    } else if (s == 2) {
        std::vector<CharElem> gens = {gen_gamma(p, N)};
        res.generators_match = span_contains(images, gens, p, N) && span_contains(gens, images, p, N);
    }
    return res;
}

ExactnessReport ktheory_complex_check(std::uint32_t p, std::uint32_t N)
{
    ExactnessReport rep;
    std::uint64_t mod = pow_u64(p, N);

    CharElem one = CharElem::chi(p, N, 0, 0);
    CharElem t1 = transfer_K(one);
    CharElem ab = gen_alpha(p, N) + gen_beta(p, N);

    CharElem ta = transfer_K(gen_alpha(p, N));
    CharElem tb = transfer_K(gen_beta(p, N));
    std::uint64_t cinv = mod_inverse((p + 1) % mod, mod);
    CharElem g_over = gen_gamma(p, N).scaled(cinv);
    CharElem g_neg = gen_gamma(p, N).scaled(mod - cinv);

    rep.images_match = (t1 == ab) && (ta == g_over) && (tb == g_neg);

    // In the generator bases the complex is Z_p -(1,1)-> Z_p^2 -(c,-c)-> Z_p.
    long long c = static_cast<long long>(cinv);
    auto snfA = padic::snf_valuations({{1}, {1}}, p, N);
    auto snfB = padic::snf_valuations({{c, -(c)}}, p, N);
    bool exact0 = snfA.kernel_order(p, N) == 1;
    bool mid = snfB.kernel_order(p, N) == snfA.image_order(p, N);
    bool end = snfB.cokernel_order(p, N) == 1;
    long long comp = (c - c) % static_cast<long long>(mod);
    rep.composite_zero = comp == 0;
    rep.m_exact = exact0 && mid && end && rep.images_match;

    // L-complex: Z_p{1} -> Z_p{alpha+beta}, an isomorphism onto a free
    // rank-one summand.
    auto snfL = padic::snf_valuations(char_columns_matrix({t1}), p, N);
    rep.l_exact = (t1 == ab) && snfL.valuations.size() == 1 && snfL.valuations[0] == 0;
    return rep;
}

PsiKernel psi_l_kernel(int s, std::uint32_t p, std::uint64_t l, std::uint32_t N)
{
    if (!padic::is_topological_generator(p, l)) throw padic::NotAGenerator("l must generate");
    PsiKernel out;
    if (s == 0) return out;
    const int n = ipow(static_cast<int>(p), s);

    // Matrix of psi^l - 1 on R_0 with basis chi_v - chi_0, v != 0.
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n - 1),
                                          std::vector<long long>(static_cast<std::size_t>(n - 1), 0));
    for (int v = 1; v < n; ++v) {
        auto vec = decode(p, s, v);
        for (auto& c : vec)
            c = static_cast<int>((static_cast<std::uint64_t>(c) * l) % p);
        int lv = encode(p, vec);
        m[static_cast<std::size_t>(lv - 1)][static_cast<std::size_t>(v - 1)] += 1;
        m[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(v - 1)] -= 1;
    }
    auto snf = padic::snf_valuations(m, p, N);
    // Divisors with positive valuation are still injective directions over
    // Z_p; the free kernel rank is the number of missing pivots.
    out.rank = static_cast<int>(n - 1 - snf.valuations.size());

    // Line basis: for each projective line, sum of chi_v - chi_0 over it.
    std::set<std::set<int>> lines;
    for (int v = 1; v < n; ++v) {
        std::set<int> line;
        auto vec = decode(p, s, v);
        for (std::uint32_t c = 1; c < p; ++c) {
            std::vector<int> w(vec.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = static_cast<int>((static_cast<std::uint64_t>(vec[i]) * c) % p);
            line.insert(encode(p, w));
        }
        lines.insert(line);
    }
    for (const auto& line : lines) {
        CharElem e = CharElem::zero(p, N, s);
        std::uint64_t mod = pow_u64(p, N);
        for (int v : line) {
            e.coeff[static_cast<std::size_t>(v)] = (e.coeff[static_cast<std::size_t>(v)] + 1) % mod;
            e.coeff[0] = (e.coeff[0] + mod - 1) % mod;
        }
        // psi^l fixes it by construction; record as kernel basis.
        if (!(psi_l(e, l) == e)) throw std::logic_error("line sum not psi-invariant");
        out.basis.push_back(std::move(e));
    }
    return out;
}

std::uint64_t default_generator(std::uint32_t p)
{
    for (std::uint64_t l = 2; l < p * p; ++l)
        if (padic::is_topological_generator(p, l)) return l;
    throw padic::NotAGenerator("no generator found");
}

namespace {

// Matrix of l^{-I} psi^l - 1 on the full ring Z_p[V^_s].
std::vector<std::vector<long long>> twisted_matrix(int s, std::uint32_t p, std::uint64_t l, std::uint32_t I,
                                                   std::uint32_t N)
{
    const int n = ipow(static_cast<int>(p), s);
    std::uint64_t mod = pow_u64(p, N);
    std::uint64_t linv = mod_inverse(mod_pow(l % mod, I, mod), mod);
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n),
                                          std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v) {
        auto vec = decode(p, s, v);
        for (auto& c : vec)
            c = static_cast<int>((static_cast<std::uint64_t>(c) * l) % p);
        int lv = encode(p, vec);
        m[static_cast<std::size_t>(lv)][static_cast<std::size_t>(v)] =
            (m[static_cast<std::size_t>(lv)][static_cast<std::size_t>(v)] + static_cast<long long>(linv)) %
            static_cast<long long>(mod);
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] -= 1;
    }
    return m;
}

// e_s as a matrix on the full character ring.
std::vector<std::vector<long long>> steinberg_matrix(int s, std::uint32_t p, std::uint32_t N)
{
    const int n = ipow(static_cast<int>(p), s);
    std::vector<CharElem> cols;
    for (int v = 0; v < n; ++v)
        cols.push_back(steinberg_add(CharElem::chi(p, N, s, v)));
    return char_columns_matrix(cols);
}

}  // namespace

JGroup j_groups(int s, int i, std::uint32_t p, std::uint64_t l, std::uint32_t N)
{
    if (!padic::is_topological_generator(p, l)) throw padic::NotAGenerator("l must generate");
    JGroup out;
    if (i == 0) {
        // e_s image of the psi-kernel on rank-zero characters.
        if (s == 0) return out;
        auto ker = psi_l_kernel(s, p, l, N);
        std::vector<CharElem> imgs;
        for (const auto& b : ker.basis) {
            CharElem e = steinberg_add(b);
            if (!e.is_zero()) imgs.push_back(e);
        }
        if (imgs.empty()) return out;
        auto snf = padic::snf_valuations(char_columns_matrix(imgs), p, N);
        out.free_rank = free_rank_of(snf, N);
        if (s == 1) out.generator = "beta-(p-1)alpha";
        if (s == 2) out.generator = "gamma";
        return out;
    }

    if (i % 2 == 0) {
        // [M(s), Omega^{2I} j] = e_s ker(l^{-I} psi^l - 1) on the full ring;
        // the map is injective over Z_p for I > 0 (full pivot count).
        std::uint32_t I = static_cast<std::uint32_t>(i / 2);
        auto snf = padic::snf_valuations(twisted_matrix(s, p, l, I, N), p, N);
        out.torsion_order = 1;
        out.free_rank = 0;
        if (snf.valuations.size() != static_cast<std::size_t>(ipow(static_cast<int>(p), s)))
            out.generator = "unexpected-kernel";
        return out;
    }

    // Odd i = 2I - 1: e_s image of coker(l^{-I} psi^l - 1) on the full ring.
    std::uint32_t I = static_cast<std::uint32_t>((i + 1) / 2);
    auto M = twisted_matrix(s, p, l, I, N);
    auto E = steinberg_matrix(s, p, N);
    // |e_s(coker)| = |im[E|M]| / |im M|.
    auto MM = M;
    for (std::size_t r = 0; r < MM.size(); ++r)
        MM[r].insert(MM[r].end(), E[r].begin(), E[r].end());
    auto snf_m = padic::snf_valuations(M, p, N);
    auto snf_em = padic::snf_valuations(MM, p, N);
    out.torsion_order = snf_em.image_order(p, N) / snf_m.image_order(p, N);
    out.generator = out.torsion_order > 1 ? "chi_0" : "";
    return out;
}

JComplexReport j_complex_homology(std::uint32_t p, std::uint64_t l, std::uint32_t N, int i)
{
    JComplexReport rep;
    rep.i = i;
    std::uint64_t mod = pow_u64(p, N);

    if (i == 0) {
        // 0 -> [M(1), j] -> [M(2), j] -> 0 with the transfer in the middle.
        auto k1 = psi_l_kernel(1, p, l, N);
        CharElem gen1 = steinberg_add(k1.basis[0]);
        CharElem img = transfer_K(gen1);
        // Express in gamma: img = c * gamma.
        CharElem gamma = gen_gamma(p, N);
        std::uint64_t c = 0;
        for (std::size_t v = 0; v < gamma.coeff.size(); ++v) {
            if (gamma.coeff[v] == 1) {
                c = img.coeff[v];
                break;
            }
        }
        bool proportional = img == gamma.scaled(c);
        std::uint64_t expected = mod_mul(mod - (p % mod), mod_inverse((p + 1) % mod, mod), mod);
        rep.middle_map_matches = proportional && c == expected;
        padic::PadicInt cc(p, N, c);
        std::uint64_t coker = pow_u64(p, cc.valuation());
        rep.homology_orders = {1, 1, coker, 1};
        rep.exact = coker == 1;
        rep.l_rank_s1 = 1;
        return rep;
    }

    // i > 0: groups vanish except possibly s = 0, 1, and the transfer between
    // them is an isomorphism exactly when the complexes are exact.
    JGroup g0 = j_groups(0, i, p, l, N);
    JGroup g1 = j_groups(1, i, p, l, N);
    JGroup g2 = j_groups(2, i, p, l, N);
    bool iso = g0.torsion_order == g1.torsion_order && g2.torsion_order == 1 && g2.free_rank == 0;
    if (i % 2 == 1 && g0.torsion_order > 1) {
        // Check tr(1) generates the target cyclic group: tr(chi_0) = alpha +
        // beta = chi_0 + (sum of nonzero characters); in the coker the
        // nonzero-character block is invertible, so the class of chi_0 equals
        // the class of alpha; verify the e_1 image of alpha + beta has full
        // order by comparing image orders of the stacked matrices.
        std::uint32_t I = static_cast<std::uint32_t>((i + 1) / 2);
        auto M = twisted_matrix(1, p, l, I, N);
        CharElem ab = gen_alpha(p, N) + gen_beta(p, N);
        CharElem abE = steinberg_add(ab);
        auto MM = M;
        for (std::size_t r = 0; r < MM.size(); ++r)
            MM[r].push_back(static_cast<long long>(abE.coeff[r]));
        auto snf_m = padic::snf_valuations(M, p, N);
        auto snf_mm = padic::snf_valuations(MM, p, N);
        std::uint64_t order_of_class = snf_mm.image_order(p, N) / snf_m.image_order(p, N);
        iso = iso && order_of_class == g1.torsion_order;
    }
    rep.exact = iso;
    rep.homology_orders = {1, 1, 1, 1};
    if (!iso) rep.homology_orders = {g0.torsion_order, g1.torsion_order, g2.torsion_order, 1};
    (void)mod;
    return rep;
}

}  // namespace su::reprings
