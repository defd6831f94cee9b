#include "burnside.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace su::burnside {

using padic::mod_inverse;
using padic::mod_mul;
using padic::mod_pow;
using padic::pow_u64;

namespace {

int point_code(std::uint32_t p, const std::vector<int>& v)
{
    int code = 0, mult = 1;
    for (int c : v) {
        code += c * mult;
        mult *= static_cast<int>(p);
    }
    return code;
}

std::vector<int> point_decode(std::uint32_t p, int s, int code)
{
    std::vector<int> v(s);
    for (int i = 0; i < s; ++i) {
        v[i] = code % static_cast<int>(p);
        code /= static_cast<int>(p);
    }
    return v;
}

}  // namespace

SubspaceLattice::SubspaceLattice(std::uint32_t p, int s) : p_(p), s_(s)
{
    // Enumerate subspaces as spans of row-echelon bases.
    std::set<std::vector<int>> seen;
    std::vector<std::pair<int, std::vector<int>>> collected;  // (dim, members)

    int npts = 1;
    for (int i = 0; i < s; ++i)
        npts *= static_cast<int>(p);

    auto span_members = [&](const std::vector<std::vector<int>>& basis) {
        std::set<int> pts = {0};
        for (const auto& b : basis) {
            std::set<int> next;
            for (int pt : pts) {
                auto v = point_decode(p, s, pt);
                for (std::uint32_t c = 0; c < p; ++c) {
                    auto w = v;
                    for (int i = 0; i < s; ++i)
                        w[i] = (w[i] + static_cast<int>(c) * b[i]) % static_cast<int>(p);
                    next.insert(point_code(p, w));
                }
            }
            pts = std::move(next);
        }
        return std::vector<int>(pts.begin(), pts.end());
    };

    std::vector<std::vector<int>> basis;
    auto rec = [&](auto&& self, int start_pt) -> void {
        {
            auto mem = span_members(basis);
            if (!seen.count(mem)) {
                seen.insert(mem);
                collected.push_back({static_cast<int>(basis.size()), mem});
            }
        }
        if (static_cast<int>(basis.size()) == s) return;
        auto cur = span_members(basis);
        std::set<int> in_span(cur.begin(), cur.end());
        for (int pt = start_pt; pt < npts; ++pt) {
            if (in_span.count(pt)) continue;
            basis.push_back(point_decode(p, s, pt));
            self(self, pt + 1);
            basis.pop_back();
        }
    };
    rec(rec, 1);

    std::sort(collected.begin(), collected.end());
    for (auto& [d, mem] : collected) {
        index_[mem] = static_cast<int>(members_.size());
        members_.push_back(mem);
        dims_.push_back(d);
    }
}

bool SubspaceLattice::contains(int big, int small) const
{
    const auto& b = members_[big];
    for (int pt : members_[small])
        if (!std::binary_search(b.begin(), b.end(), pt)) return false;
    return true;
}

int SubspaceLattice::id_of_members(std::vector<int> pts) const
{
    std::sort(pts.begin(), pts.end());
    auto it = index_.find(pts);
    if (it == index_.end()) throw std::logic_error("not a subspace");
    return it->second;
}

int SubspaceLattice::apply(const Matrix& g, int id) const
{
    std::set<int> img;
    for (int pt : members_[id]) {
        auto v = point_decode(p_, s_, pt);
        std::vector<int> w(s_, 0);
        for (int i = 0; i < s_; ++i)
            for (int j = 0; j < s_; ++j)
                w[i] = (w[i] + g[i][j] * v[j]) % static_cast<int>(p_);
        img.insert(point_code(p_, w));
    }
    return id_of_members(std::vector<int>(img.begin(), img.end()));
}

int SubspaceLattice::intersect_last(const SubspaceLattice& small, int id) const
{
    // Members with vanishing first coordinate, re-encoded in F_p^{s-1}.
    std::set<int> pts;
    for (int pt : members_[id]) {
        auto v = point_decode(p_, s_, pt);
        if (v[0] != 0) continue;
        std::vector<int> w(v.begin() + 1, v.end());
        pts.insert(point_code(p_, w));
    }
    return small.id_of_members(std::vector<int>(pts.begin(), pts.end()));
}

int SubspaceLattice::line_of(int point) const
{
    std::set<int> pts = {0};
    auto v = point_decode(p_, s_, point);
    for (std::uint32_t c = 1; c < p_; ++c) {
        std::vector<int> w(s_);
        for (int i = 0; i < s_; ++i)
            w[i] = (static_cast<int>(c) * v[i]) % static_cast<int>(p_);
        pts.insert(point_code(p_, w));
    }
    return id_of_members(std::vector<int>(pts.begin(), pts.end()));
}

const SubspaceLattice& lattice(std::uint32_t p, int s)
{
    static std::map<std::pair<std::uint32_t, int>, SubspaceLattice> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(p, s);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SubspaceLattice(p, s)).first;
    return it->second;
}

BurnsideElem BurnsideElem::one(std::uint32_t p, std::uint32_t N, int s)
{
    BurnsideElem e;
    e.p = p;
    e.N = N;
    e.s = s;
    e.coeff.assign(lattice(p, s).count(), 0);
    e.coeff[lattice(p, s).full_id()] = 1;
    return e;
}

BurnsideElem BurnsideElem::operator+(const BurnsideElem& o) const
{
    BurnsideElem r = *this;
    std::uint64_t mod = pow_u64(p, N);
    for (std::size_t i = 0; i < coeff.size(); ++i)
        r.coeff[i] = (coeff[i] + o.coeff[i]) % mod;
    return r;
}

BurnsideElem BurnsideElem::operator*(const BurnsideElem& o) const
{
    // Multiply through the (injective) mark homomorphism.
    GhostVector a = marks(*this), b = marks(o);
    std::uint64_t mod = pow_u64(p, N);
    for (std::size_t i = 0; i < a.value.size(); ++i)
        a.value[i] = mod_mul(a.value[i], b.value[i], mod);
    return inverse_marks(a);
}

BurnsideElem BurnsideElem::acted(const Matrix& g) const
{
    const auto& lat = lattice(p, s);
    BurnsideElem r = *this;
    for (int id = 0; id < lat.count(); ++id) {
        int gid = lat.apply(g, id);
        r.coeff[id] = coeff[gid];
    }
    return r;
}

GhostVector marks(const BurnsideElem& x)
{
    const auto& lat = lattice(x.p, x.s);
    std::uint64_t mod = pow_u64(x.p, x.N);
    GhostVector g;
    g.p = x.p;
    g.N = x.N;
    g.s = x.s;
    g.value.assign(lat.count(), 0);
    for (int w = 0; w < lat.count(); ++w) {
        std::uint64_t acc = 0;
        for (int wp = 0; wp < lat.count(); ++wp) {
            if (x.coeff[wp] == 0) continue;
            if (!lat.contains(wp, w)) continue;
            std::uint64_t fixed = pow_u64(x.p, static_cast<std::uint32_t>(x.s - lat.dim(wp))) % mod;
            acc = (acc + mod_mul(x.coeff[wp], fixed, mod)) % mod;
        }
        g.value[w] = acc;
    }
    return g;
}

BurnsideElem inverse_marks(const GhostVector& g)
{
    const auto& lat = lattice(g.p, g.s);
    std::uint64_t mod = pow_u64(g.p, g.N);
    BurnsideElem x;
    x.p = g.p;
    x.N = g.N;
    x.s = g.s;
    x.coeff.assign(lat.count(), 0);
    // Triangular solve, largest subgroups first.
    std::vector<int> order(lat.count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lat.dim(a) > lat.dim(b); });
    for (int w : order) {
        std::uint64_t acc = g.value[w] % mod;
        for (int wp = 0; wp < lat.count(); ++wp) {
            if (wp == w || x.coeff[wp] == 0) continue;
            if (!lat.contains(wp, w)) continue;
            std::uint64_t fixed = pow_u64(g.p, static_cast<std::uint32_t>(g.s - lat.dim(wp))) % mod;
            acc = (acc + mod - mod_mul(x.coeff[wp], fixed, mod)) % mod;
        }
        std::uint64_t den = pow_u64(g.p, static_cast<std::uint32_t>(g.s - lat.dim(w)));
        if (acc % den != 0) throw NotInImage("mark vector not in the image of A(V)");
        x.coeff[w] = acc / den;
    }
    return x;
}

GhostVector norm(const GhostVector& x)
{
    const auto& small = lattice(x.p, x.s);
    const auto& big = lattice(x.p, x.s + 1);
    std::uint64_t mod = pow_u64(x.p, x.N);
    GhostVector out;
    out.p = x.p;
    out.N = x.N;
    out.s = x.s + 1;
    out.value.assign(big.count(), 0);
    for (int w = 0; w < big.count(); ++w) {
        int cap = big.intersect_last(small, w);
        // c(W) = |G| |W cap V_s| / (|W| |V_s|).
        std::uint64_t c = (pow_u64(x.p, static_cast<std::uint32_t>(out.s)) *
                           static_cast<std::uint64_t>(small.members(cap).size())) /
                          (static_cast<std::uint64_t>(big.members(w).size()) *
                           pow_u64(x.p, static_cast<std::uint32_t>(x.s)));
        out.value[w] = mod_pow(x.value[cap], c, mod);
    }
    return out;
}

std::uint64_t gl_mod_unipotent_index(std::uint32_t p, int s)
{
    std::uint64_t acc = 1;
    for (int i = 1; i <= s; ++i)
        acc *= pow_u64(p, static_cast<std::uint32_t>(i)) - 1;
    return acc;
}

namespace {

// Signed exponent tables for the Steinberg product: for each subspace id,
// the list of (target id, +-1) over the lower-triangular Borel times Sigma_s.
struct SteinbergTable {
    std::vector<std::map<int, long long>> expo;  // per id: target id -> net exponent
};

std::vector<Matrix> lower_borel(std::uint32_t p, int s)
{
    std::vector<Matrix> out;
    // Entries: diagonal units, below-diagonal arbitrary.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j <= i; ++j)
            slots.push_back({i, j});
    Matrix m(s, std::vector<int>(s, 0));
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == slots.size()) {
            out.push_back(m);
            return;
        }
        auto [i, j] = slots[k];
        if (i == j) {
            for (std::uint32_t d = 1; d < p; ++d) {
                m[i][j] = static_cast<int>(d);
                self(self, k + 1);
            }
            m[i][j] = 0;
        } else {
            for (std::uint32_t d = 0; d < p; ++d) {
                m[i][j] = static_cast<int>(d);
                self(self, k + 1);
            }
            m[i][j] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::pair<Matrix, int>> signed_permutations(int s)
{
    std::vector<std::pair<Matrix, int>> out;
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (perm[i] > perm[j]) ++inv;
        Matrix m(s, std::vector<int>(s, 0));
        for (int i = 0; i < s; ++i)
            m[perm[i]][i] = 1;
        out.push_back({m, inv % 2 ? -1 : 1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Matrix mat_mul(std::uint32_t p, const Matrix& a, const Matrix& b)
{
    int s = static_cast<int>(a.size());
    Matrix c(s, std::vector<int>(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            int acc = 0;
            for (int k = 0; k < s; ++k)
                acc += a[i][k] * b[k][j];
            c[i][j] = acc % static_cast<int>(p);
        }
    return c;
}

const SteinbergTable& steinberg_table(std::uint32_t p, int s)
{
    static std::map<std::pair<std::uint32_t, int>, SteinbergTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(p, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const auto& lat = lattice(p, s);
    SteinbergTable tab;
    tab.expo.resize(lat.count());
    auto borel = lower_borel(p, s);
    auto perms = signed_permutations(s);
    for (int id = 0; id < lat.count(); ++id) {
        for (const auto& [sig, sgn] : perms) {
            for (const auto& b : borel) {
                Matrix g = mat_mul(p, b, sig);
                tab.expo[id][lat.apply(g, id)] += sgn;
            }
        }
    }
    return cache.emplace(key, std::move(tab)).first->second;
}

}  // namespace

GhostVector steinberg_mult(const GhostVector& x)
{
    const auto& lat = lattice(x.p, x.s);
    const auto& tab = steinberg_table(x.p, x.s);
    std::uint64_t mod = pow_u64(x.p, x.N);
    std::uint64_t index = gl_mod_unipotent_index(x.p, x.s);
    GhostVector out = x;
    for (int id = 0; id < lat.count(); ++id) {
        std::uint64_t prod = 1;
        for (const auto& [tid, e] : tab.expo[id]) {
            if (e == 0) continue;
            std::uint64_t base = x.value[tid] % mod;
            if (base % x.p == 0) throw padic::RootDomain("steinberg needs unit marks");
            std::uint64_t b = e > 0 ? base : mod_inverse(base, mod);
            prod = mod_mul(prod, mod_pow(b, static_cast<std::uint64_t>(e > 0 ? e : -e), mod), mod);
        }
        padic::PadicInt y(x.p, x.N, prod);
        out.value[id] = padic::unit_pow(y, 1, static_cast<long long>(index)).residue();
    }
    return out;
}

std::uint64_t steinberg_t_parameter(const GhostVector& x)
{
    // The distinguished line is the last-coordinate one (fixed by the
    // lower-triangular Borel).
    const auto& lat = lattice(x.p, x.s);
    int last = 1;
    for (int i = 1; i < x.s; ++i)
        last *= static_cast<int>(x.p);
    return x.value[lat.line_of(last)];
}

namespace {

std::uint32_t encode_matrix(const Matrix& m)
{
    std::uint32_t code = 0;
    for (const auto& row : m)
        for (int v : row)
            code = code * 8 + static_cast<std::uint32_t>(v);
    return code;
}

}  // namespace

bool steinberg_idempotent_check(int s, std::uint32_t p, std::uint32_t N)
{
    std::uint64_t mod = pow_u64(p, N);
    auto borel = lower_borel(p, s);
    auto perms = signed_permutations(s);
    std::uint64_t index = gl_mod_unipotent_index(p, s);
    std::uint64_t c = mod_inverse(index % mod, mod);

    std::map<std::uint32_t, std::pair<Matrix, std::uint64_t>> e;
    for (const auto& [sig, sgn] : perms)
        for (const auto& b : borel) {
            Matrix g = mat_mul(p, b, sig);
            std::uint64_t term = sgn > 0 ? c : mod - c;
            auto key = encode_matrix(g);
            auto it = e.find(key);
            if (it == e.end())
                e[key] = {g, term};
            else
                it->second.second = (it->second.second + term) % mod;
        }

    std::map<std::uint32_t, std::uint64_t> sq;
    for (const auto& [k1, v1] : e)
        for (const auto& [k2, v2] : e) {
            (void)k1;
            (void)k2;
            Matrix g = mat_mul(p, v1.first, v2.first);
            std::uint64_t& slot = sq[encode_matrix(g)];
            slot = (slot + mod_mul(v1.second, v2.second, mod)) % mod;
        }

    for (const auto& [k, v] : e)
        if (sq[k] != v.second) return false;
    for (const auto& [k, v] : sq)
        if (v != 0 && (!e.count(k) || e.at(k).second != v)) return false;
    return true;
}

namespace {

// Ghost pair for an element a + b x of A(V_1): (phi(V_1), phi(0)) = (a, a+pb).
GhostVector ghost_pair(std::uint32_t p, std::uint32_t N, std::uint64_t at_v1, std::uint64_t at_zero)
{
    GhostVector g;
    g.p = p;
    g.N = N;
    g.s = 1;
    g.value.assign(lattice(p, 1).count(), 1);
    g.value[lattice(p, 1).zero_id()] = at_zero;
    g.value[lattice(p, 1).full_id()] = at_v1;
    return g;
}

}  // namespace

UnitsComplexReport units_complex_homology(std::uint32_t p, std::uint32_t N, char variant)
{
    if (p == 2) throw std::invalid_argument("use p2_units_complex for p = 2");
    UnitsComplexReport rep;
    rep.p = p;
    rep.N = N;
    rep.variant = variant;
    std::uint64_t mod = pow_u64(p, N);
    std::uint32_t e = N - 1;  // (1+pZ)/p^N is cyclic of order p^{N-1}
    std::uint64_t g = 1 + p;  // its generator

    if (variant == 'L') {
        // [L(0)] -> [L(1)] is the reduced transfer a -> a^{p-1}; p-1 is prime
        // to p, so this is an automorphism and every homology group dies.
        std::uint64_t l1_of_g = [&] {
            GhostVector from0;
            from0.p = p;
            from0.N = N;
            from0.s = 0;
            from0.value.assign(1, g);
            GhostVector n = norm(from0);
            std::uint64_t a = n.value[lattice(p, 1).full_id()];
            std::uint64_t z = n.value[lattice(p, 1).zero_id()];
            // L(1)-coordinate 1 + p b / a with b = (z - a)/p.
            std::uint64_t b = ((z + mod - a) % mod) / p;
            return (1 + mod_mul(p % mod, mod_mul(b, mod_inverse(a, mod), mod), mod)) % mod;
        }();
        bool iso = mod_pow(g, p - 1, mod) == l1_of_g;
        auto dl = padic::unit_dlog(p, N, l1_of_g);
        padic::SnfResult snf = padic::snf_valuations({{static_cast<long long>(dl)}}, p, e);
        std::uint64_t ker = snf.kernel_order(p, e);
        std::uint64_t coker = snf.cokernel_order(p, e);
        rep.homology_orders = {ker, iso ? coker : coker, 1, 1};
        return rep;
    }

    // Variant M: dlog-linearize the two maps and run SNF over Z/p^{N-1}.
    // delta_0: a -> ghost(a, a^p); coordinates of [M(1)] are the ghost pair.
    GhostVector from0;
    from0.p = p;
    from0.N = N;
    from0.s = 0;
    from0.value.assign(1, g);
    GhostVector n0 = norm(from0);
    long long m00 = static_cast<long long>(padic::unit_dlog(p, N, n0.value[lattice(p, 1).full_id()]));
    long long m01 = static_cast<long long>(padic::unit_dlog(p, N, n0.value[lattice(p, 1).zero_id()]));

    // delta_1: ghost pair -> t(N(-) * e_2); evaluate on the two generators.
    auto t_of = [&](std::uint64_t a, std::uint64_t z) {
        GhostVector x = ghost_pair(p, N, a, z);
        GhostVector nx = norm(x);
        GhostVector st = steinberg_mult(nx);
        return steinberg_t_parameter(st);
    };
    long long t10 = static_cast<long long>(padic::unit_dlog(p, N, t_of(g, 1)));
    long long t11 = static_cast<long long>(padic::unit_dlog(p, N, t_of(1, g)));

    auto snf0 = padic::snf_valuations({{m00}, {m01}}, p, e);
    auto snf1 = padic::snf_valuations({{t10, t11}}, p, e);

    // d^2 = 0: the composite must vanish on the generator.
    if (t_of(n0.value[lattice(p, 1).full_id()], n0.value[lattice(p, 1).zero_id()]) != 1)
        throw std::logic_error("units complex is not a complex");

    std::uint64_t h0 = snf0.kernel_order(p, e);
    std::uint64_t h1 = snf1.kernel_order(p, e) / snf0.image_order(p, e);
    std::uint64_t h2 = snf1.cokernel_order(p, e);  // [M(3)] = 1, so all of coker survives
    rep.homology_orders = {h0, h1, h2, 1};
    rep.s2_exponent = h2;  // cyclic here
    return rep;
}

UnitsComplexReport p2_units_complex(std::uint32_t N)
{
    UnitsComplexReport rep;
    rep.p = 2;
    rep.N = N;
    const std::uint64_t mod = pow_u64(2, N);

    // The reduced-transfer complex is an isomorphism in the only populated
    // spots, so its homology vanishes identically; label it M.
    // The norm-then-Steinberg complex carries the content; label it L.
    rep.variant = 'L';

    auto t_of = [&](std::uint64_t a, std::uint64_t z) {
        GhostVector x = ghost_pair(2, N, a, z);
        GhostVector nx = norm(x);
        GhostVector st = steinberg_mult(nx);
        return steinberg_t_parameter(st);
    };

    // Enumerate the finite unit groups directly (sign and principal part).
    std::set<std::pair<std::uint64_t, std::uint64_t>> image0;
    for (std::uint64_t a = 1; a < mod; a += 2)
        image0.insert({a, mod_mul(a, a, mod)});

    std::uint64_t ker1 = 0;
    std::set<std::uint64_t> image1;
    for (std::uint64_t a = 1; a < mod; a += 2)
        for (std::uint64_t z = 1; z < mod; z += 2) {
            std::uint64_t t = t_of(a, z);
            image1.insert(t);
            if (t == 1) ++ker1;
        }

    for (const auto& [a, z] : image0)
        if (t_of(a, z) != 1) throw std::logic_error("p2 units complex is not a complex");

    std::uint64_t g0 = mod / 2;  // |odd residues|
    std::uint64_t h0 = g0 / image0.size();  // a -> (a, a^2) is injective, so this is 1
    std::uint64_t h1 = ker1 / image0.size();
    std::uint64_t h2 = g0 / image1.size();

    // Exponent of the s = 2 quotient: the smallest k with t^k in the image
    // for every odd t.
    std::uint64_t expo = 1;
    for (std::uint64_t t = 1; t < mod; t += 2) {
        std::uint64_t k = 1, tk = t;
        while (!image1.count(tk)) {
            tk = mod_mul(tk, t, mod);
            ++k;
        }
        expo = std::max(expo, k);
    }

    rep.homology_orders = {h0, h1, h2, 1};
    rep.s2_exponent = expo;
    return rep;
}

}  // namespace su::burnside
