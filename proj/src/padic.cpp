#include "padic.hpp"

namespace su::padic {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mod_mul(acc, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m)
{
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t acc = 1;
    while (exp--)
        acc *= base;
    return acc;
}

PadicInt::PadicInt(std::uint32_t p, std::uint32_t N, std::uint64_t value) : p_(p), N_(N)
{
    if (N == 0) throw std::invalid_argument("precision must be >= 1");
    mod_ = pow_u64(p, N);
    r_ = value % mod_;
}

PadicInt PadicInt::from_signed(std::uint32_t p, std::uint32_t N, long long value)
{
    std::uint64_t mod = pow_u64(p, N);
    long long r = value % static_cast<long long>(mod);
    if (r < 0) r += static_cast<long long>(mod);
    return PadicInt(p, N, static_cast<std::uint64_t>(r));
}

PadicInt PadicInt::at_precision(std::uint32_t N) const
{
    return PadicInt(p_, N, r_ % pow_u64(p_, N));
}

PadicInt align(const PadicInt& a, const PadicInt& b, PadicInt& bb)
{
    if (a.p_ != b.p_) throw std::invalid_argument("prime mismatch");
    std::uint32_t N = a.N_ < b.N_ ? a.N_ : b.N_;  // mixing precisions truncates to the minimum
    bb = b.at_precision(N);
    return a.at_precision(N);
}

PadicInt PadicInt::operator+(const PadicInt& o) const
{
    PadicInt b;
    PadicInt a = align(*this, o, b);
    return PadicInt(a.p_, a.N_, a.r_ + b.r_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const
{
    PadicInt b;
    PadicInt a = align(*this, o, b);
    return PadicInt(a.p_, a.N_, a.r_ + a.mod_ - b.r_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const
{
    PadicInt b;
    PadicInt a = align(*this, o, b);
    return PadicInt(a.p_, a.N_, mod_mul(a.r_, b.r_, a.mod_));
}

bool PadicInt::operator==(const PadicInt& o) const
{
    PadicInt b;
    PadicInt a = align(*this, o, b);
    return a.r_ == b.r_;
}

PadicInt PadicInt::inverse() const
{
    if (!is_unit()) throw std::invalid_argument("inverse of a non-unit");
    return PadicInt(p_, N_, mod_inverse(r_, mod_));
}

PadicInt PadicInt::pow(long long e) const
{
    if (e >= 0) return PadicInt(p_, N_, mod_pow(r_, static_cast<std::uint64_t>(e), mod_));
    return inverse().pow(-e);
}

std::uint32_t PadicInt::valuation() const
{
    if (r_ == 0) return N_;
    std::uint32_t v = 0;
    std::uint64_t x = r_;
    while (x % p_ == 0) {
        x /= p_;
        ++v;
    }
    return v;
}

PadicInt unit_pow(const PadicInt& x, long long num, long long den)
{
    const std::uint32_t p = x.prime(), N = x.precision();
    if (den == 0 || (den % p == 0)) throw RootDomain("denominator not coprime to p");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (!x.is_unit()) throw RootDomain("not a unit");

    if (p == 2) {
        if (den % 2 == 0) throw RootDomain("even denominator at p = 2");
        // Split off the sign: x = s * u with u = 1 mod 4; s^{num/den} = s^num.
        std::uint64_t mod = x.modulus();
        std::uint64_t r = x.residue();
        bool neg = (N >= 2) && (r % 4 == 3);
        std::uint64_t u = neg ? (mod - r) % mod : r;
        if (N >= 2 && u % 4 != 1) throw RootDomain("unit not in {+,-}(1 + 4Z_2)");
        std::uint64_t ord = N >= 2 ? pow_u64(2, N - 2) : 1;  // order of (1+4Z)/2^N
        std::uint64_t e = mod_mul(((num % static_cast<long long>(ord)) + static_cast<long long>(ord)) % ord,
                                  mod_inverse(static_cast<std::uint64_t>(den % static_cast<long long>(ord)) % ord, ord), ord);
        std::uint64_t y = mod_pow(u, e, mod);
        if (neg && (num % 2 != 0)) y = (mod - y) % mod;
        return PadicInt(p, N, y);
    }

    if (x.residue() % p != 1) throw RootDomain("unit not principal");
    std::uint64_t ord = pow_u64(p, N - 1);  // order of (1+pZ)/p^N
    long long n = ((num % static_cast<long long>(ord)) + static_cast<long long>(ord)) % static_cast<long long>(ord);
    std::uint64_t e = mod_mul(static_cast<std::uint64_t>(n),
                              mod_inverse(static_cast<std::uint64_t>(((den % static_cast<long long>(ord)) + static_cast<long long>(ord)) % static_cast<long long>(ord)), ord),
                              ord);
    return x.pow(static_cast<long long>(e));
}

bool is_topological_generator(std::uint32_t p, std::uint64_t l)
{
    if (p == 2) return false;
    if (l % p == 0) return false;
    // l mod p generates (Z/p)^x: l^{phi/q} != 1 for every prime q | phi.
    std::uint32_t phi = p - 1, rest = phi;
    for (std::uint32_t q = 2; q <= rest; ++q) {
        if (rest % q) continue;
        if (mod_pow(l % p, phi / q, p) == 1) return false;
        while (rest % q == 0) rest /= q;
    }
    // l^{p-1} != 1 mod p^2.
    return mod_pow(l % (static_cast<std::uint64_t>(p) * p), p - 1, static_cast<std::uint64_t>(p) * p) != 1;
}

std::uint32_t valuation_one_minus_power(std::uint32_t p, std::uint64_t l, std::uint64_t i, std::uint32_t N)
{
    if (!is_topological_generator(p, l)) throw NotAGenerator("l is not a topological generator");
    std::uint64_t mod = pow_u64(p, N);
    std::uint64_t v = (mod + 1 - mod_pow(l, i, mod)) % mod;
    PadicInt x(p, N, v);
    return x.valuation();
}

std::uint64_t quotient_order(std::uint32_t p, std::uint32_t a, std::uint32_t b)
{
    if (b < 1 || a < b) throw std::invalid_argument("need a >= b >= 1");
    return pow_u64(p, a - b);
}

namespace {

std::uint32_t val_of(std::uint64_t x, std::uint32_t p, std::uint32_t N)
{
    if (x == 0) return N;
    std::uint32_t v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v < N ? v : N;
}

}  // namespace

std::uint64_t plog(std::uint32_t p, std::uint32_t N, std::uint64_t u)
{
    const std::uint32_t base_val = (p == 2) ? 2 : 1;
    std::uint64_t mod = pow_u64(p, N);
    u %= mod;
    if (val_of((u + mod - 1) % mod, p, N) < base_val) throw std::invalid_argument("not a principal unit");

    // Work with guard digits so every series term is exact mod p^N.  Terms
    // beyond k = 2N + 16 have valuation at least k base_val - log_p k >= N.
    std::uint32_t kmax = 2 * N + 16;
    std::uint32_t guard = 1;
    for (std::uint64_t t = kmax; t; t /= p)
        ++guard;
    std::uint32_t NW = N + guard;
    std::uint64_t MW = pow_u64(p, NW);
    std::uint64_t x = (u % MW + MW - 1) % MW;

    std::uint64_t acc = 0, xp = x;
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        std::uint64_t kk = k;
        std::uint32_t kv = 0;
        while (kk % p == 0) {
            kk /= p;
            ++kv;
        }
        std::uint64_t term = xp;
        for (std::uint32_t t = 0; t < kv; ++t) {
            if (term % p) throw std::logic_error("plog term not divisible");
            term /= p;
        }
        term = mod_mul(term, mod_inverse(kk % MW, MW), MW);
        if (k % 2 == 1)
            acc = (acc + term) % MW;
        else
            acc = (acc + MW - term) % MW;
        xp = mod_mul(xp, x, MW);
    }
    return acc % mod;
}

std::uint64_t pexp(std::uint32_t p, std::uint32_t N, std::uint64_t x)
{
    const std::uint32_t base_val = (p == 2) ? 2 : 1;
    std::uint64_t mod = pow_u64(p, N);
    x %= mod;
    if (val_of(x, p, N) < base_val) throw std::invalid_argument("exp needs valuation >= " + std::to_string(base_val));

    // v(x^k / k!) >= k base_val - v(k!) >= k (base_val - 1) + 1, so any term
    // beyond k = 2N + 16 vanishes mod p^N for every p >= 2.
    std::uint32_t kmax = 2 * N + 16;
    std::uint64_t fact_v = 0;
    for (std::uint64_t q = p; q <= kmax; q *= p)
        fact_v += kmax / q;
    std::uint32_t guard = 1 + static_cast<std::uint32_t>(fact_v);
    std::uint32_t NW = N + guard;
    std::uint64_t MW = pow_u64(p, NW);

    std::uint64_t acc = 1, term = 1;
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        term = mod_mul(term, x % MW, MW);
        std::uint64_t kk = k;
        while (kk % p == 0) {
            kk /= p;
            if (term % p) throw std::logic_error("pexp term not divisible");
            term /= p;
        }
        term = mod_mul(term, mod_inverse(kk % MW, MW), MW);
        acc = (acc + term) % MW;
    }
    return acc % mod;
}

std::uint64_t unit_dlog(std::uint32_t p, std::uint32_t N, std::uint64_t u)
{
    const std::uint64_t mod = pow_u64(p, N);
    u %= mod;
    if (p == 2) {
        if (N < 3) return 0;
        std::uint64_t ord = pow_u64(2, N - 2);
        std::uint64_t lu = plog(2, N, u), lg = plog(2, N, 5 % mod);
        // Both logs have valuation 2; their ratio is defined mod 2^{N-2}.
        return mod_mul(lu / 4, mod_inverse(lg / 4, ord), ord);
    }
    std::uint64_t ord = pow_u64(p, N - 1);
    std::uint64_t lu = plog(p, N, u), lg = plog(p, N, 1 + p);
    return mod_mul(lu / p, mod_inverse(lg / p, ord), ord);
}

std::uint64_t SnfResult::kernel_order(std::uint32_t p, std::uint32_t N) const
{
    std::uint64_t acc = pow_u64(p, N * (cols - valuations.size()));
    for (auto v : valuations)
        acc *= pow_u64(p, v < N ? v : N);
    return acc;
}

std::uint64_t SnfResult::image_order(std::uint32_t p, std::uint32_t N) const
{
    std::uint64_t acc = 1;
    for (auto v : valuations)
        acc *= pow_u64(p, N - (v < N ? v : N));
    return acc;
}

std::uint64_t SnfResult::cokernel_order(std::uint32_t p, std::uint32_t N) const
{
    return pow_u64(p, N * rows) / image_order(p, N);
}

SnfResult snf_valuations(std::vector<std::vector<long long>> m, std::uint32_t p, std::uint32_t N)
{
    SnfResult out;
    out.rows = m.size();
    out.cols = out.rows ? m[0].size() : 0;
    const std::uint64_t mod = pow_u64(p, N);
    const std::size_t R = out.rows, C = out.cols;
    std::vector<std::vector<std::uint64_t>> a(R, std::vector<std::uint64_t>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) {
            long long v = m[i][j] % static_cast<long long>(mod);
            if (v < 0) v += static_cast<long long>(mod);
            a[i][j] = static_cast<std::uint64_t>(v);
        }

    std::size_t top = 0;
    while (top < R && top < C) {
        std::uint32_t best = N + 1;
        std::size_t bi = top, bj = top;
        for (std::size_t i = top; i < R; ++i)
            for (std::size_t j = top; j < C; ++j) {
                std::uint32_t v = val_of(a[i][j], p, N);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best >= N) break;
        std::swap(a[top], a[bi]);
        for (std::size_t i = 0; i < R; ++i)
            std::swap(a[i][top], a[i][bj]);
        std::uint64_t pivot = a[top][top];
        std::uint64_t unit = pivot / pow_u64(p, best);
        std::uint64_t uinv = mod_inverse(unit % mod, mod);
        for (std::size_t j = top; j < C; ++j)
            a[top][j] = mod_mul(a[top][j], uinv, mod);
        for (std::size_t i = top + 1; i < R; ++i) {
            if (a[i][top] == 0) continue;
            std::uint64_t q = (a[i][top] / pow_u64(p, best)) % mod;
            for (std::size_t j = top; j < C; ++j)
                a[i][j] = (a[i][j] + mod - mod_mul(q, a[top][j], mod) % mod) % mod;
        }
        for (std::size_t j = top + 1; j < C; ++j) {
            if (a[top][j] == 0) continue;
            std::uint64_t q = (a[top][j] / pow_u64(p, best)) % mod;
            for (std::size_t i = top; i < R; ++i)
                a[i][j] = (a[i][j] + mod - mod_mul(q, a[i][top], mod) % mod) % mod;
        }
        out.valuations.push_back(best);
        ++top;
    }
    return out;
}

}  // namespace su::padic
