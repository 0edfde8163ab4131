#include "intutil.hpp"

#include <algorithm>
#include <numeric>

namespace quintessa {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t powmod_u64(uint64_t a, const Int& e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    Int t = e;
    while (t > 0) {
        if (boost::multiprecision::bit_test(t, 0)) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        t >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic for n < 3.3e24 with this base set
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n)
{
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out)
{
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n)
{
    if (n == 0) fail(errc::invalid_argument, "factor_u64: n must be positive");
    std::vector<uint64_t> primes;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            out.back().second++;
        else
            out.push_back({p, 1});
    }
    return out;
}

uint64_t sqrt_mod_p(uint64_t a, uint64_t p)
{
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod_u64(a, (p - 1) / 2, p) != 1)
        fail(errc::invalid_argument, "sqrt_mod_p: not a quadratic residue");
    uint64_t r;
    if (p % 4 == 3) {
        r = powmod_u64(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        uint64_t q = p - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        uint64_t z = 2;
        while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
        uint64_t m = s;
        uint64_t c = powmod_u64(z, q, p);
        uint64_t t = powmod_u64(a, q, p);
        r = powmod_u64(a, (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0, tt = t;
            while (tt != 1) { tt = mulmod_u64(tt, tt, p); ++i; }
            uint64_t b = c;
            for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
            m = i;
            c = mulmod_u64(b, b, p);
            t = mulmod_u64(t, c, p);
            r = mulmod_u64(r, b, p);
        }
    }
    return std::min(r, p - r);
}

uint64_t element_of_order5(uint64_t p)
{
    if (p % 5 != 1) fail(errc::invalid_argument, "element_of_order5: p must be 1 mod 5");
    for (uint64_t a = 2;; ++a) {
        uint64_t r = powmod_u64(a, (p - 1) / 5, p);
        if (r != 1) return r;
    }
}

int mod5(const Int& x)
{
    Int r = x % 5;
    if (r < 0) r += 5;
    return static_cast<int>(r);
}

Int ipow(Int base, unsigned e)
{
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

int valuation(Int m, const Int& q)
{
    if (m == 0) fail(errc::invalid_argument, "valuation: m must be nonzero");
    int v = 0;
    while (m % q == 0) { m /= q; ++v; }
    return v;
}

} // namespace quintessa
