#include "splitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "symbols.hpp"

namespace quintessa {

namespace {

uint64_t isqrt_u64(uint64_t n)
{
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void require_prime(uint64_t p, const char* who)
{
    if (!is_prime_u64(p)) fail(errc::invalid_argument, std::string(who) + ": not a prime");
}

} // namespace

PrimeK0 lambda_prime()
{
    return PrimeK0{CycInt::lambda(), 5, 1, true};
}

std::vector<PrimeK0> factor_rational_prime_k0(uint64_t p)
{
    require_prime(p, "factor_rational_prime_k0");
    if (p == 5) return std::vector<PrimeK0>(4, lambda_prime());

    switch (p % 5) {
    case 1: {
        std::vector<PrimeK0> out;
        uint64_t r = element_of_order5(p);
        uint64_t rk = r;
        for (int k = 0; k < 4; ++k) {
            CycInt g = gcd(CycInt(Int(p)), CycInt::zeta() - CycInt(Int(rk)));
            if (g.norm() != p) fail(errc::internal, "degree-1 prime has wrong norm");
            out.push_back(PrimeK0{g, p, 1, false});
            rk = mulmod_u64(rk, r, p);
        }
        return out;
    }
    case 4: {
        // p = a^2 + ab - b^2; scan a upward from sqrt(4p/5)
        uint64_t a = isqrt_u64((4 * p) / 5);
        if (a == 0) a = 1;
        for (;; ++a) {
            unsigned __int128 d = static_cast<unsigned __int128>(5) * a * a;
            if (d < static_cast<unsigned __int128>(4) * p) continue;
            uint64_t D = static_cast<uint64_t>(d - static_cast<unsigned __int128>(4) * p);
            uint64_t s = isqrt_u64(D);
            if (s * s != D) continue;
            if ((a + s) % 2 != 0) continue;  // a, s always share parity; guard anyway
            uint64_t b = (a + s) / 2;
            Int ai(a), bi(b);
            if (mod5(2 * ai + bi) != 1) bi = ai - bi;  // swap b -> a-b
            CycInt pi1(bi, 0, ai, ai), pi2(ai - bi, 0, ai, ai);
            if (pi1 * pi2 != CycInt(Int(p))) fail(errc::internal, "conjugate pair product mismatch");
            if (pi1.eval_at_one() != 1 || pi2.eval_at_one() != 4)
                fail(errc::internal, "conjugate pair normalization failed");
            return {PrimeK0{pi1, p, 2, false}, PrimeK0{pi2, p, 2, false}};
        }
    }
    default:
        return {PrimeK0{CycInt(Int(p)), p, 4, false}};
    }
}

std::vector<PrimeK0> primes_over(uint64_t p)
{
    std::vector<PrimeK0> all = factor_rational_prime_k0(p);
    std::vector<PrimeK0> out;
    for (const auto& q : all) {
        bool seen = false;
        for (const auto& r : out) seen = seen || r.generator == q.generator;
        if (!seen) out.push_back(q);
    }
    return out;
}

PrimeK0 prime_from_generator(const CycInt& gen)
{
    if (gen.is_zero()) fail(errc::invalid_argument, "prime_from_generator: zero");
    Int nrm = gen.norm();
    if (nrm == 1) fail(errc::invalid_argument, "prime_from_generator: unit");
    if (nrm > Int(std::numeric_limits<uint64_t>::max()))
        fail(errc::unsupported, "prime_from_generator: norm too large");
    uint64_t nv = static_cast<uint64_t>(nrm);
    auto fac = factor_u64(nv);
    if (fac.size() != 1)
        fail(errc::invalid_argument, "prime_from_generator: norm " + nrm.str() + " is not a prime power");
    uint64_t p = fac[0].first;
    int f = fac[0].second;
    int expected_f = p == 5 ? 1 : (p % 5 == 1 ? 1 : (p % 5 == 4 ? 2 : 4));
    if (f != expected_f)
        fail(errc::invalid_argument, "prime_from_generator: norm " + nrm.str() + " does not match a prime of Z[zeta]");
    return PrimeK0{gen, p, f, p == 5};
}

bool divides(const PrimeK0& prime, const CycInt& x)
{
    CycInt num = x * prime.generator.conj_product();
    Int n = prime.generator.norm();
    for (int i = 0; i < 4; ++i)
        if (num[i] % n != 0) return false;
    return true;
}

int v_prime(const PrimeK0& prime, const CycInt& x)
{
    if (x.is_zero()) fail(errc::invalid_argument, "v_prime: x must be nonzero");
    int v = 0;
    CycInt t = x;
    while (divides(prime, t)) {
        t = div_exact(t, prime.generator);
        ++v;
    }
    return v;
}

FieldKind field_kind(const Int& n)
{
    if (n <= 1) fail(errc::invalid_argument, "field_kind: need n > 1");
    if (n > Int(std::numeric_limits<uint64_t>::max()))
        fail(errc::unsupported, "field_kind: n too large");
    uint64_t nv = static_cast<uint64_t>(n);
    Int radical = 1;
    for (auto [p, e] : factor_u64(nv)) {
        if (e >= 5) fail(errc::invalid_argument, "field_kind: n is not 5th-power-free");
        radical *= p;
    }
    uint64_t n25 = nv % 25;
    bool second = (n25 * n25 % 25) * (n25 * n25 % 25) % 25 == 1;
    FieldKind out;
    out.kind = second ? Kind::second : Kind::first;
    out.radical = radical;
    out.conductor_f4 = ipow(radical, 4) * (second ? 1 : 25);
    return out;
}

int SplittingPattern::degree() const
{
    int s = 0;
    for (const auto& en : entries) s += en.e * en.f;
    return s;
}

namespace {

std::vector<SplitEntry> repeat(const std::string& stem, int count, int e, int f)
{
    std::vector<SplitEntry> out;
    if (count == 1) {
        out.push_back({stem, e, f});
        return out;
    }
    for (int i = 1; i <= count; ++i) out.push_back({stem + std::to_string(i), e, f});
    return out;
}

void require_radicand(const Int& n)
{
    field_kind(n);  // validates n > 1, 5th-power-free, size
}

} // namespace

SplittingPattern split_in_gamma(uint64_t p, const Int& n)
{
    require_prime(p, "split_in_gamma");
    require_radicand(n);
    SplittingPattern out{FieldTag::gamma, p, n, {}, false};
    if (n % p == 0) {
        out.entries = repeat("P", 1, 5, 1);
    } else if (p == 5) {
        if (field_kind(n).kind == Kind::first) {
            out.entries = repeat("P", 1, 5, 1);
        } else {
            out.entries = {{"P1", 1, 1}, {"P2", 4, 1}};
        }
    } else {
        switch (p % 5) {
        case 1:
            if (is_quintic_residue_mod_p(n, p))
                out.entries = repeat("P", 5, 1, 1);
            else
                out.entries = repeat("P", 1, 1, 5);
            break;
        case 4:
            out.entries = {{"P1", 1, 1}, {"P2", 1, 2}, {"P3", 1, 2}};
            break;
        default:
            out.entries = {{"P1", 1, 1}, {"P2", 1, 4}};
            break;
        }
    }
    if (out.degree() != 5) fail(errc::internal, "gamma pattern degree mismatch");
    return out;
}

SplittingPattern split_in_k0(uint64_t p)
{
    require_prime(p, "split_in_k0");
    SplittingPattern out{FieldTag::k0, p, 0, {}, false};
    if (p == 5) {
        out.entries = {{"lambda", 4, 1}};
    } else {
        switch (p % 5) {
        case 1: out.entries = repeat("pi", 4, 1, 1); break;
        case 4: out.entries = repeat("pi", 2, 1, 2); break;
        default: out.entries = {{"pi1", 1, 4}}; break;
        }
    }
    if (out.degree() != 4) fail(errc::internal, "k0 pattern degree mismatch");
    return out;
}

SplittingPattern split_in_k(uint64_t p, const Int& n)
{
    require_prime(p, "split_in_k");
    require_radicand(n);
    SplittingPattern out{FieldTag::k, p, n, {}, false};
    if (p == 5 && n % 5 != 0 && field_kind(n).kind == Kind::second) {
        out.entries = repeat("B", 5, 4, 1);
    } else if (p == 5) {
        out.entries = repeat("L", 1, 20, 1);
    } else if (n % p == 0) {
        switch (p % 5) {
        case 1: out.entries = repeat("P", 4, 5, 1); break;
        case 4: out.entries = repeat("P", 2, 5, 2); break;
        default: out.entries = repeat("P", 1, 5, 4); break;
        }
    } else {
        switch (p % 5) {
        case 1:
            if (is_quintic_residue_mod_p(n, p))
                out.entries = repeat("L", 20, 1, 1);
            else
                out.entries = repeat("L", 4, 1, 5);
            break;
        case 4:
            out.entries = repeat("L", 10, 1, 2);
            out.degrees_inferred = true;
            break;
        default:
            out.entries = repeat("L", 5, 1, 4);
            out.degrees_inferred = true;
            break;
        }
    }
    if (out.degree() != 20) fail(errc::internal, "k pattern degree mismatch");
    return out;
}

bool is_quintic_residue_mod_p(const Int& n, uint64_t p)
{
    if (p % 5 != 1) fail(errc::invalid_argument, "is_quintic_residue_mod_p: p must be 1 mod 5");
    Int r = n % p;
    if (r < 0) r += p;
    uint64_t a = static_cast<uint64_t>(r);
    if (a == 0) fail(errc::invalid_argument, "is_quintic_residue_mod_p: p divides n");
    return powmod_u64(a, (p - 1) / 5, p) == 1;
}

// ---- lambda-adic fifth powers ----

namespace {

std::vector<int> digits_of(CycInt x, int m)
{
    std::vector<int> out;
    out.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int a = x.eval_at_one();
        out.push_back(a);
        x = div_exact(x - CycInt(a), CycInt::lambda());
    }
    return out;
}

uint32_t pack_digits(const std::vector<int>& d)
{
    uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * 5 + static_cast<uint32_t>(d[i]);
    return v;
}

// digit patterns of fifth powers over the residue system sum a_i lambda^i
std::unordered_set<uint32_t> fifth_power_digits(int m)
{
    std::vector<CycInt> lampow(static_cast<size_t>(m));
    lampow[0] = CycInt(1);
    for (int i = 1; i < m; ++i) lampow[static_cast<size_t>(i)] = lampow[static_cast<size_t>(i - 1)] * CycInt::lambda();

    std::unordered_set<uint32_t> out;
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 5;
    for (int idx = 0; idx < total; ++idx) {
        CycInt x(0);
        int t = idx;
        for (int i = 0; i < m; ++i) {
            int a = t % 5;
            t /= 5;
            if (a) x += lampow[static_cast<size_t>(i)] * CycInt(a);
        }
        CycInt x2 = x * x;
        CycInt x5 = x2 * x2 * x;
        out.insert(pack_digits(digits_of(x5, m)));
    }
    return out;
}

const std::unordered_set<uint32_t>& s5_set()
{
    static const std::unordered_set<uint32_t> s = fifth_power_digits(5);
    return s;
}

const std::unordered_set<uint32_t>& s6_set()
{
    static const std::unordered_set<uint32_t> s = fifth_power_digits(6);
    return s;
}

} // namespace

std::vector<int> lambda_digits(CycInt x, int m)
{
    return digits_of(std::move(x), m);
}

SplitType kummer_split_type(const CycInt& theta, const PrimeK0& prime)
{
    if (theta.is_zero()) fail(errc::invalid_argument, "kummer_split_type: theta must be nonzero");
    if (prime.is_lambda) {
        int v = v_lambda(theta);
        if (v % 5 != 0) return SplitType::ramified;
        CycInt t = theta;
        for (int i = 0; i < v; ++i) t = div_exact(t, CycInt::lambda());
        if (s6_set().count(pack_digits(digits_of(t, 6)))) return SplitType::split;
        if (s5_set().count(pack_digits(digits_of(t, 5)))) return SplitType::inert;
        return SplitType::ramified;
    }
    int v = v_prime(prime, theta);
    if (v % 5 != 0) return SplitType::ramified;
    CycInt t = theta;
    for (int i = 0; i < v; ++i) t = div_exact(t, prime.generator);
    return power_residue_symbol(t, prime) == 0 ? SplitType::split : SplitType::inert;
}

const char* to_string(SplitType t)
{
    switch (t) {
    case SplitType::split: return "split";
    case SplitType::inert: return "inert";
    default: return "ramified";
    }
}

const char* to_string(Kind k)
{
    return k == Kind::first ? "first" : "second";
}

const char* to_string(FieldTag t)
{
    switch (t) {
    case FieldTag::gamma: return "gamma";
    case FieldTag::k0: return "k0";
    default: return "k";
    }
}

} // namespace quintessa
