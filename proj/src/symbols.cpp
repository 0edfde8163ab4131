#include "symbols.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace quintessa {

namespace {

uint64_t inv_mod(uint64_t a, uint64_t p)
{
    return powmod_u64(a, p - 2, p);
}

uint64_t coord_mod(const Int& c, uint64_t p)
{
    Int r = c % p;
    if (r < 0) r += p;
    return static_cast<uint64_t>(r);
}

} // namespace

ResidueField::ResidueField(const PrimeK0& prime) : p_(prime.parent_p), f_(prime.f)
{
    if (p_ == 5)
        fail(errc::unsupported, "residue field at lambda is not used (reduction is eval_at_one)");
    order_ = ipow(Int(p_), static_cast<unsigned>(f_)) - 1;
    if (f_ == 1) {
        // zeta maps to a root of unity in F_p: the r with prime | (zeta - r)
        uint64_t r = 0;
        uint64_t r0 = element_of_order5(p_);
        uint64_t rk = r0;
        for (int k = 0; k < 4; ++k) {
            if (divides(prime, CycInt::zeta() - CycInt(Int(rk)))) { r = rk; break; }
            rk = mulmod_u64(rk, r0, p_);
        }
        if (r == 0) fail(errc::internal, "no attached root of unity for degree-1 prime");
        zeta_ = {r, 0, 0, 0};
        xf_ = {0, 0, 0, 0};  // unused at f = 1
    } else if (f_ == 2) {
        // x^2 - eta x + 1, eta = (-1 +- sqrt 5)/2, the factor annihilated
        // by the generator
        uint64_t s = sqrt_mod_p(5 % p_, p_);
        uint64_t half = inv_mod(2, p_);
        uint64_t eta = 0;
        bool found = false;
        for (uint64_t root : {s, p_ - s}) {
            uint64_t cand = mulmod_u64((root + p_ - 1) % p_, half, p_);
            CycInt q = CycInt::zeta(2) - CycInt(Int(cand)) * CycInt::zeta() + CycInt(1);
            if (divides(prime, q)) { eta = cand; found = true; break; }
        }
        if (!found) fail(errc::internal, "no attached quadratic factor for degree-2 prime");
        zeta_ = {0, 1, 0, 0};
        xf_ = {p_ - 1, eta, 0, 0};  // x^2 = eta x - 1
    } else if (f_ == 4) {
        zeta_ = {0, 1, 0, 0};
        xf_ = {p_ - 1, p_ - 1, p_ - 1, p_ - 1};  // x^4 = -(1 + x + x^2 + x^3)
    } else {
        fail(errc::internal, "unexpected residue degree");
    }
    zeta_pow_[0] = one();
    for (int j = 1; j < 5; ++j) zeta_pow_[static_cast<size_t>(j)] = mul(zeta_pow_[static_cast<size_t>(j - 1)], zeta_);
    if (zeta_ == one() || mul(zeta_pow_[4], zeta_) != one())
        fail(errc::internal, "zeta image does not have order 5");
}

ResidueField::Elt ResidueField::reduce(const CycInt& alpha) const
{
    Elt acc = zero();
    Elt zk = one();
    for (int i = 0; i < 4; ++i) {
        uint64_t c = coord_mod(alpha[i], p_);
        if (c) {
            for (int t = 0; t < f_; ++t)
                acc[static_cast<size_t>(t)] =
                    (acc[static_cast<size_t>(t)] + mulmod_u64(c, zk[static_cast<size_t>(t)], p_)) % p_;
        }
        zk = mul(zk, zeta_);
    }
    return acc;
}

ResidueField::Elt ResidueField::mul(const Elt& a, const Elt& b) const
{
    const int f = f_;
    std::array<uint64_t, 7> prod{};
    for (int i = 0; i < f; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < f; ++j) {
            size_t k = static_cast<size_t>(i + j);
            prod[k] = (prod[k] + mulmod_u64(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)], p_)) % p_;
        }
    }
    for (int d = 2 * f - 2; d >= f; --d) {
        uint64_t c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        // x^d = x^(d-f) * x^f
        for (int t = 0; t < f; ++t) {
            size_t k = static_cast<size_t>(d - f + t);
            prod[k] = (prod[k] + mulmod_u64(c, xf_[static_cast<size_t>(t)], p_)) % p_;
        }
    }
    Elt out{};
    for (int t = 0; t < f; ++t) out[static_cast<size_t>(t)] = prod[static_cast<size_t>(t)];
    return out;
}

ResidueField::Elt ResidueField::pow(Elt a, Int e) const
{
    Elt r = one();
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int ResidueField::euler_index(const Elt& a) const
{
    if (is_zero(a)) fail(errc::internal, "euler_index: zero element");
    Elt e = pow(a, order_ / 5);
    for (int j = 0; j < 5; ++j)
        if (e == zeta_pow_[static_cast<size_t>(j)]) return j;
    fail(errc::internal, "euler_index: power is not a 5th root of unity");
}

const ResidueField& residue_field_for(const PrimeK0& prime)
{
    static std::mutex mu;
    static std::unordered_map<std::string, std::unique_ptr<ResidueField>> cache;
    std::string key = std::to_string(prime.parent_p) + "|" + prime.generator.str();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<ResidueField>(prime)).first;
    return *it->second;
}

int power_residue_symbol(const CycInt& alpha, const PrimeK0& prime)
{
    if (prime.parent_p == 5)
        fail(errc::unsupported, "power_residue_symbol: undefined at the prime over 5");
    const ResidueField& F = residue_field_for(prime);
    ResidueField::Elt a = F.reduce(alpha);
    if (F.is_zero(a))
        fail(errc::not_coprime, "power_residue_symbol: prime divides " + alpha.str());
    return F.euler_index(a);
}

RationalSymbolReport symbol_at_rational_prime(const CycInt& alpha, uint64_t p)
{
    if (p == 5) fail(errc::unsupported, "symbol_at_rational_prime: p = 5 not supported");
    RationalSymbolReport out;
    out.p = p;
    int sum = 0;
    for (const PrimeK0& prime : primes_over(p)) {
        int j = power_residue_symbol(alpha, prime);
        sum += j;
        out.parts.push_back({prime, j});
    }
    out.product = sum % 5;
    return out;
}

int norm_residue_unramified(const CycInt& beta, const CycInt& alpha, const PrimeK0& prime)
{
    if (beta.is_zero()) fail(errc::invalid_argument, "norm_residue_unramified: beta must be nonzero");
    if (alpha.is_zero()) fail(errc::invalid_argument, "norm_residue_unramified: alpha must be nonzero");
    if (prime.parent_p == 5)
        fail(errc::unsupported, "norm_residue_unramified: place over 5 is ramified");
    int va = v_prime(prime, alpha);
    if (va % 5 != 0)
        fail(errc::unsupported, "norm_residue_unramified: prime ramifies (v(alpha) = " +
                                    std::to_string(va) + " not 0 mod 5)");
    CycInt a = alpha;
    for (int i = 0; i < va; ++i) a = div_exact(a, prime.generator);
    int b = v_prime(prime, beta);
    int j = power_residue_symbol(a, prime);
    return ((-b * j) % 5 + 5) % 5;
}

ConjugatePairReport conjugate_symbol_identities(uint64_t p, const Int& c)
{
    if (p % 5 != 4 || !is_prime_u64(p))
        fail(errc::invalid_argument, "conjugate_symbol_identities: p must be a prime = -1 (mod 5)");
    if (c % p == 0)
        fail(errc::not_coprime, "conjugate_symbol_identities: p divides c");
    auto pair = factor_rational_prime_k0(p);
    ConjugatePairReport out;
    out.p = p;
    out.c = c;
    out.pi1 = pair[0].generator;
    out.pi2 = pair[1].generator;
    out.j1 = power_residue_symbol(CycInt(c), pair[0]);
    out.j2 = power_residue_symbol(CycInt(c), pair[1]);
    out.j12 = power_residue_symbol(pair[1].generator, pair[0]);
    out.j21 = power_residue_symbol(pair[0].generator, pair[1]);
    out.doubling_holds = out.j1 == (2 * out.j2) % 5;
    out.cross_trivial = out.j12 == 0 && out.j21 == 0;
    out.c_trivial = out.j1 == 0 && out.j2 == 0;
    return out;
}

} // namespace quintessa
