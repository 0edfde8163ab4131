#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace quintessa {

using Int = boost::multiprecision::cpp_int;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t powmod_u64(uint64_t a, const Int& e, uint64_t m);

bool is_prime_u64(uint64_t n);

// prime factorization, sorted by prime; n >= 1 (empty for n = 1)
std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n);

// square root mod an odd prime p; pre: a is a quadratic residue.
// Deterministic (non-residue found by increasing scan). Returns the
// smaller of the two roots.
uint64_t sqrt_mod_p(uint64_t a, uint64_t p);

// smallest r of multiplicative order 5 mod p; pre: p prime, p = 1 (mod 5)
uint64_t element_of_order5(uint64_t p);

// canonical residue in 0..4
int mod5(const Int& x);

Int ipow(Int base, unsigned e);

// valuation of prime q in m; m != 0
int valuation(Int m, const Int& q);

} // namespace quintessa
