#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace quintessa {

// prime of Z[zeta] together with its residue data
struct PrimeK0 {
    CycInt generator;
    uint64_t parent_p = 0;  // rational prime below
    int f = 0;              // residue degree
    bool is_lambda = false;
};

// Factorization of p in Z[zeta] as a multiset (each prime listed with its
// multiplicity): 5 = lambda^4 up to a unit; p = 1 (mod 5) splits into four
// degree-1 primes; p = -1 (mod 5) into two conjugate degree-2 primes
// b + a zeta^2 + a zeta^3 and (a-b) + a zeta^2 + a zeta^3 with
// p = a^2 + ab - b^2, normalized so the first has eval_at_one = 1;
// p = +-2 (mod 5) stays inert.
std::vector<PrimeK0> factor_rational_prime_k0(uint64_t p);

// distinct primes over p (factor list deduplicated)
std::vector<PrimeK0> primes_over(uint64_t p);

PrimeK0 lambda_prime();

// rebuild residue data from a generator; norm must be a prime power p^f
// that fits in 64 bits, f matching the splitting shape of p
PrimeK0 prime_from_generator(const CycInt& gen);

bool divides(const PrimeK0& prime, const CycInt& x);
int v_prime(const PrimeK0& prime, const CycInt& x);  // x != 0

enum class Kind { first, second };

struct FieldKind {
    Kind kind;
    Int radical;       // product of the distinct primes of n
    Int conductor_f4;  // 25 * radical^4 (first kind) or radical^4 (second)
};

// kind of Q(n^(1/5)): second iff n^4 = 1 (mod 25); n > 1, 5th-power-free
FieldKind field_kind(const Int& n);

struct SplitEntry {
    std::string label;
    int e = 1;
    int f = 1;
};

enum class FieldTag { gamma, k0, k };

struct SplittingPattern {
    FieldTag field{};
    uint64_t p = 0;
    Int n;  // radicand (0 when the field does not depend on one)
    std::vector<SplitEntry> entries;
    // residue degrees filled in by Galois degree bookkeeping rather than a
    // stated law (the unramified p = -1, +-2 (mod 5) patterns in k)
    bool degrees_inferred = false;
    int degree() const;  // sum of e*f, must equal [field : Q]
};

SplittingPattern split_in_gamma(uint64_t p, const Int& n);  // [Gamma:Q] = 5
SplittingPattern split_in_k0(uint64_t p);                   // [k0:Q] = 4
SplittingPattern split_in_k(uint64_t p, const Int& n);      // [k:Q] = 20

enum class SplitType { split, inert, ramified };

// behaviour of `prime` in the Kummer extension k0(theta^(1/5))/k0;
// theta != 0. At lambda the decision brute-forces fifth powers over the
// lambda-adic residue system (memoized digit sets), elsewhere it is the
// valuation of theta followed by the Euler criterion on the prime-free part.
SplitType kummer_split_type(const CycInt& theta, const PrimeK0& prime);

// first m lambda-adic digits of x (base lambda, digits in 0..4)
std::vector<int> lambda_digits(CycInt x, int m);

// is n a 5th power mod p? pre: p = 1 (mod 5), p does not divide n
bool is_quintic_residue_mod_p(const Int& n, uint64_t p);

const char* to_string(SplitType t);
const char* to_string(Kind k);
const char* to_string(FieldTag t);

} // namespace quintessa
