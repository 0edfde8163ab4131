#include <doctest.h>

#include <set>

#include "splitting.hpp"
#include "symbols.hpp"

using namespace quintessa;

namespace {

std::vector<std::pair<int, int>> ef(const SplittingPattern& pat)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& e : pat.entries) out.push_back({e.e, e.f});
    return out;
}

} // namespace

TEST_CASE("factorization of 19 into the conjugate pair")
{
    auto pr = factor_rational_prime_k0(19);
    REQUIRE(pr.size() == 2);
    CHECK(pr[0].generator == CycInt(3, 0, 4, 4));
    CHECK(pr[1].generator == CycInt(1, 0, 4, 4));
    CHECK(pr[0].f == 2);
    CHECK(pr[1].f == 2);
    CHECK(pr[0].parent_p == 19);
    CHECK(pr[0].generator * pr[1].generator == CycInt(19));
    CHECK(pr[0].generator.galois(2) == -pr[1].generator);
}

TEST_CASE("factorization of 29 lands on a=5, b=1")
{
    auto pr = factor_rational_prime_k0(29);
    REQUIRE(pr.size() == 2);
    CHECK(pr[0].generator == CycInt(1, 0, 5, 5));
    CHECK(pr[1].generator == CycInt(4, 0, 5, 5));
    CHECK(pr[0].generator * pr[1].generator == CycInt(29));
}

TEST_CASE("conjugate pair shape for all p = -1 (mod 5) below 600")
{
    for (uint64_t p = 2; p < 600; ++p) {
        if (!is_prime_u64(p) || p % 5 != 4) continue;
        auto pr = factor_rational_prime_k0(p);
        REQUIRE(pr.size() == 2);
        CHECK(pr[0].generator * pr[1].generator == CycInt(Int(p)));
        CHECK(pr[0].generator.eval_at_one() == 1);
        CHECK(pr[1].generator.eval_at_one() == 4);
        CHECK(pr[0].generator.galois(2) == -pr[1].generator);
        CHECK(pr[0].generator.norm() == Int(p) * Int(p));
    }
}

TEST_CASE("factorization of 11 picks up the four fifth roots of unity")
{
    auto pr = factor_rational_prime_k0(11);
    REQUIRE(pr.size() == 4);
    std::set<uint64_t> roots;
    for (const auto& q : pr) {
        CHECK(q.generator.norm() == 11);
        CHECK(q.f == 1);
        for (uint64_t r : {3, 9, 5, 4}) {
            if (divides(q, CycInt::zeta() - CycInt(Int(r)))) roots.insert(r);
        }
    }
    CHECK(roots == std::set<uint64_t>{3, 9, 5, 4});
    // pairwise distinct ideals
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            CHECK(!divides(pr[i], pr[j].generator));
}

TEST_CASE("inert and ramified rational primes")
{
    auto pr = factor_rational_prime_k0(7);
    REQUIRE(pr.size() == 1);
    CHECK(pr[0].generator == CycInt(7));
    CHECK(pr[0].f == 4);

    pr = factor_rational_prime_k0(5);
    REQUIRE(pr.size() == 4);
    for (const auto& q : pr) {
        CHECK(q.is_lambda);
        CHECK(q.generator == CycInt::lambda());
    }

    CHECK_THROWS_AS(factor_rational_prime_k0(6), error);
    CHECK_THROWS_AS(factor_rational_prime_k0(1), error);

    CHECK(primes_over(19).size() == 2);
    CHECK(primes_over(11).size() == 4);
    CHECK(primes_over(7).size() == 1);
    CHECK(primes_over(5).size() == 1);
}

TEST_CASE("factor product reconstructs p up to a unit for p < 300")
{
    for (uint64_t p = 2; p < 300; ++p) {
        if (!is_prime_u64(p)) continue;
        auto pr = factor_rational_prime_k0(p);
        CycInt prod(1);
        int ef_sum = 0;
        for (const auto& q : pr) {
            prod *= q.generator;
            ef_sum += q.f;  // multiset: each listed e times
        }
        CHECK(ef_sum == 4);
        CHECK(prod.norm() == ipow(Int(p), 4));
        CHECK(div_exact(prod, CycInt(Int(p))).norm() == 1);  // associate of p
    }
}

TEST_CASE("prime_from_generator round trips")
{
    PrimeK0 q = prime_from_generator(CycInt(3, 0, 4, 4));
    CHECK(q.parent_p == 19);
    CHECK(q.f == 2);
    CHECK(!q.is_lambda);

    q = prime_from_generator(CycInt::lambda());
    CHECK(q.parent_p == 5);
    CHECK(q.is_lambda);

    q = prime_from_generator(CycInt(2, 1, 0, 0));  // norm 11
    CHECK(q.parent_p == 11);
    CHECK(q.f == 1);

    q = prime_from_generator(CycInt(7));
    CHECK(q.f == 4);

    CHECK_THROWS_AS(prime_from_generator(CycInt(0)), error);
    CHECK_THROWS_AS(prime_from_generator(CycInt::zeta()), error);
    CHECK_THROWS_AS(prime_from_generator(CycInt(6)), error);      // norm 6^4
    CHECK_THROWS_AS(prime_from_generator(CycInt(19)), error);     // norm 19^4, f mismatch
}

TEST_CASE("prime valuations")
{
    auto pr = factor_rational_prime_k0(19);
    CHECK(v_prime(pr[0], CycInt(19)) == 1);
    CHECK(v_prime(pr[1], CycInt(19)) == 1);
    CHECK(v_prime(pr[0], CycInt(7)) == 0);
    CycInt g = pr[0].generator;
    CHECK(v_prime(pr[0], g * g * CycInt(3)) == 2);
    CHECK(v_prime(lambda_prime(), CycInt(5)) == 4);
    CHECK_THROWS_AS(v_prime(pr[0], CycInt(0)), error);
}

TEST_CASE("field kind and conductor")
{
    FieldKind k = field_kind(Int(95));
    CHECK(k.kind == Kind::first);
    CHECK(k.radical == 95);
    CHECK(k.conductor_f4 == Int(25) * ipow(Int(95), 4));

    k = field_kind(Int(149));
    CHECK(k.kind == Kind::second);
    CHECK(k.radical == 149);
    CHECK(k.conductor_f4 == ipow(Int(149), 4));

    k = field_kind(Int(57));
    CHECK(k.kind == Kind::second);
    CHECK(k.radical == 57);

    k = field_kind(Int(12));  // 2^2 * 3
    CHECK(k.kind == Kind::first);
    CHECK(k.radical == 6);
    CHECK(k.conductor_f4 == Int(25) * ipow(Int(6), 4));

    CHECK_THROWS_AS(field_kind(Int(1)), error);
    CHECK_THROWS_AS(field_kind(Int(0)), error);
    CHECK_THROWS_AS(field_kind(Int(32)), error);   // 2^5
    CHECK_THROWS_AS(field_kind(Int(-95)), error);
}

TEST_CASE("second kind iff n mod 25 in {1, 7, 18, 24}")
{
    std::set<uint64_t> klass;
    for (uint64_t r = 0; r < 25; ++r)
        if (r * r % 25 * (r * r % 25) % 25 == 1) klass.insert(r);
    CHECK(klass == std::set<uint64_t>{1, 7, 18, 24});
    for (uint64_t n = 2; n < 3000; ++n) {
        bool fifth_free = true;
        for (auto [p, e] : factor_u64(n)) fifth_free = fifth_free && e < 5;
        if (!fifth_free) continue;
        CHECK((field_kind(Int(n)).kind == Kind::second) == (klass.count(n % 25) > 0));
    }
}

TEST_CASE("splitting patterns in the degree-5 field")
{
    CHECK(ef(split_in_gamma(19, Int(95))) == std::vector<std::pair<int, int>>{{5, 1}});
    CHECK(ef(split_in_gamma(5, Int(95))) == std::vector<std::pair<int, int>>{{5, 1}});
    CHECK(ef(split_in_gamma(2, Int(95))) == std::vector<std::pair<int, int>>{{1, 1}, {1, 4}});
    CHECK(ef(split_in_gamma(11, Int(95))) == std::vector<std::pair<int, int>>{{1, 5}});
    CHECK(ef(split_in_gamma(29, Int(95))) == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 2}});
    CHECK(ef(split_in_gamma(5, Int(149))) == std::vector<std::pair<int, int>>{{1, 1}, {4, 1}});
    CHECK(ef(split_in_gamma(31, Int(6))) ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}});
    for (uint64_t p : {2, 3, 5, 7, 11, 19, 29, 31}) {
        CHECK(split_in_gamma(p, Int(95)).degree() == 5);
        CHECK(split_in_gamma(p, Int(149)).degree() == 5);
    }
    CHECK_THROWS_AS(split_in_gamma(4, Int(95)), error);
    CHECK_THROWS_AS(split_in_gamma(19, Int(32)), error);
}

TEST_CASE("splitting patterns in the cyclotomic field")
{
    CHECK(ef(split_in_k0(5)) == std::vector<std::pair<int, int>>{{4, 1}});
    CHECK(ef(split_in_k0(11)) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(ef(split_in_k0(19)) == std::vector<std::pair<int, int>>{{1, 2}, {1, 2}});
    CHECK(ef(split_in_k0(7)) == std::vector<std::pair<int, int>>{{1, 4}});
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 19}) CHECK(split_in_k0(p).degree() == 4);
}

TEST_CASE("splitting patterns in the normal closure")
{
    CHECK(ef(split_in_k(5, Int(95))) == std::vector<std::pair<int, int>>{{20, 1}});
    auto b = split_in_k(5, Int(149));
    CHECK(b.entries.size() == 5);
    for (const auto& en : b.entries) CHECK((en.e == 4 && en.f == 1));
    CHECK(b.entries[0].label == "B1");

    auto pk = split_in_k(19, Int(95));
    CHECK(ef(pk) == std::vector<std::pair<int, int>>{{5, 2}, {5, 2}});
    CHECK(!pk.degrees_inferred);

    auto l3 = split_in_k(3, Int(95));
    CHECK(l3.entries.size() == 5);
    for (const auto& en : l3.entries) CHECK((en.e == 1 && en.f == 4));
    CHECK(l3.degrees_inferred);

    auto l29 = split_in_k(29, Int(95));
    CHECK(l29.entries.size() == 10);
    for (const auto& en : l29.entries) CHECK((en.e == 1 && en.f == 2));
    CHECK(l29.degrees_inferred);

    auto l11 = split_in_k(11, Int(95));
    CHECK(l11.entries.size() == 4);
    for (const auto& en : l11.entries) CHECK((en.e == 1 && en.f == 5));

    auto l31 = split_in_k(31, Int(6));
    CHECK(l31.entries.size() == 20);
    for (const auto& en : l31.entries) CHECK((en.e == 1 && en.f == 1));

    // ramified over n: p = 1 (mod 5) divides n
    auto p11 = split_in_k(11, Int(22));
    CHECK(p11.entries.size() == 4);
    for (const auto& en : p11.entries) CHECK((en.e == 5 && en.f == 1));

    // p = +-2 (mod 5) divides n
    auto p2 = split_in_k(2, Int(6));
    CHECK(ef(p2) == std::vector<std::pair<int, int>>{{5, 4}});

    for (uint64_t p : {2, 3, 5, 7, 11, 19, 29, 31}) {
        CHECK(split_in_k(p, Int(95)).degree() == 20);
        CHECK(split_in_k(p, Int(149)).degree() == 20);
        CHECK(split_in_k(p, Int(6)).degree() == 20);
    }
}

TEST_CASE("lambda digit expansion")
{
    CHECK(lambda_digits(CycInt(7), 6) == std::vector<int>{2, 0, 0, 0, 4, 3});
    CHECK(lambda_digits(CycInt(32), 6) == std::vector<int>{2, 0, 0, 0, 4, 3});
    CHECK(lambda_digits(CycInt(149), 6) == std::vector<int>{4, 0, 0, 0, 1, 2});
    CHECK(lambda_digits(CycInt(95), 6) == std::vector<int>{0, 0, 0, 0, 1, 2});
    CHECK(lambda_digits(CycInt(2), 6) == std::vector<int>{2, 0, 0, 0, 0, 0});
    // digits reconstruct x mod lambda^m
    CycInt x(123, -45, 8, 2);
    auto d = lambda_digits(x, 6);
    CycInt acc(0), lp(1);
    for (int dig : d) {
        acc += lp * CycInt(dig);
        lp *= CycInt::lambda();
    }
    CHECK(v_lambda(x - acc) >= 6);
}

TEST_CASE("kummer split type at lambda")
{
    PrimeK0 lam = lambda_prime();
    CHECK(kummer_split_type(CycInt(95), lam) == SplitType::ramified);
    CHECK(kummer_split_type(CycInt(2), lam) == SplitType::ramified);
    CHECK(kummer_split_type(CycInt(149), lam) == SplitType::split);
    CHECK(kummer_split_type(CycInt(57), lam) == SplitType::split);
    CHECK(kummer_split_type(CycInt(7), lam) == SplitType::split);
    // inert witness: 1 + lambda^5
    CHECK(kummer_split_type(CycInt(-4, -10, 5, -15), lam) == SplitType::inert);
    CHECK_THROWS_AS(kummer_split_type(CycInt(0), lam), error);

    // rational radicands never come out inert; split iff second kind
    for (uint64_t n = 2; n < 300; ++n) {
        if (n % 5 == 0) continue;
        bool fifth_free = true;
        for (auto [p, e] : factor_u64(n)) fifth_free = fifth_free && e < 5;
        if (!fifth_free) continue;
        SplitType t = kummer_split_type(CycInt(Int(n)), lam);
        CHECK(t != SplitType::inert);
        CHECK((t == SplitType::split) == (field_kind(Int(n)).kind == Kind::second));
    }
}

TEST_CASE("kummer split type away from lambda")
{
    PrimeK0 p7 = factor_rational_prime_k0(7)[0];
    CHECK(kummer_split_type(CycInt(32), p7) == SplitType::split);  // 2^5
    for (const PrimeK0& q : primes_over(11)) {
        CHECK(kummer_split_type(CycInt(32), q) == SplitType::split);
        CHECK(kummer_split_type(CycInt(19), q) == SplitType::inert);  // 19 = 8, not in {1,10} mod 11
        CHECK(kummer_split_type(CycInt(11) * CycInt(11) * CycInt(19), q) == SplitType::ramified);
    }
    // v = 5 strips cleanly
    auto pr19 = factor_rational_prime_k0(19);
    CycInt g = pr19[0].generator;
    CycInt g5 = g * g * g * g * g;
    CHECK(kummer_split_type(g5 * CycInt(2), pr19[0]) == SplitType::split);   // (2/pi1) = 0
    CHECK(kummer_split_type(g * CycInt(2), pr19[0]) == SplitType::ramified); // v = 1
}

TEST_CASE("quintic residue test mod p")
{
    CHECK(is_quintic_residue_mod_p(Int(6), 31));
    CHECK(is_quintic_residue_mod_p(Int(1), 11));
    CHECK(!is_quintic_residue_mod_p(Int(2), 11));
    CHECK(is_quintic_residue_mod_p(Int(10), 11));
    CHECK_THROWS_AS(is_quintic_residue_mod_p(Int(2), 19), error);
    CHECK_THROWS_AS(is_quintic_residue_mod_p(Int(22), 11), error);
}
