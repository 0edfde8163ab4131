#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitting.hpp"

namespace quintessa {

// 5th-power-free kernel of m: the n with Q(m^(1/5)) = Q(n^(1/5)).
// degenerate when m is itself a perfect 5th power
Int normalize_radicand(const Int& m);

// the three covered radicand shapes: 5^e * p, p^e * q, p^e
enum class RadicandForm { case1, case2, case3, uncovered };

struct GeneratorPair {
    std::string first, second;
    std::string note;
};

struct GeneratorPlan {
    GeneratorPair primary;
    std::vector<GeneratorPair> alternates;
    std::string legend;
};

struct HypothesisCheck {
    std::string name;
    Int base;                    // rational base whose symbol is computed
    uint64_t at_p = 0;           // symbols taken at the primes over this p
    std::vector<int> exponents;  // one per prime over at_p
    int product = 0;
    std::string status;          // "PASS" (nontrivial as asserted) or "FLAG"
    std::string note;
};

struct CaseReport {
    Int n;
    RadicandForm form = RadicandForm::uncovered;
    std::string uncovered_reason;
    uint64_t p = 0;  // the p = -1 (mod 5) prime of the shape (case 3: the base prime)
    int e = 0;       // its exponent (case 1: the exponent of 5)
    uint64_t q = 0;  // case 2 cofactor prime
    FieldKind kind{};
    std::optional<int> q_star;
    bool lambda_ramified = false;
    std::map<std::string, Int> evidence;
    GeneratorPlan generators;
    std::optional<uint64_t> l;
    std::vector<HypothesisCheck> hypotheses;
};

// classification is total: every valid radicand lands in exactly one form
CaseReport classify(const Int& n);

// attach the case's symbol hypotheses, using auxiliary prime l where the
// generator plan references [L]. Errors: uncovered report, l not prime,
// or l in {p, q}.
void hypothesis_check(CaseReport& report, uint64_t l);
void hypothesis_check(CaseReport& report);  // case 3 form (no l involved)

struct SuggestedL {
    uint64_t l = 0;
    std::vector<int> exponents;
    int product = 0;
};

// first `count` candidate auxiliary primes (increasing, skipping 5, p, q)
// with their symbol data at p; selection is left to the caller
std::vector<SuggestedL> suggest_l(const CaseReport& report, int count = 5);

struct ClassData {
    Int u;        // unit-related index, a divisor of 5^6
    Int h_gamma;  // class number of the degree-5 field
    std::string source;
};

struct StructurePrediction {
    int v5_u = 0;
    int v5_h_gamma = 0;
    int v5_h_k = 0;        // v5_u - 1 + 4*(v5_h_gamma - 1)
    bool type_55 = false;  // holds exactly at (v5_u, v5_h_gamma) = (3, 1)
    bool consistent = true;  // false when the formula goes negative
};

// 5-part bookkeeping for the class number of the normal closure
StructurePrediction predicted_structure(const ClassData& data);

const char* to_string(RadicandForm f);

} // namespace quintessa
