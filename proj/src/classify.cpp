#include "classify.hpp"

#include <limits>

#include "symbols.hpp"

namespace quintessa {

Int normalize_radicand(const Int& m)
{
    if (m <= 1) fail(errc::invalid_argument, "normalize_radicand: need m > 1");
    if (m > Int(std::numeric_limits<uint64_t>::max()))
        fail(errc::unsupported, "normalize_radicand: m too large");
    Int n = 1;
    for (auto [p, e] : factor_u64(static_cast<uint64_t>(m)))
        n *= ipow(Int(p), static_cast<unsigned>(e % 5));
    if (n == 1) fail(errc::degenerate, "normalize_radicand: " + m.str() + " is a perfect 5th power");
    return n;
}

namespace {

GeneratorPlan plan_for(RadicandForm form)
{
    GeneratorPlan g;
    switch (form) {
    case RadicandForm::case1:
        g.primary = {"[P1]", "[L]^(1-tau^2)", ""};
        g.alternates = {{"[P2]", "[L]^(1-tau^2)", "second prime over p works as well"},
                        {"[I]", "[L]^(1-tau^2)", "the prime over 5 may replace [P1]"}};
        g.legend = "[P1],[P2]: the primes of k over p; [I]: the prime of k over 5; "
                   "[L]: any prime of k over the auxiliary prime l; tau: the order-4 "
                   "automorphism restricting to zeta -> zeta^2";
        break;
    case RadicandForm::case2:
        g.primary = {"[P1]", "[L]^(1-tau^2)", ""};
        g.alternates = {{"[P2]", "[L]^(1-tau^2)", "second prime over p works as well"},
                        {"[Q]", "[L]^(1-tau^2)", "the prime over q may replace [P1]"}};
        g.legend = "[P1],[P2]: the primes of k over p; [Q]: the prime of k over q; "
                   "[L]: any prime of k over the auxiliary prime l; tau: the order-4 "
                   "automorphism restricting to zeta -> zeta^2";
        break;
    case RadicandForm::case3:
        g.primary = {"[B1]", "[B2]", ""};
        g.alternates = {{"[Bi]", "[Bj]", "any pair with i != j"},
                        {"[B1 B2 B3 B4 B5]", "[B1]^(1-tau^2)", "product form"}};
        g.legend = "[B1]..[B5]: the five primes of k over 5 (second kind); tau: the "
                   "order-4 automorphism restricting to zeta -> zeta^2";
        break;
    default:
        break;
    }
    return g;
}

} // namespace

CaseReport classify(const Int& n)
{
    CaseReport rep;
    rep.n = n;
    rep.kind = field_kind(n);  // validates n > 1, 5th-power-free, desk scale
    rep.lambda_ramified = rep.kind.kind == Kind::first;
    uint64_t nv = static_cast<uint64_t>(n);
    auto fac = factor_u64(nv);
    rep.evidence["n_mod_25"] = nv % 25;

    auto uncovered = [&](const std::string& why) -> CaseReport& {
        rep.form = RadicandForm::uncovered;
        rep.uncovered_reason = why;
        return rep;
    };

    if (nv % 5 == 0) {
        // candidate shape 5^e * p
        uint64_t p = 0;
        int e5 = 0, ep = 0;
        for (auto [pp, ee] : fac) {
            if (pp == 5) e5 = ee;
            else { p = pp; ep = ee; }
        }
        if (fac.size() != 2 || ep != 1) {
            uncovered("5 divides n but n is not 5^e * p with a single other prime to the first power");
            return rep;
        }
        rep.evidence["e"] = e5;
        rep.evidence["p_mod_5"] = p % 5;
        rep.evidence["p_mod_25"] = p % 25;
        if (p % 5 != 4) { uncovered("the cofactor prime p is not -1 (mod 5)"); return rep; }
        if (p % 25 == 24) { uncovered("the cofactor prime p is -1 (mod 25), which is excluded"); return rep; }
        rep.form = RadicandForm::case1;
        rep.p = p;
        rep.e = e5;
        rep.q_star = 1;
        rep.generators = plan_for(rep.form);
        return rep;
    }

    if (fac.size() == 1) {
        uint64_t p = fac[0].first;
        rep.evidence["e"] = fac[0].second;
        rep.evidence["p_mod_5"] = p % 5;
        rep.evidence["p_mod_25"] = p % 25;
        if (p % 25 != 24) { uncovered("n is a prime power but its prime is not -1 (mod 25)"); return rep; }
        rep.form = RadicandForm::case3;
        rep.p = p;
        rep.e = fac[0].second;
        rep.q_star = 2;
        rep.generators = plan_for(rep.form);
        return rep;
    }

    if (fac.size() == 2) {
        // candidate shape p^e * q, roles fixed by residues mod 5
        uint64_t p = 0, q = 0;
        int ep = 0, eq = 0;
        for (auto [pp, ee] : fac) {
            if (pp % 5 == 4) { p = pp; ep = ee; }
            else if (pp % 5 == 2 || pp % 5 == 3) { q = pp; eq = ee; }
        }
        if (p == 0) { uncovered("no prime factor of n is -1 (mod 5)"); return rep; }
        if (q == 0) { uncovered("no prime factor of n is +-2 (mod 5)"); return rep; }
        rep.evidence["e"] = ep;
        rep.evidence["p_mod_5"] = p % 5;
        rep.evidence["p_mod_25"] = p % 25;
        rep.evidence["q_mod_5"] = q % 5;
        rep.evidence["q_mod_25"] = q % 25;
        if (eq != 1) { uncovered("the +-2 (mod 5) prime must appear to the first power"); return rep; }
        if (p % 25 == 24) { uncovered("p is -1 (mod 25), which is excluded"); return rep; }
        if (q % 25 == 7 || q % 25 == 18) { uncovered("q is +-7 (mod 25), which is excluded"); return rep; }
        if (rep.kind.kind != Kind::second) { uncovered("p^e * q is not +-1, +-7 (mod 25)"); return rep; }
        rep.form = RadicandForm::case2;
        rep.p = p;
        rep.e = ep;
        rep.q = q;
        rep.q_star = 1;
        rep.generators = plan_for(rep.form);
        return rep;
    }

    uncovered("n has three or more distinct prime factors");
    return rep;
}

namespace {

HypothesisCheck make_check(const Int& base, uint64_t p)
{
    HypothesisCheck c;
    c.base = base;
    c.at_p = p;
    c.name = base.str() + " is not a quintic residue mod " + std::to_string(p);
    RationalSymbolReport r = symbol_at_rational_prime(CycInt(base), p);
    bool nontrivial = false;
    for (const auto& part : r.parts) {
        c.exponents.push_back(part.j);
        nontrivial = nontrivial || part.j != 0;
    }
    c.product = r.product;
    if (nontrivial) {
        c.status = "PASS";
    } else {
        c.status = "FLAG";
        c.note = "Euler exponents vanish identically: every rational integer is a 5th "
                 "power in the residue fields over p (p = -1 mod 5), so the stated "
                 "hypothesis cannot be certified by this computation";
    }
    return c;
}

void require_covered(const CaseReport& report)
{
    if (report.form == RadicandForm::uncovered)
        fail(errc::invalid_argument, "hypothesis_check: no hypotheses for an uncovered radicand");
}

} // namespace

void hypothesis_check(CaseReport& report, uint64_t l)
{
    require_covered(report);
    if (report.form == RadicandForm::case3) {
        hypothesis_check(report);  // l plays no role
        return;
    }
    if (!is_prime_u64(l)) fail(errc::invalid_argument, "hypothesis_check: l must be prime");
    if (l == report.p || (report.q != 0 && l == report.q))
        fail(errc::invalid_argument, "hypothesis_check: l must differ from the primes of n");
    report.l = l;
    report.hypotheses.clear();
    Int first_base = report.form == RadicandForm::case1 ? Int(5) : Int(report.q);
    report.hypotheses.push_back(make_check(first_base, report.p));
    report.hypotheses.push_back(make_check(Int(l), report.p));
}

void hypothesis_check(CaseReport& report)
{
    require_covered(report);
    if (report.form != RadicandForm::case3)
        fail(errc::invalid_argument, "hypothesis_check: this case needs an auxiliary prime l");
    report.hypotheses.clear();
    report.hypotheses.push_back(make_check(Int(5), report.p));
}

std::vector<SuggestedL> suggest_l(const CaseReport& report, int count)
{
    require_covered(report);
    if (report.form == RadicandForm::case3)
        fail(errc::invalid_argument, "suggest_l: the prime-power case does not use an auxiliary prime");
    std::vector<SuggestedL> out;
    for (uint64_t l = 2; static_cast<int>(out.size()) < count; ++l) {
        if (!is_prime_u64(l)) continue;
        if (l == 5 || l == report.p || l == report.q) continue;
        SuggestedL s;
        s.l = l;
        RationalSymbolReport r = symbol_at_rational_prime(CycInt(Int(l)), report.p);
        for (const auto& part : r.parts) s.exponents.push_back(part.j);
        s.product = r.product;
        out.push_back(std::move(s));
    }
    return out;
}

StructurePrediction predicted_structure(const ClassData& data)
{
    if (data.u < 1 || data.h_gamma < 1)
        fail(errc::invalid_argument, "predicted_structure: u and h_gamma must be positive");
    StructurePrediction out;
    out.v5_u = valuation(data.u, 5);
    out.v5_h_gamma = valuation(data.h_gamma, 5);
    if (out.v5_u > 6)
        fail(errc::invalid_argument, "predicted_structure: u exceeds 5^6");
    if (out.v5_h_gamma > 3)
        fail(errc::invalid_argument, "predicted_structure: v5(h_gamma) above 3 is out of range");
    out.v5_h_k = out.v5_u - 1 + 4 * (out.v5_h_gamma - 1);
    out.type_55 = out.v5_u == 3 && out.v5_h_gamma == 1;
    out.consistent = out.v5_h_k >= 0;
    return out;
}

const char* to_string(RadicandForm f)
{
    switch (f) {
    case RadicandForm::case1: return "case 1 (n = 5^e * p)";
    case RadicandForm::case2: return "case 2 (n = p^e * q)";
    case RadicandForm::case3: return "case 3 (n = p^e)";
    default: return "uncovered";
    }
}

} // namespace quintessa
