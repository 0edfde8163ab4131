#include "report.hpp"

#include <sstream>

namespace quintessa {

using nlohmann::json;

namespace {

json int_json(const Int& v)
{
    // arbitrary precision does not fit JSON numbers; ship decimal strings
    return v.str();
}

json hypothesis_json(const HypothesisCheck& h)
{
    return json{{"name", h.name},          {"base", int_json(h.base)},
                {"at_p", h.at_p},          {"exponents", h.exponents},
                {"product", h.product},    {"status", h.status},
                {"note", h.note}};
}

std::string exponents_text(const std::vector<int>& xs)
{
    std::string s = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + ")";
}

}

json to_json(const CaseReport& r, const std::vector<SuggestedL>* suggestions)
{
    json j;
    j["n"] = int_json(r.n);
    j["form"] = to_string(r.form);
    j["covered"] = r.form != RadicandForm::uncovered;
    if (r.form == RadicandForm::uncovered) {
        j["reason"] = r.uncovered_reason;
    } else {
        j["p"] = r.p;
        j["e"] = r.e;
        if (r.q) j["q"] = r.q;
        j["kind"] = to_json(r.kind, r.n);
        if (r.q_star) j["q_star"] = *r.q_star;
        j["lambda_ramified"] = r.lambda_ramified;
        json gens;
        gens["primary"] = json{{"first", r.generators.primary.first},
                               {"second", r.generators.primary.second},
                               {"note", r.generators.primary.note}};
        gens["alternates"] = json::array();
        for (const auto& a : r.generators.alternates)
            gens["alternates"].push_back(
                json{{"first", a.first}, {"second", a.second}, {"note", a.note}});
        gens["legend"] = r.generators.legend;
        j["generators"] = gens;
    }
    json evidence = json::object();
    for (const auto& [key, value] : r.evidence) evidence[key] = int_json(value);
    j["evidence"] = evidence;
    if (r.l) j["l"] = *r.l;
    if (!r.hypotheses.empty()) {
        j["hypotheses"] = json::array();
        for (const auto& h : r.hypotheses) j["hypotheses"].push_back(hypothesis_json(h));
    }
    if (suggestions) {
        j["suggested_l"] = json::array();
        for (const auto& s : *suggestions)
            j["suggested_l"].push_back(json{{"l", s.l},
                                            {"exponents", s.exponents},
                                            {"product", s.product}});
    }
    return j;
}

json to_json(const SplittingPattern& p)
{
    json j;
    j["field"] = to_string(p.field);
    j["p"] = p.p;
    if (p.n != 0) j["n"] = int_json(p.n);
    j["degree"] = p.degree();
    j["degrees_inferred"] = p.degrees_inferred;
    j["primes"] = json::array();
    for (const auto& entry : p.entries)
        j["primes"].push_back(json{{"label", entry.label}, {"e", entry.e}, {"f", entry.f}});
    return j;
}

json to_json(const RationalSymbolReport& r, const CycInt& alpha)
{
    json j;
    j["alpha"] = alpha.str();
    j["p"] = r.p;
    j["parts"] = json::array();
    for (const auto& part : r.parts)
        j["parts"].push_back(json{{"prime", part.prime.generator.str()},
                                  {"f", part.prime.f},
                                  {"j", part.j}});
    j["product"] = r.product;
    return j;
}

json to_json(const FieldKind& kind, const Int& n)
{
    return json{{"n", int_json(n)},
                {"kind", to_string(kind.kind)},
                {"radical", int_json(kind.radical)},
                {"conductor_f4", int_json(kind.conductor_f4)}};
}

json to_json(const VerificationReport& rep)
{
    json j;
    j["rows"] = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["table"] = r.row.table;
        row["line"] = r.row.line;
        row["p"] = r.row.p;
        if (r.row.q) row["q"] = r.row.q;
        if (r.row.l) row["l"] = r.row.l;
        row["e"] = r.row.e;
        row["e_assumed"] = r.row.e_assumed;
        row["type"] = r.row.claimed_type;
        row["n"] = int_json(r.row.radicand());
        row["failed"] = r.failed;
        row["flagged"] = r.flagged;
        row["skipped"] = r.skipped;
        row["checks"] = json::array();
        for (const auto& c : r.checks)
            row["checks"].push_back(
                json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
        j["rows"].push_back(row);
    }
    j["summary"] = json{{"rows", rep.rows.size()},
                        {"pass_rows", rep.pass_rows},
                        {"fail_rows", rep.fail_rows},
                        {"flag_checks", rep.flag_checks},
                        {"skip_checks", rep.skip_checks}};
    return j;
}

std::string render_text(const CaseReport& r, const std::vector<SuggestedL>* suggestions)
{
    std::ostringstream out;
    out << "n = " << r.n << "\n";
    out << "form: " << to_string(r.form) << "\n";
    if (r.form == RadicandForm::uncovered) {
        out << "reason: " << r.uncovered_reason << "\n";
    } else {
        out << "p = " << r.p << ", e = " << r.e;
        if (r.q) out << ", q = " << r.q;
        out << "\n";
        out << "field kind: " << to_string(r.kind.kind)
            << " (conductor^4 = " << r.kind.conductor_f4 << ")\n";
        if (r.q_star) out << "q* = " << *r.q_star << "\n";
        out << "5 ramified in the degree-5 field: " << (r.lambda_ramified ? "yes" : "no")
            << "\n";
        out << "generators, conditional on class-group type (5,5):\n";
        out << "  primary: <" << r.generators.primary.first << ", "
            << r.generators.primary.second << ">";
        if (!r.generators.primary.note.empty()) out << "  (" << r.generators.primary.note << ")";
        out << "\n";
        for (const auto& a : r.generators.alternates) {
            out << "  alternate: <" << a.first << ", " << a.second << ">";
            if (!a.note.empty()) out << "  (" << a.note << ")";
            out << "\n";
        }
        out << "  where " << r.generators.legend << "\n";
    }
    if (!r.evidence.empty()) {
        out << "evidence:\n";
        for (const auto& [key, value] : r.evidence)
            out << "  " << key << " = " << value << "\n";
    }
    if (r.l) out << "auxiliary prime l = " << *r.l << "\n";
    for (const auto& h : r.hypotheses) {
        out << "[" << h.status << "] " << h.name << ": exponents "
            << exponents_text(h.exponents) << ", product " << h.product << "\n";
        if (!h.note.empty()) out << "       " << h.note << "\n";
    }
    if (suggestions) {
        out << "candidate auxiliary primes:\n";
        for (const auto& s : *suggestions)
            out << "  l = " << s.l << ": exponents " << exponents_text(s.exponents)
                << ", product " << s.product << "\n";
    }
    return out.str();
}

std::string render_text(const SplittingPattern& p)
{
    std::ostringstream out;
    out << "p = " << p.p << " in " << to_string(p.field);
    if (p.n != 0) out << " (n = " << p.n << ")";
    out << ", degree " << p.degree() << "\n";
    for (const auto& entry : p.entries)
        out << "  " << entry.label << ": e = " << entry.e << ", f = " << entry.f << "\n";
    if (p.degrees_inferred)
        out << "residue degrees inferred from degree bookkeeping, not a stated law\n";
    return out.str();
}

std::string render_text(const RationalSymbolReport& r, const CycInt& alpha)
{
    std::ostringstream out;
    out << "quintic residue symbols of " << alpha << " at primes over " << r.p << ":\n";
    for (const auto& part : r.parts)
        out << "  at (" << part.prime.generator << "), f = " << part.prime.f
            << ": zeta^" << part.j << "\n";
    out << "product of exponents mod 5: " << r.product << "\n";
    return out.str();
}

std::string render_text(const FieldKind& kind, const Int& n)
{
    std::ostringstream out;
    out << "n = " << n << ": " << to_string(kind.kind) << " kind";
    out << " (radical " << kind.radical << ", conductor^4 " << kind.conductor_f4 << ")\n";
    return out.str();
}

std::string render_text(const VerificationReport& rep)
{
    std::ostringstream out;
    for (const auto& r : rep.rows) {
        out << "table " << r.row.table << " row (line " << r.row.line << "): p = " << r.row.p;
        if (r.row.q) out << ", q = " << r.row.q;
        if (r.row.l) out << ", l = " << r.row.l;
        out << ", n = " << r.row.radicand();
        if (r.row.e_assumed) out << " (e = " << r.row.e << " assumed)";
        out << " -> " << (r.failed ? "FAIL" : "PASS") << "\n";
        for (const auto& c : r.checks)
            if (c.status != "PASS")
                out << "  [" << c.status << "] " << c.name
                    << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    out << "summary: " << rep.rows.size() << " rows, " << rep.pass_rows << " pass, "
        << rep.fail_rows << " fail; " << rep.flag_checks << " flagged checks, "
        << rep.skip_checks << " skipped checks\n";
    return out.str();
}

}
