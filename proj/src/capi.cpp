#include "quintessa.h"

#include <cstring>
#include <memory>
#include <variant>

#include "report.hpp"

using namespace quintessa;

struct qsa_cycint {
    CycInt v;
};

struct qsa_prime {
    PrimeK0 v;
};

struct qsa_prime_list {
    std::vector<PrimeK0> v;
};

namespace {

struct ClassifyPayload {
    CaseReport report;
    std::optional<std::vector<SuggestedL>> suggestions;
};

struct SymbolPayload {
    RationalSymbolReport report;
    CycInt alpha;
};

struct KindPayload {
    FieldKind kind;
    Int n;
};

}

struct qsa_report {
    std::variant<ClassifyPayload, SplittingPattern, SymbolPayload, KindPayload,
                 VerificationReport>
        v;
};

namespace {

thread_local std::string g_last_error;

qsa_status set_error(const error& e)
{
    g_last_error = e.what();
    switch (e.code()) {
    case errc::invalid_argument: return QSA_EINVAL;
    case errc::division_by_zero: return QSA_EDIVZERO;
    case errc::degenerate: return QSA_EDEGENERATE;
    case errc::not_coprime: return QSA_ENOTCOPRIME;
    case errc::unsupported: return QSA_EUNSUPPORTED;
    case errc::parse_error: return QSA_EPARSE;
    case errc::io_error: return QSA_EIO;
    case errc::oracle_protocol: return QSA_EORACLE_PROTOCOL;
    case errc::internal: return QSA_EINTERNAL;
    }
    return QSA_EINTERNAL;
}

template <typename F>
qsa_status guarded(F&& f)
{
    try {
        f();
        return QSA_OK;
    } catch (const error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QSA_EINTERNAL;
    }
}

qsa_status require(bool cond, const char* what)
{
    if (cond) return QSA_OK;
    g_last_error = what;
    return QSA_EINVAL;
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Int parse_int(const char* text)
{
    if (!text || !*text) fail(errc::parse_error, "empty integer");
    try {
        return Int(text);
    } catch (const std::exception&) {
        fail(errc::parse_error, std::string("not an integer: \"") + text + "\"");
    }
}

}

extern "C" {

const char* qsa_last_error(void)
{
    return g_last_error.c_str();
}

const char* qsa_version(void)
{
    return "0.1.0";
}

void qsa_string_free(char* s)
{
    std::free(s);
}

qsa_status qsa_cycint_parse(const char* text, qsa_cycint** out)
{
    if (auto rc = require(text && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{CycInt::parse(text)}; });
}

qsa_status qsa_cycint_from_coords(long long c0, long long c1, long long c2, long long c3,
                                  qsa_cycint** out)
{
    if (auto rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{CycInt(Int(c0), Int(c1), Int(c2), Int(c3))}; });
}

void qsa_cycint_free(qsa_cycint* x)
{
    delete x;
}

qsa_status qsa_cycint_str(const qsa_cycint* x, char** out)
{
    if (auto rc = require(x && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(x->v.str()); });
}

qsa_status qsa_cycint_add(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out)
{
    if (auto rc = require(a && b && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{a->v + b->v}; });
}

qsa_status qsa_cycint_sub(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out)
{
    if (auto rc = require(a && b && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{a->v - b->v}; });
}

qsa_status qsa_cycint_mul(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out)
{
    if (auto rc = require(a && b && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{a->v * b->v}; });
}

qsa_status qsa_cycint_galois(const qsa_cycint* x, int i, qsa_cycint** out)
{
    if (auto rc = require(x && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{x->v.galois(i)}; });
}

qsa_status qsa_cycint_norm(const qsa_cycint* x, char** out)
{
    if (auto rc = require(x && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(x->v.norm().str()); });
}

qsa_status qsa_cycint_gcd(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out)
{
    if (auto rc = require(a && b && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{gcd(a->v, b->v)}; });
}

qsa_status qsa_primes_over(unsigned long long p, qsa_prime_list** out)
{
    if (auto rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = new qsa_prime_list{primes_over(p)}; });
}

void qsa_prime_list_free(qsa_prime_list* list)
{
    delete list;
}

size_t qsa_prime_list_len(const qsa_prime_list* list)
{
    return list ? list->v.size() : 0;
}

qsa_status qsa_prime_list_get(const qsa_prime_list* list, size_t i, qsa_prime** out)
{
    if (auto rc = require(list && out, "null argument")) return rc;
    if (auto rc = require(i < list->v.size(), "prime index out of range")) return rc;
    return guarded([&] { *out = new qsa_prime{list->v[i]}; });
}

qsa_status qsa_prime_from_generator(const qsa_cycint* gen, qsa_prime** out)
{
    if (auto rc = require(gen && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_prime{prime_from_generator(gen->v)}; });
}

void qsa_prime_free(qsa_prime* prime)
{
    delete prime;
}

qsa_status qsa_prime_generator(const qsa_prime* prime, qsa_cycint** out)
{
    if (auto rc = require(prime && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_cycint{prime->v.generator}; });
}

int qsa_prime_f(const qsa_prime* prime)
{
    return prime ? prime->v.f : 0;
}

unsigned long long qsa_prime_below(const qsa_prime* prime)
{
    return prime ? prime->v.parent_p : 0;
}

qsa_status qsa_prime_valuation(const qsa_prime* prime, const qsa_cycint* x, int* out)
{
    if (auto rc = require(prime && x && out, "null argument")) return rc;
    return guarded([&] { *out = v_prime(prime->v, x->v); });
}

qsa_status qsa_symbol(const qsa_cycint* alpha, const qsa_prime* prime, int* out_j)
{
    if (auto rc = require(alpha && prime && out_j, "null argument")) return rc;
    return guarded([&] { *out_j = power_residue_symbol(alpha->v, prime->v); });
}

qsa_status qsa_norm_residue(const qsa_cycint* beta, const qsa_cycint* alpha,
                            const qsa_prime* prime, int* out_j)
{
    if (auto rc = require(beta && alpha && prime && out_j, "null argument")) return rc;
    return guarded([&] { *out_j = norm_residue_unramified(beta->v, alpha->v, prime->v); });
}

qsa_status qsa_conjugate_symbol_identities(unsigned long long p, const char* c, int* out_j1,
                                           int* out_j2, int* out_j12, int* out_j21,
                                           int* out_doubling_holds, int* out_cross_trivial)
{
    if (auto rc = require(c && out_j1 && out_j2 && out_j12 && out_j21 && out_doubling_holds &&
                              out_cross_trivial,
                          "null argument"))
        return rc;
    return guarded([&] {
        ConjugatePairReport rep = conjugate_symbol_identities(p, parse_int(c));
        *out_j1 = rep.j1;
        *out_j2 = rep.j2;
        *out_j12 = rep.j12;
        *out_j21 = rep.j21;
        *out_doubling_holds = rep.doubling_holds ? 1 : 0;
        *out_cross_trivial = rep.cross_trivial ? 1 : 0;
    });
}

qsa_status qsa_kummer_split_type(const qsa_cycint* theta, const qsa_prime* prime,
                                 qsa_split_type* out)
{
    if (auto rc = require(theta && prime && out, "null argument")) return rc;
    return guarded([&] {
        switch (kummer_split_type(theta->v, prime->v)) {
        case SplitType::split: *out = QSA_SPLIT; break;
        case SplitType::inert: *out = QSA_INERT; break;
        case SplitType::ramified: *out = QSA_RAMIFIED; break;
        }
    });
}

void qsa_report_free(qsa_report* report)
{
    delete report;
}

qsa_status qsa_report_json(const qsa_report* report, char** out)
{
    if (auto rc = require(report && out, "null argument")) return rc;
    return guarded([&] {
        nlohmann::json j = std::visit(
            [](const auto& payload) -> nlohmann::json {
                using T = std::decay_t<decltype(payload)>;
                if constexpr (std::is_same_v<T, ClassifyPayload>)
                    return to_json(payload.report,
                                   payload.suggestions ? &*payload.suggestions : nullptr);
                else if constexpr (std::is_same_v<T, SymbolPayload>)
                    return to_json(payload.report, payload.alpha);
                else if constexpr (std::is_same_v<T, KindPayload>)
                    return to_json(payload.kind, payload.n);
                else
                    return to_json(payload);
            },
            report->v);
        *out = dup_string(j.dump(2));
    });
}

qsa_status qsa_report_text(const qsa_report* report, char** out)
{
    if (auto rc = require(report && out, "null argument")) return rc;
    return guarded([&] {
        std::string text = std::visit(
            [](const auto& payload) -> std::string {
                using T = std::decay_t<decltype(payload)>;
                if constexpr (std::is_same_v<T, ClassifyPayload>)
                    return render_text(payload.report,
                                       payload.suggestions ? &*payload.suggestions : nullptr);
                else if constexpr (std::is_same_v<T, SymbolPayload>)
                    return render_text(payload.report, payload.alpha);
                else if constexpr (std::is_same_v<T, KindPayload>)
                    return render_text(payload.kind, payload.n);
                else
                    return render_text(payload);
            },
            report->v);
        *out = dup_string(text);
    });
}

qsa_status qsa_normalize_radicand(const char* n, char** out)
{
    if (auto rc = require(n && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(normalize_radicand(parse_int(n)).str()); });
}

qsa_status qsa_field_kind(const char* n, qsa_report** out)
{
    if (auto rc = require(n && out, "null argument")) return rc;
    return guarded([&] {
        Int value = normalize_radicand(parse_int(n));
        *out = new qsa_report{KindPayload{field_kind(value), value}};
    });
}

qsa_status qsa_split(const char* field, unsigned long long p, const char* n, qsa_report** out)
{
    if (auto rc = require(field && out, "null argument")) return rc;
    return guarded([&] {
        std::string tag = field;
        Int radicand = 0;
        if (tag == "gamma" || tag == "k") {
            if (!n || !*n) fail(errc::invalid_argument, "field \"" + tag + "\" needs a radicand");
            radicand = normalize_radicand(parse_int(n));
        }
        SplittingPattern pattern;
        if (tag == "gamma")
            pattern = split_in_gamma(p, radicand);
        else if (tag == "k0")
            pattern = split_in_k0(p);
        else if (tag == "k")
            pattern = split_in_k(p, radicand);
        else
            fail(errc::invalid_argument, "field must be gamma, k0, or k");
        *out = new qsa_report{std::move(pattern)};
    });
}

qsa_status qsa_symbol_report(const char* alpha, unsigned long long p, qsa_report** out)
{
    if (auto rc = require(alpha && out, "null argument")) return rc;
    return guarded([&] {
        CycInt a = CycInt::parse(alpha);
        *out = new qsa_report{SymbolPayload{symbol_at_rational_prime(a, p), a}};
    });
}

qsa_status qsa_classify(const char* n, qsa_report** out)
{
    if (auto rc = require(n && out, "null argument")) return rc;
    return guarded([&] { *out = new qsa_report{ClassifyPayload{classify(parse_int(n)), {}}}; });
}

qsa_status qsa_classify_hypothesis_check(qsa_report* report, unsigned long long l)
{
    if (auto rc = require(report != nullptr, "null argument")) return rc;
    return guarded([&] {
        auto* payload = std::get_if<ClassifyPayload>(&report->v);
        if (!payload) fail(errc::invalid_argument, "not a classification report");
        if (l == 0)
            hypothesis_check(payload->report);
        else
            hypothesis_check(payload->report, l);
    });
}

qsa_status qsa_classify_suggest_l(qsa_report* report, int count)
{
    if (auto rc = require(report != nullptr, "null argument")) return rc;
    return guarded([&] {
        auto* payload = std::get_if<ClassifyPayload>(&report->v);
        if (!payload) fail(errc::invalid_argument, "not a classification report");
        payload->suggestions = suggest_l(payload->report, count);
    });
}

qsa_status qsa_predicted_structure(const char* u, const char* h_gamma, int* out_v5_u,
                                   int* out_v5_h_gamma, int* out_v5_h_k, int* out_type_55,
                                   int* out_consistent)
{
    if (auto rc = require(u && h_gamma && out_v5_u && out_v5_h_gamma && out_v5_h_k &&
                              out_type_55 && out_consistent,
                          "null argument"))
        return rc;
    return guarded([&] {
        StructurePrediction s =
            predicted_structure({parse_int(u), parse_int(h_gamma), "caller"});
        *out_v5_u = s.v5_u;
        *out_v5_h_gamma = s.v5_h_gamma;
        *out_v5_h_k = s.v5_h_k;
        *out_type_55 = s.type_55 ? 1 : 0;
        *out_consistent = s.consistent ? 1 : 0;
    });
}

qsa_status qsa_verify_tables(const char* const* paths, size_t n_paths, const char* oracle_cmd,
                             qsa_report** out, int* out_fail_rows)
{
    if (auto rc = require(paths && out && out_fail_rows && n_paths > 0, "null argument"))
        return rc;
    return guarded([&] {
        std::vector<TableRow> rows;
        for (size_t i = 0; i < n_paths; ++i) {
            if (!paths[i]) fail(errc::invalid_argument, "null fixture path");
            for (auto& row : load_table(paths[i])) rows.push_back(std::move(row));
        }
        std::unique_ptr<OracleClient> oracle;
        if (oracle_cmd && *oracle_cmd) oracle = std::make_unique<OracleClient>(oracle_cmd);
        VerificationReport rep = verify_tables(rows, oracle.get());
        *out_fail_rows = rep.fail_rows;
        *out = new qsa_report{std::move(rep)};
    });
}

}
