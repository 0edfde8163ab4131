#include <doctest.h>

#include <string>

#include <json.hpp>

#include "quintessa.h"

// Exercises the shared-library surface the way an external consumer
// would: through handles, status codes, and rendered reports only.

namespace {

std::string take(char* s)
{
    REQUIRE(s != nullptr);
    std::string out = s;
    qsa_string_free(s);
    return out;
}

struct Cyc {
    qsa_cycint* h = nullptr;
    explicit Cyc(const char* text) { REQUIRE(qsa_cycint_parse(text, &h) == QSA_OK); }
    explicit Cyc(qsa_cycint* raw) : h(raw) {}
    ~Cyc() { qsa_cycint_free(h); }
    Cyc(const Cyc&) = delete;
};

nlohmann::json report_json(qsa_report* report)
{
    char* raw = nullptr;
    REQUIRE(qsa_report_json(report, &raw) == QSA_OK);
    return nlohmann::json::parse(take(raw));
}

std::string report_text(qsa_report* report)
{
    char* raw = nullptr;
    REQUIRE(qsa_report_text(report, &raw) == QSA_OK);
    return take(raw);
}

}

TEST_CASE("c api: cyclotomic arithmetic round trips")
{
    CHECK(std::string(qsa_version()) == "0.1.0");

    Cyc zeta("0,1,0,0");
    Cyc lambda("1,-1,0,0");
    qsa_cycint* sum = nullptr;
    REQUIRE(qsa_cycint_add(zeta.h, lambda.h, &sum) == QSA_OK);
    char* s = nullptr;
    REQUIRE(qsa_cycint_str(sum, &s) == QSA_OK);
    CHECK(take(s) == "1,0,0,0");
    qsa_cycint_free(sum);

    // zeta^4 = -(1 + zeta + zeta^2 + zeta^3) on this basis
    qsa_cycint* z4 = nullptr;
    REQUIRE(qsa_cycint_galois(zeta.h, 4, &z4) == QSA_OK);
    REQUIRE(qsa_cycint_str(z4, &s) == QSA_OK);
    CHECK(take(s) == "-1,-1,-1,-1");
    qsa_cycint_free(z4);

    REQUIRE(qsa_cycint_norm(lambda.h, &s) == QSA_OK);
    CHECK(take(s) == "5");

    qsa_cycint* made = nullptr;
    REQUIRE(qsa_cycint_from_coords(3, 0, 4, 4, &made) == QSA_OK);
    REQUIRE(qsa_cycint_norm(made, &s) == QSA_OK);
    CHECK(take(s) == "361");
    qsa_cycint_free(made);

    // gcd with the quadratic zeta^2 - 14 zeta + 1 cuts out one prime over 19
    Cyc nineteen("19");
    Cyc quadratic("1,-14,1,0");
    qsa_cycint* g = nullptr;
    REQUIRE(qsa_cycint_gcd(nineteen.h, quadratic.h, &g) == QSA_OK);
    REQUIRE(qsa_cycint_norm(g, &s) == QSA_OK);
    CHECK(take(s) == "361");
    qsa_cycint_free(g);

    qsa_cycint* bad = nullptr;
    CHECK(qsa_cycint_parse("not numbers", &bad) == QSA_EPARSE);
    CHECK(std::string(qsa_last_error()).find("not numbers") != std::string::npos);
    CHECK(qsa_cycint_galois(zeta.h, 5, &bad) == QSA_EINVAL);
    CHECK(qsa_cycint_parse(nullptr, &bad) == QSA_EINVAL);
}

TEST_CASE("c api: primes, symbols, and kummer splitting")
{
    qsa_prime_list* list = nullptr;
    REQUIRE(qsa_primes_over(19, &list) == QSA_OK);
    REQUIRE(qsa_prime_list_len(list) == 2);
    qsa_prime* pi1 = nullptr;
    REQUIRE(qsa_prime_list_get(list, 0, &pi1) == QSA_OK);
    CHECK(qsa_prime_f(pi1) == 2);
    CHECK(qsa_prime_below(pi1) == 19);
    qsa_prime_list_free(list);

    Cyc zeta("0,1,0,0");
    int j = -1;
    REQUIRE(qsa_symbol(zeta.h, pi1, &j) == QSA_OK);
    CHECK(j == 2);
    Cyc two("2");
    REQUIRE(qsa_symbol(two.h, pi1, &j) == QSA_OK);
    CHECK(j == 0);
    Cyc nineteen("19");
    CHECK(qsa_symbol(nineteen.h, pi1, &j) == QSA_ENOTCOPRIME);

    int v = -1;
    REQUIRE(qsa_prime_valuation(pi1, nineteen.h, &v) == QSA_OK);
    CHECK(v == 1);

    // generator round trip through prime_from_generator
    qsa_cycint* gen = nullptr;
    REQUIRE(qsa_prime_generator(pi1, &gen) == QSA_OK);
    qsa_prime* again = nullptr;
    REQUIRE(qsa_prime_from_generator(gen, &again) == QSA_OK);
    CHECK(qsa_prime_below(again) == 19);
    qsa_prime_free(again);
    qsa_cycint_free(gen);

    // norm residue of beta = pi1 against alpha = 2 at pi1 itself
    qsa_cycint* pi1_gen = nullptr;
    REQUIRE(qsa_prime_generator(pi1, &pi1_gen) == QSA_OK);
    REQUIRE(qsa_norm_residue(pi1_gen, two.h, pi1, &j) == QSA_OK);
    CHECK(j == 0);
    qsa_cycint_free(pi1_gen);

    int j1, j2, j12, j21, doubling, cross;
    REQUIRE(qsa_conjugate_symbol_identities(19, "2", &j1, &j2, &j12, &j21, &doubling,
                                            &cross) == QSA_OK);
    CHECK(j1 == 0);
    CHECK(j2 == 0);
    CHECK(j12 == 0);
    CHECK(j21 == 0);
    CHECK(doubling == 1);
    CHECK(cross == 1);

    qsa_split_type st;
    Cyc ninetyfive("95");
    REQUIRE(qsa_kummer_split_type(ninetyfive.h, pi1, &st) == QSA_OK);
    CHECK(st == QSA_RAMIFIED);
    qsa_prime_free(pi1);

    qsa_prime_list* over11 = nullptr;
    REQUIRE(qsa_primes_over(11, &over11) == QSA_OK);
    REQUIRE(qsa_prime_list_len(over11) == 4);
    qsa_prime* p11 = nullptr;
    REQUIRE(qsa_prime_list_get(over11, 0, &p11) == QSA_OK);
    Cyc thirtytwo("32");
    REQUIRE(qsa_kummer_split_type(thirtytwo.h, p11, &st) == QSA_OK);
    CHECK(st == QSA_SPLIT);
    qsa_prime_free(p11);
    qsa_prime_list_free(over11);
}

TEST_CASE("c api: reports render as json and text from the same data")
{
    qsa_report* rep = nullptr;
    REQUIRE(qsa_classify("95", &rep) == QSA_OK);
    auto j = report_json(rep);
    CHECK(j["n"] == "95");
    CHECK(j["covered"] == true);
    CHECK(j["form"] == "case 1 (n = 5^e * p)");
    CHECK(j["p"] == 19);
    CHECK(j["kind"]["kind"] == "first");
    CHECK(j["generators"]["primary"]["first"] == "[P1]");
    CHECK(!j.contains("hypotheses"));

    REQUIRE(qsa_classify_hypothesis_check(rep, 2) == QSA_OK);
    REQUIRE(qsa_classify_suggest_l(rep, 3) == QSA_OK);
    j = report_json(rep);
    REQUIRE(j["hypotheses"].size() == 2);
    CHECK(j["hypotheses"][0]["status"] == "FLAG");
    CHECK(j["suggested_l"].size() == 3);
    CHECK(j["suggested_l"][0]["l"] == 2);
    std::string text = report_text(rep);
    CHECK(text.find("case 1") != std::string::npos);
    CHECK(text.find("[FLAG]") != std::string::npos);
    qsa_report_free(rep);

    REQUIRE(qsa_classify("7", &rep) == QSA_OK);
    j = report_json(rep);
    CHECK(j["covered"] == false);
    CHECK(j["reason"].get<std::string>().size() > 0);
    CHECK(qsa_classify_hypothesis_check(rep, 2) == QSA_EINVAL);
    qsa_report_free(rep);

    REQUIRE(qsa_split("k", 3, "95", &rep) == QSA_OK);
    j = report_json(rep);
    CHECK(j["degree"] == 20);
    CHECK(j["primes"].size() == 5);
    CHECK(j["primes"][0]["e"] == 1);
    CHECK(j["primes"][0]["f"] == 4);
    CHECK(j["degrees_inferred"] == true);
    qsa_report_free(rep);
    CHECK(qsa_split("nowhere", 3, "95", &rep) == QSA_EINVAL);
    CHECK(qsa_split("gamma", 3, nullptr, &rep) == QSA_EINVAL);

    REQUIRE(qsa_symbol_report("0,1,0,0", 19, &rep) == QSA_OK);
    j = report_json(rep);
    REQUIRE(j["parts"].size() == 2);
    CHECK(j["parts"][0]["j"] == 2);
    CHECK(j["parts"][1]["j"] == 2);
    CHECK(j["product"] == 4);
    qsa_report_free(rep);

    REQUIRE(qsa_field_kind("57", &rep) == QSA_OK);
    j = report_json(rep);
    CHECK(j["kind"] == "second");
    CHECK(j["conductor_f4"] == "10556001");
    CHECK(report_text(rep).find("second kind") != std::string::npos);
    qsa_report_free(rep);

    char* norm = nullptr;
    REQUIRE(qsa_normalize_radicand("608", &norm) == QSA_OK);
    CHECK(take(norm) == "19");
    CHECK(qsa_normalize_radicand("32", &norm) == QSA_EDEGENERATE);
    CHECK(qsa_normalize_radicand("banana", &norm) == QSA_EPARSE);

    int v5u, v5hg, v5hk, t55, consistent;
    REQUIRE(qsa_predicted_structure("125", "5", &v5u, &v5hg, &v5hk, &t55, &consistent) ==
            QSA_OK);
    CHECK(v5u == 3);
    CHECK(v5hg == 1);
    CHECK(v5hk == 2);
    CHECK(t55 == 1);
    CHECK(consistent == 1);
    CHECK(qsa_predicted_structure("0", "5", &v5u, &v5hg, &v5hk, &t55, &consistent) ==
          QSA_EINVAL);
}

TEST_CASE("c api: fixture verification")
{
    const std::string base = QSA_SOURCE_DIR "/fixtures/";
    const std::string t1 = base + "table1.csv";
    const std::string t2 = base + "table2.csv";
    const std::string t3 = base + "table3.csv";
    const char* paths[] = {t1.c_str(), t2.c_str(), t3.c_str()};

    qsa_report* rep = nullptr;
    int fails = -1;
    REQUIRE(qsa_verify_tables(paths, 3, nullptr, &rep, &fails) == QSA_OK);
    CHECK(fails == 0);
    auto j = report_json(rep);
    CHECK(j["rows"].size() == 46);
    CHECK(j["summary"]["pass_rows"] == 46);
    CHECK(j["summary"]["fail_rows"] == 0);
    CHECK(j["summary"]["skip_checks"] == 92);
    std::string text = report_text(rep);
    CHECK(text.find("46 rows, 46 pass, 0 fail") != std::string::npos);
    CHECK(text.find("[SKIP] oracle class group: no oracle configured") != std::string::npos);
    qsa_report_free(rep);

    const std::string failing = QSA_SOURCE_DIR "/tests/fixtures/failing_rows.csv";
    const char* bad_paths[] = {failing.c_str()};
    REQUIRE(qsa_verify_tables(bad_paths, 1, nullptr, &rep, &fails) == QSA_OK);
    CHECK(fails == 8);
    qsa_report_free(rep);

    const char* missing[] = {"/no/such/file.csv"};
    CHECK(qsa_verify_tables(missing, 1, nullptr, &rep, &fails) == QSA_EIO);
}
