#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

// Drives the installed binary end to end: real process, real exit codes.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "")
{
    std::string cmd = env_prefix + " " + std::string(QSA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name)
{
    return std::string(QSA_SOURCE_DIR) + "/fixtures/" + name;
}

std::string make_tmpdir()
{
    char tmpl[] = "/tmp/qsa-cli-XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    return tmpl;
}

}

TEST_CASE("cli: classify")
{
    RunResult r = run("classify 95 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["form"] == "case 1 (n = 5^e * p)");
    CHECK(j["p"] == 19);
    CHECK(j["kind"]["kind"] == "first");
    CHECK(!j.contains("hypotheses"));

    r = run("classify 95 --l 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[FLAG]") != std::string::npos);
    CHECK(r.out.find("auxiliary prime l = 2") != std::string::npos);

    r = run("classify 95 --l 2 --suggest-l --format json");
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["hypotheses"].size() == 2);
    CHECK(j["suggested_l"].size() == 5);

    // the prime-power shape attaches its one hypothesis unprompted
    r = run("classify 149");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("case 3") != std::string::npos);
    CHECK(r.out.find("[FLAG]") != std::string::npos);

    r = run("classify 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("uncovered") != std::string::npos);
    CHECK(r.out.find("reason:") != std::string::npos);

    CHECK(run("classify 32").exit_code == 1);
    CHECK(run("classify banana").exit_code == 1);
    CHECK(run("classify 95 --l 4").exit_code == 1);
    CHECK(run("classify 149 --suggest-l").exit_code == 1);
    CHECK(run("classify").exit_code == 1);
}

TEST_CASE("cli: split, symbol, kind")
{
    RunResult r = run("split 3 --field k --n 95 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["degree"] == 20);
    CHECK(j["primes"].size() == 5);
    CHECK(j["degrees_inferred"] == true);

    r = run("split 19 --field k0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("f = 2") != std::string::npos);

    r = run("split 5 --field gamma --n 95");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("e = 5") != std::string::npos);

    CHECK(run("split 3 --field gamma").exit_code == 1);
    CHECK(run("split 3 --field nowhere --n 95").exit_code == 1);
    CHECK(run("split 4 --field k0").exit_code == 1);

    r = run("symbol 0,1,0,0 19 --format json");
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["product"] == 4);
    REQUIRE(j["parts"].size() == 2);
    CHECK(j["parts"][0]["j"] == 2);

    CHECK(run("symbol 19 19").exit_code == 1);
    CHECK(run("symbol 2 5").exit_code == 1);

    r = run("kind 57");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("second kind") != std::string::npos);
    r = run("kind 95 --format json");
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "first");

    CHECK(run("kind 1").exit_code == 1);
    CHECK(run("").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("cli: verify end to end")
{
    std::string dir = make_tmpdir();
    std::string cache_env = "QUINTESSA_ORACLE_CACHE=" + dir + "/cache";
    std::string mock = std::string("python3 ") + QSA_SOURCE_DIR + "/tools/mock_oracle.py";
    std::string tables =
        fixture("table1.csv") + " " + fixture("table2.csv") + " " + fixture("table3.csv");

    RunResult r = run("verify " + tables);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("46 rows, 46 pass, 0 fail") != std::string::npos);
    CHECK(r.out.find("[SKIP] oracle class group: no oracle configured") != std::string::npos);

    r = run("verify " + tables + " --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["fail_rows"] == 0);
    CHECK(j["rows"].size() == 46);

    r = run("verify " + std::string(QSA_SOURCE_DIR) + "/tests/fixtures/failing_rows.csv");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("FAIL") != std::string::npos);

    CHECK(run("verify /no/such/file.csv").exit_code == 1);
    CHECK(run("verify " + std::string(QSA_SOURCE_DIR) +
              "/tests/fixtures/bad_rows.csv")
              .exit_code == 1);
    CHECK(run("verify").exit_code == 1);

    r = run("verify " + fixture("table1.csv") + " --oracle \"" + mock + "\" --format json",
            cache_env);
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    int class_pass = 0, class_skip = 0;
    for (const auto& row : j["rows"])
        for (const auto& c : row["checks"])
            if (c["name"] == "oracle class group") {
                if (c["status"] == "PASS") ++class_pass;
                if (c["status"] == "SKIP") ++class_skip;
            }
    CHECK(class_pass == 2);  // the two n = 95 rows have canned data
    CHECK(class_skip == 13);

    r = run("verify " + fixture("table1.csv") + " --oracle \"" + mock + "\"",
            "QUINTESSA_ORACLE_CACHE=" + dir + "/cache2 MOCK_ORACLE_MODE=garbage");
    CHECK(r.exit_code == 3);
}
