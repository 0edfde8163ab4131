#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <quintessa.h>

// Thin driver over the shared library: parse arguments, call the C API,
// print one report. Exit codes: 0 success, 1 invalid input, 2 verification
// found failing rows, 3 the oracle spoke off protocol.

namespace {

int fail_with(qsa_status rc)
{
    std::cerr << "error: " << qsa_last_error() << "\n";
    return rc == QSA_EORACLE_PROTOCOL ? 3 : 1;
}

int print_report(qsa_report* report, const std::string& format)
{
    char* rendered = nullptr;
    qsa_status rc = format == "json" ? qsa_report_json(report, &rendered)
                                     : qsa_report_text(report, &rendered);
    if (rc != QSA_OK) return fail_with(rc);
    std::cout << rendered;
    if (format == "json") std::cout << "\n";
    qsa_string_free(rendered);
    return 0;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"exact arithmetic for pure quintic fields Q(n^(1/5)), Q(zeta5), "
                 "and their compositum"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string n_str;
    uint64_t l_prime = 0;
    bool suggest = false;
    auto* cmd_classify =
        app.add_subcommand("classify", "sort a radicand into the covered shapes");
    cmd_classify->fallthrough();
    cmd_classify->add_option("n", n_str, "radicand")->required();
    cmd_classify->add_option("--l", l_prime, "auxiliary prime for the hypothesis checks");
    cmd_classify->add_flag("--suggest-l", suggest, "list candidate auxiliary primes");

    uint64_t p = 0;
    std::string field;
    std::string split_n;
    auto* cmd_split = app.add_subcommand("split", "splitting pattern of a rational prime");
    cmd_split->fallthrough();
    cmd_split->add_option("p", p, "rational prime")->required();
    cmd_split->add_option("--field", field, "gamma (degree-5 field), k0 (Q(zeta5)), or k")
        ->required()
        ->check(CLI::IsMember({"gamma", "k0", "k"}));
    cmd_split->add_option("--n", split_n, "radicand (gamma and k need one)");

    std::string alpha;
    uint64_t symbol_p = 0;
    auto* cmd_symbol =
        app.add_subcommand("symbol", "quintic residue symbols at the primes over p");
    cmd_symbol->fallthrough();
    cmd_symbol->add_option("alpha", alpha, "cyclotomic integer \"c0,c1,c2,c3\"")->required();
    cmd_symbol->add_option("p", symbol_p, "rational prime, not 5")->required();

    std::string kind_n;
    auto* cmd_kind = app.add_subcommand("kind", "first or second kind of Q(n^(1/5))");
    cmd_kind->fallthrough();
    cmd_kind->add_option("n", kind_n, "radicand")->required();

    std::vector<std::string> fixtures;
    std::string oracle_cmd;
    auto* cmd_verify = app.add_subcommand("verify", "replay fixture tables");
    cmd_verify->fallthrough();
    cmd_verify->add_option("fixtures", fixtures, "fixture CSV paths")->required();
    cmd_verify->add_option("--oracle", oracle_cmd,
                           "command for the class-group oracle subprocess");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    qsa_report* report = nullptr;
    if (cmd_classify->parsed()) {
        qsa_status rc = qsa_classify(n_str.c_str(), &report);
        if (rc != QSA_OK) return fail_with(rc);
        if (l_prime != 0) {
            rc = qsa_classify_hypothesis_check(report, l_prime);
        } else {
            // the prime-power shape needs no auxiliary prime; attach its
            // hypothesis when it applies and stay quiet when it does not
            qsa_status attempt = qsa_classify_hypothesis_check(report, 0);
            rc = attempt == QSA_EINVAL ? QSA_OK : attempt;
        }
        if (rc == QSA_OK && suggest) rc = qsa_classify_suggest_l(report, 5);
        if (rc != QSA_OK) {
            qsa_report_free(report);
            return fail_with(rc);
        }
    } else if (cmd_split->parsed()) {
        qsa_status rc =
            qsa_split(field.c_str(), p, split_n.empty() ? nullptr : split_n.c_str(), &report);
        if (rc != QSA_OK) return fail_with(rc);
    } else if (cmd_symbol->parsed()) {
        qsa_status rc = qsa_symbol_report(alpha.c_str(), symbol_p, &report);
        if (rc != QSA_OK) return fail_with(rc);
    } else if (cmd_kind->parsed()) {
        qsa_status rc = qsa_field_kind(kind_n.c_str(), &report);
        if (rc != QSA_OK) return fail_with(rc);
    } else {
        std::vector<const char*> paths;
        paths.reserve(fixtures.size());
        for (const auto& f : fixtures) paths.push_back(f.c_str());
        int fail_rows = 0;
        qsa_status rc = qsa_verify_tables(paths.data(), paths.size(),
                                          oracle_cmd.empty() ? nullptr : oracle_cmd.c_str(),
                                          &report, &fail_rows);
        if (rc != QSA_OK) return fail_with(rc);
        int print_rc = print_report(report, format);
        qsa_report_free(report);
        if (print_rc != 0) return print_rc;
        return fail_rows > 0 ? 2 : 0;
    }

    int rc = print_report(report, format);
    qsa_report_free(report);
    return rc;
}
