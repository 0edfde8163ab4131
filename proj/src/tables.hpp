#pragma once

#include <string>
#include <vector>

#include "classify.hpp"
#include "oracle.hpp"

namespace quintessa {

// One fixture row. Tables come in three shapes: table 1 rows carry (p, l),
// table 2 rows (p, q, l), table 3 rows just p; q and l are 0 when absent.
// The principality vectors are opaque coordinates from an external
// class-group computation; only zero/nonzero and the pairing of each ideal
// column with its fifth-power column are interpreted here.
struct TableRow {
    int table = 0;
    uint64_t p = 0;
    uint64_t q = 0;
    uint64_t l = 0;
    unsigned e = 1;
    bool e_assumed = true;
    std::string claimed_type;
    std::vector<std::string> col_names;
    std::vector<std::vector<long long>> ideal_vecs;
    std::vector<std::vector<long long>> pow5_vecs;
    int line = 0;

    // the radicand the row describes: 5^e*p, p^e*q, or p^e
    Int radicand() const;
};

// Parse one fixture CSV. Header must match the fixture schema exactly;
// malformed rows are collected and reported together with their line
// numbers. A file with no data rows yields an empty list.
std::vector<TableRow> load_table(const std::string& path);

struct CheckResult {
    std::string name;
    std::string status;  // PASS, FAIL, FLAG, or SKIP
    std::string detail;
};

struct RowReport {
    TableRow row;
    std::vector<CheckResult> checks;
    bool failed = false;
    bool flagged = false;
    bool skipped = false;
};

struct VerificationReport {
    std::vector<RowReport> rows;
    int pass_rows = 0;
    int fail_rows = 0;
    int flag_checks = 0;
    int skip_checks = 0;
};

// Replays one row: congruence checks for its table shape, classification
// of the reconstructed radicand, the Euler-criterion hypothesis checks
// (FLAG by design, see classify.hpp), order-5 vector logic, and, when an
// oracle is supplied, class-group facts. Oracle troubles become SKIP
// entries; only structural violations FAIL.
RowReport verify_row(const TableRow& row, OracleClient* oracle = nullptr);

VerificationReport verify_tables(const std::vector<TableRow>& rows,
                                 OracleClient* oracle = nullptr);

}
