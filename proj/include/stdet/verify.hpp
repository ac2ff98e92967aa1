#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stdet/census.hpp"
#include "stdet/formulas.hpp"

namespace stdet {

inline constexpr const char* kToolVersion = "stdet 1.0.0";

// One formula-vs-oracle comparison.  `ref` names the claim under test in
// the claims catalog and `quote` carries its statement; both travel into
// the report so a finding is self-describing.  `expected` makes known
// slips first-class: a suite run succeeds only when every observed
// classification matches the expected one, so a vanished discrepancy is
// as loud as a new one.
struct CheckSpec {
    std::string id;
    std::string formula; // dispatch key
    std::string ring;    // canonical descriptor
    uint32_t n = 1;
    uint32_t s = 0;            // layer index, when meaningful
    std::string cls;           // qr | nqr | unit, when meaningful
    Variant variant = Variant::errata;
    std::string oracle; // dp | naive | recurrence
    std::string ref;
    std::string quote;
    std::string expected; // PASS | DISCREPANT
};

struct CheckResult {
    CheckSpec spec;
    std::string formula_value;
    std::string oracle_value;
    std::string classification; // PASS | DISCREPANT | ERROR
    bool as_expected = false;
};

struct VerificationReport {
    std::string timestamp;
    double runtime_seconds = 0.0;
    Variant variant = Variant::errata;
    std::vector<CheckResult> checks;
    uint64_t pass = 0;
    uint64_t discrepant = 0;
    uint64_t error = 0;
    uint64_t unexpected = 0;

    bool suite_ok() const { return unexpected == 0 && error == 0; }
    // Deterministic bytes: everything except the header.
    std::string body_text() const;
    std::string full_text() const;
};

// The default verification grid: fields q in {2,3,4,5,7,8,9} with n <= 7,
// chain rings Z(4), Z(8), Z(9), Z(27), Z(25), FU(2,2), FU(3,2), FU(4,2),
// GR(2^2,2) with n <= 5.  Under the paper variant the even-q ring
// uniformity claims are included (and expected to fail for e >= 2, even
// n); under errata they are not asserted at all.
std::vector<CheckSpec> default_plan(Variant variant);

// Restricts the default plan to the ids listed in a plan file (one id per
// line, '#' comments).  Unknown ids are an error.
std::vector<CheckSpec> plan_from_file(const std::string& path, Variant variant);

VerificationReport run_suite(std::vector<CheckSpec> plan, CensusProvider& provider);

// Builds the quotient-chain zero-count profile for the layer formulas:
// entries 1..e-1 from dp censuses of R/gamma^t R, entry e from the base
// ring census.
ZeroCountProfile zero_count_profile(CensusProvider& provider, const Ring& ring, uint32_t n);

struct Table1Result {
    bool all_match = false;
    int matched = 0;
    int total = 0;
    std::string rendered; // computed table, fixture CSV layout
    std::vector<std::string> diffs;
};

// Recomputes the F(5), n = 1..10 census table and compares it with the
// golden fixture.
Table1Result reproduce_table1(CensusProvider& provider);

// The golden fixture, CSV with header n,a0,a1,a2,a3,a4,ist.
std::string table1_fixture_csv();

struct Finding {
    std::string ref;
    std::string quote;
    std::string errata; // corrected expression, empty when none exists
    std::string witness; // smallest discrepant cell
    std::vector<std::string> observations;
};

// Groups the DISCREPANT checks of a report by claim, with the smallest
// witness first.
std::vector<Finding> discrepancy_ledger(const VerificationReport& report);

std::string findings_text(const std::vector<Finding>& findings);

// Non-assertive comparison of same-(q,e) chain rings that are not
// isomorphic (Z_{p^e} vs F_p[u]/(u^e)): reports which census aggregates
// agree and whether the full count multisets coincide.
std::string exploratory_notes(CensusProvider& provider);

} // namespace stdet
