#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qslab {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct FirstFailure {
    long long index = 0;
    std::string expected;
    std::string actual;
};

/* Outcome of one identity/congruence check. A Fail always carries the
 * smallest failing index together with both values. */
struct VerificationReport {
    std::string check_id;
    Verdict verdict = Verdict::Pass;
    long order_checked = 0;
    long long range_lo = 0;
    long long range_hi = 0;
    std::optional<FirstFailure> first_failure;
    long long runtime_ms = 0;
    std::string note;  // free-form detail (failing sub-identity, parameters, ...)
};

std::string report_json(const VerificationReport& r);
std::string reports_json(const std::vector<VerificationReport>& rs);
std::string report_line(const VerificationReport& r);
std::string report_csv_header();
std::string report_csv(const VerificationReport& r);

bool all_pass(const std::vector<VerificationReport>& rs);

}  // namespace qslab
