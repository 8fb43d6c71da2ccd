#include "qslab/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace qslab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

/* Runtimes are deliberately left out of the json form so that identical
 * invocations stay byte-identical; the text format carries them. */
static nlohmann::ordered_json to_ojson(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["verdict"] = to_string(r.verdict);
    j["order_checked"] = r.order_checked;
    j["range"] = {r.range_lo, r.range_hi};
    if (r.first_failure) {
        nlohmann::ordered_json f;
        f["index"] = r.first_failure->index;
        f["expected"] = r.first_failure->expected;
        f["actual"] = r.first_failure->actual;
        j["first_failure"] = f;
    } else {
        j["first_failure"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string report_json(const VerificationReport& r) { return to_ojson(r).dump(); }

std::string reports_json(const std::vector<VerificationReport>& rs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_ojson(r));
    return arr.dump(2);
}

std::string report_line(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.verdict == Verdict::Pass ? "PASS " : r.verdict == Verdict::Fail ? "FAIL " : "SKIP ");
    os << r.check_id;
    os << "  [" << r.range_lo << ".." << r.range_hi << "]";
    if (r.first_failure) {
        os << "  first mismatch at n=" << r.first_failure->index << ": expected "
           << r.first_failure->expected << ", got " << r.first_failure->actual;
    }
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "  " << r.runtime_ms << "ms";
    return os.str();
}

std::string report_csv_header() {
    return "check_id,verdict,order,range_lo,range_hi,failure_index,expected,actual,runtime_ms";
}

static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string report_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << csv_escape(r.check_id) << "," << to_string(r.verdict) << "," << r.order_checked << ","
       << r.range_lo << "," << r.range_hi << ",";
    if (r.first_failure)
        os << r.first_failure->index << "," << csv_escape(r.first_failure->expected) << ","
           << csv_escape(r.first_failure->actual);
    else
        os << ",,";
    os << "," << r.runtime_ms;
    return os.str();
}

bool all_pass(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (r.verdict != Verdict::Pass) return false;
    return true;
}

}  // namespace qslab
