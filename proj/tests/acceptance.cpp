/* Acceptance suite: one criterion per run (argv[1] = 1..9) or all of them.
 * Prints one PASS/FAIL line per criterion and exits with the number of
 * failures. Criteria 1, 4 and 9 assert catalogued values that the engine
 * refutes; those lines report the discrepancy rather than hiding it. */

#include "qslab/cli.hpp"
#include "qslab/enumerate.hpp"
#include "qslab/qexpr.hpp"
#include "qslab/qproducts.hpp"
#include "qslab/theorems.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qslab;
using Clock = std::chrono::steady_clock;

struct Criterion {
    bool ok = true;
    std::vector<std::string> details;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: golden values via generating function and oracle --------

void golden_values(Criterion& c) {
    auto t0 = Clock::now();
    struct Golden {
        const char* registry;
        const char* constraint;
        long n;
        long expected;
    };
    const Golden table[] = {
        {"reg4", "reg:4", 5, 6},          {"ped", "ped", 5, 6},
        {"DE1", "de1", 7, 7},             {"DE2", "de2", 7, 2},
        {"DE3", "de3", 7, 5},             {"DEgeq:3", "deGeq:3", 10, 2},
        {"DEexact:2", "deExact:2", 10, 3}, {"DEe", "dee", 6, 6},
        {"DEeExact:1", "deeExact:1", 6, 4}, {"DEeGeq:2", "deeGeq:2", 6, 2},
    };
    for (const auto& g : table) {
        Integer via_gen = registry_eval(g.registry, g.n).coeff(g.n);
        long long via_oracle = count(g.n, PartitionConstraint::parse(g.constraint));
        std::ostringstream os;
        os << g.registry << "(" << g.n << "): stated " << g.expected << ", generating function "
           << via_gen.get_str() << ", enumeration " << via_oracle;
        c.expect(via_gen == g.expected && via_oracle == g.expected, os.str());
    }
    c.expect(seconds_since(t0) < 5.0, "runtime exceeded 5 s");
}

// ---- criterion 2: oracle soundness to n = 40 -------------------------------

void oracle_soundness(Criterion& c) {
    auto t0 = Clock::now();
    auto r = check_oracles(40);
    c.expect(r.verdict == Verdict::Pass, report_line(r));
    c.expect(seconds_since(t0) < 60.0, "runtime exceeded 60 s");
}

// ---- criterion 3: T1/T2 for k = 1..4 at order 100 ---------------------------

void t1_t2(Criterion& c) {
    for (long k = 1; k <= 4; ++k) {
        auto r1 = check_T1(k, 100);
        c.expect(r1.verdict == Verdict::Pass, report_line(r1));
        auto r2 = check_T2(k, 100);
        c.expect(r2.verdict == Verdict::Pass, report_line(r2));
    }
}

// ---- criterion 4: T3..T7 and the four relations at order 200 ----------------

void recurrences(Criterion& c) {
    for (auto* fn : {&check_T3_recurrence, &check_T4_recurrence, &check_T5, &check_T6, &check_T7,
                     &check_AB_relations}) {
        auto r = (*fn)(200);
        c.expect(r.verdict == Verdict::Pass, report_line(r));
    }
}

// ---- criterion 5: the exact congruence layer at order 200 -------------------

void congruence_layer_a(Criterion& c) {
    // bracket * theta identities, the mod-4 and mod-8 theta forms of
    // reg4*cubic, and its functional equation, all inside these checks
    for (auto* fn : {&check_T8, &check_T10, &check_T14, &check_T15}) {
        auto r = (*fn)(200);
        c.expect(r.verdict == Verdict::Pass, report_line(r));
    }
}

// ---- criterion 6: listed congruences and the parity corollary --------------

void congruence_layer_b(Criterion& c) {
    auto listed = check_listed_congruences();
    c.expect(listed.verdict == Verdict::Pass, report_line(listed));
    auto c12 = check_C12(200);  // both directions for every n <= 199
    c.expect(c12.verdict == Verdict::Pass, report_line(c12));
}

// ---- criterion 7: classical identities --------------------------------------

void classical(Criterion& c) {
    for (const auto& r : run_classical(50)) c.expect(r.verdict == Verdict::Pass, report_line(r));
}

// ---- criterion 8: expression catalog round trip + parser fuzz ---------------

void parser_round_trip(Criterion& c) {
    for (const auto& name : registry_names()) {
        bool same = qexpr::eval_text(registry_expression(name), 100) == registry_eval(name, 100);
        c.expect(same, "catalog text for " + name + " diverges from the generator");
    }
    std::uint64_t state = 0xdeadbeefcafef00dull;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    const std::string alphabet = "qn+-*/^();, 0123456789pochsuminf\\\"'@#.xyzjk";
    for (int iter = 0; iter < 10000; ++iter) {
        std::string text;
        std::size_t len = next() % 40;
        for (std::size_t i = 0; i < len; ++i) text += alphabet[next() % alphabet.size()];
        try {
            qexpr::parse(text);
        } catch (const qexpr::ExprError&) {
            // positioned rejection is the contract
        } catch (...) {
            c.expect(false, "parser crash on fuzz input: " + text);
            return;
        }
    }
}

// ---- criterion 9: the full CLI run ------------------------------------------

void full_run(Criterion& c) {
    auto t0 = Clock::now();
    std::ostringstream out, err;
    int code = cli::run({"verify", "all", "--order", "200", "--kmax", "4"}, out, err);
    double secs = seconds_since(t0);
    c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeded 60 s");
    if (code != 0) {
        std::ostringstream os;
        os << "exit status " << code << "; failing checks:";
        std::istringstream lines(out.str());
        for (std::string line; std::getline(lines, line);)
            if (line.rfind("FAIL", 0) == 0) os << "\n      " << line;
        c.expect(false, os.str());
    }
}

const struct {
    int id;
    const char* name;
    void (*fn)(Criterion&);
} kCriteria[] = {
    {1, "golden partition counts via both routes", &golden_values},
    {2, "oracle soundness for every family, n <= 40", &oracle_soundness},
    {3, "T1 and T2 for k = 1..4 at order 100", &t1_t2},
    {4, "T3-T7 and the four DE/reg4 relations at order 200", &recurrences},
    {5, "exact congruence layer at order 200", &congruence_layer_a},
    {6, "listed congruences and parity corollary to n = 199", &congruence_layer_b},
    {7, "classical identities at order 50", &classical},
    {8, "catalog round trip at order 100 and 10^4-input parser fuzz", &parser_round_trip},
    {9, "verify all --order 200 --kmax 4: exit 0 in under 60 s", &full_run},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (const auto& spec : kCriteria) {
        if (only != 0 && spec.id != only) continue;
        Criterion c;
        auto t0 = Clock::now();
        spec.fn(c);
        double secs = seconds_since(t0);
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << spec.id << ": " << spec.name
                  << "  (" << static_cast<long>(secs * 1000) << " ms)\n";
        for (const auto& d : c.details) std::cout << "    - " << d << "\n";
        if (!c.ok) ++failures;
    }
    return failures;
}
