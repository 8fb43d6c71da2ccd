#include "qslab/cli.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = qslab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    if (end == std::string::npos) return "";
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("expand a named series") {
    auto r = run_cli({"expand", "DE3", "--order", "7"});
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) == "7\t5");
}

TEST_CASE("expand an expression") {
    auto r = run_cli({"expand", "poch(q^4;q^4;inf)/poch(q;q;inf)", "--order", "5"});
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) == "5\t6");

    // constraint-style spellings resolve to the same series
    auto zero = run_cli({"expand", "dee", "--order", "0"});
    CHECK(zero.exit_code == 0);
    CHECK(last_line(zero.out) == "0\t1");
    CHECK(run_cli({"expand", "reg:3", "--order", "6"}).out ==
          run_cli({"expand", "poch(q^3;q^3;inf)/poch(q;q;inf)", "--order", "6"}).out);
}

TEST_CASE("expand rejects garbage") {
    auto r = run_cli({"expand", "q^(2*", "--order", "5"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("expand emits the documented json schema") {
    auto r = run_cli({"expand", "ped", "--order", "5", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == R"({"order":5,"coeffs":["1","1","2","3","4","6"]})" "\n");
    // byte-identical across invocations
    CHECK(run_cli({"expand", "ped", "--order", "5", "--format", "json"}).out == r.out);
}

TEST_CASE("oracle counting and listing") {
    auto r = run_cli({"oracle", "deExact:2", "10"});
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) == "3");

    auto listed = run_cli({"oracle", "dee", "6", "--list"});
    CHECK(listed.exit_code == 0);
    CHECK(listed.out.find("4+2\n") != std::string::npos);
    CHECK(listed.out.find("2+2+2") == std::string::npos);  // three repeats of the largest part

    auto empty = run_cli({"oracle", "reg:4", "0"});
    CHECK(empty.exit_code == 0);
    CHECK(last_line(empty.out) == "1");

    auto bad = run_cli({"oracle", "nonsense", "5"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify single checks and exit codes") {
    auto pass = run_cli({"verify", "T5", "--order", "50"});
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("PASS T5") != std::string::npos);

    auto fail = run_cli({"verify", "T3", "--order", "50"});
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("FAIL T3") != std::string::npos);
    CHECK(fail.out.find("n=12") != std::string::npos);

    auto bogus = run_cli({"verify", "bogus"});
    CHECK(bogus.exit_code == 2);
    CHECK(bogus.err.find("unknown check id") != std::string::npos);
}

TEST_CASE("verify json output is bit-identical across invocations") {
    auto a = run_cli({"verify", "T6", "--order", "40", "--format", "json"});
    auto b = run_cli({"verify", "T6", "--order", "40", "--format", "json"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"check_id\": \"T6\"") != std::string::npos);

    auto c = run_cli({"verify", "T3", "--order", "30", "--format", "json"});
    auto d = run_cli({"verify", "T3", "--order", "30", "--format", "json"});
    CHECK(c.exit_code == 1);
    CHECK(c.out == d.out);
    CHECK(c.out.find("\"index\": 12") != std::string::npos);
}

TEST_CASE("verify csv output") {
    auto r = run_cli({"verify", "LISTED", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("check_id,verdict", 0) == 0);
    CHECK(r.out.find("LISTED,PASS") != std::string::npos);
}

TEST_CASE("oracle limit guard") {
    auto blocked = run_cli({"verify", "oracles", "--oracle-limit", "70"});
    CHECK(blocked.exit_code == 2);
    auto small = run_cli({"verify", "oracles", "--oracle-limit", "10"});
    CHECK(small.exit_code == 0);
}

TEST_CASE("identity subcommand") {
    auto pass = run_cli({"identity", "poch(-q^2;q^2;inf)/poch(q;q^2;inf)",
                         "poch(q^4;q^4;inf)/poch(q;q;inf)", "--order", "100"});
    CHECK(pass.exit_code == 0);

    // the odd-largest family shifted by q reproduces the even-largest one
    auto shifted = run_cli({"identity",
                            "sum(n, 0, inf, poch(-q^2; q^2; n) * q^(2*n+1) / poch(q; q^2; n))",
                            "q * sum(n, 0, inf, poch(-q^2; q^2; n) * q^(2*n) / poch(q; q^2; n))",
                            "--order", "60"});
    CHECK(shifted.exit_code == 0);

    auto fail = run_cli({"identity", "q", "q^2", "--order", "10"});
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("n=1") != std::string::npos);

    auto err = run_cli({"identity", "q +", "q", "--order", "10"});
    CHECK(err.exit_code == 2);
    CHECK(err.err.find("lhs:") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"expand"}).exit_code == 2);
    CHECK(run_cli({"verify", "all", "--order", "3"}).exit_code == 2);  // below minimum
}
