#include "qslab/qexpr.hpp"

#include "qslab/qproducts.hpp"

#include <doctest.h>

#include <cstdint>

using namespace qslab;
using qexpr::ExprError;

TEST_CASE("literal and arithmetic evaluation") {
    CHECK(qexpr::eval_text("poch(q; q; 0)", 10) == Series::one(10));
    CHECK(qexpr::eval_text("1 + q", 4) == Series::from_coeffs(std::vector<long>{1, 1}, 4));
    CHECK(qexpr::eval_text("(1+q)*(1-q)", 4) ==
          Series::from_coeffs(std::vector<long>{1, 0, -1}, 4));
    CHECK(qexpr::eval_text("q^3", 5) == Series::monomial(1, 3, 5));
    CHECK(qexpr::eval_text("-q^2", 5) == Series::monomial(-1, 2, 5));
    CHECK(qexpr::eval_text("2 - 3*q", 3).coeff(1) == -3);
    CHECK(qexpr::eval_text("(1+q)^2", 4) == Series::from_coeffs(std::vector<long>{1, 2, 1}, 4));
    CHECK(qexpr::eval_text("1/(1-q)", 4) ==
          Series::from_coeffs(std::vector<long>{1, 1, 1, 1, 1}, 4));
}

TEST_CASE("pochhammer atoms") {
    CHECK(qexpr::eval_text("poch(q; q; 2)", 5) ==
          poch(PochhammerSymbol::finite(1, 1, 1, 2), 5));
    CHECK(qexpr::eval_text("poch(-q^2; q^2; inf)", 20) ==
          poch(PochhammerSymbol::infinite(-1, 2, 2), 20));
    CHECK(qexpr::eval_text("poch(q^4;q^4;inf)/poch(q;q;inf)", 10) == gen_reg(4, 10));
}

TEST_CASE("sums") {
    // the DE1 generating sum
    Series de1 = qexpr::eval_text(
        "sum(n, 0, inf, poch(-q^2; q^2; n) * q^(2*n+1) / poch(q; q^2; n+1))", 10);
    CHECK(de1 == gen_DE1(10));
    CHECK(de1.coeff(7) == 7);

    // a bound variable may appear as a coefficient
    Series s = qexpr::eval_text("sum(n, 1, inf, n * q^(n))", 5);
    CHECK(s == Series::from_coeffs(std::vector<long>{0, 1, 2, 3, 4, 5}, 5));
}

TEST_CASE("catalog texts reproduce every registry series") {
    for (const auto& name : registry_names()) {
        INFO("series ", name);
        CHECK(qexpr::eval_text(registry_expression(name), 60) == registry_eval(name, 60));
    }
}

TEST_CASE("parse errors carry positions") {
    auto expect_parse_error = [](const std::string& text) {
        try {
            qexpr::parse(text);
            FAIL_CHECK("expected a parse error for: ", text);
        } catch (const ExprError& e) {
            CHECK(e.kind != ExprError::Kind::Eval);
            CHECK(e.pos.col >= 1);
            CHECK(e.pos.line >= 1);
        }
    };
    expect_parse_error("q^(2*");
    expect_parse_error("");
    expect_parse_error("q +");
    expect_parse_error("poch(q; q)");
    expect_parse_error("sum(n, 0, 5, q)");   // upper bound must be inf
    expect_parse_error("n + q");             // unbound variable
    expect_parse_error("sum(q, 0, inf, q)"); // q cannot be bound
    expect_parse_error("foo(q)");
    expect_parse_error("q @ q");
}

TEST_CASE("eval errors") {
    CHECK_THROWS_AS(qexpr::eval_text("1/(2+q)", 5), ExprError);          // non-unit divisor
    CHECK_THROWS_AS(qexpr::eval_text("q^-2", 5), ExprError);             // negative exponent
    CHECK_THROWS_AS(qexpr::eval_text("sum(n, 0, inf, q^0 + q^n)", 9), ExprError);  // stalls
    CHECK_THROWS_AS(qexpr::eval_text("sum(n, 1, inf, poch(-q; q; n))", 9), ExprError);
    CHECK_THROWS_AS(qexpr::eval_text("poch(q^0; q; inf)", 5), ExprError);  // zero factor
}

TEST_CASE("identity checking") {
    auto ok = qexpr::check_identity("poch(-q^2; q^2; inf) / poch(q; q^2; inf)",
                                    "poch(q^4; q^4; inf) / poch(q; q; inf)", 80);
    CHECK(ok.verdict == Verdict::Pass);

    auto bad = qexpr::check_identity("q", "q^2", 10);
    REQUIRE(bad.verdict == Verdict::Fail);
    CHECK(bad.first_failure->index == 1);

    CHECK_THROWS_WITH_AS(qexpr::check_identity("q +", "q", 5),
                         doctest::Contains("lhs:"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(qexpr::check_identity("q", "1/(q+2)", 5),
                         doctest::Contains("rhs:"), std::invalid_argument);
}

TEST_CASE("fuzzing the parser never crashes") {
    std::uint64_t state = 0x2545f4914f6cdd1dull;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    const std::string alphabet = "qn+-*/^();, 0123456789pochsuminf\t\nxyz!@#\\\"'%&[]{}.<>";
    int parsed = 0, rejected = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::string text;
        std::size_t len = next() % 48;
        for (std::size_t i = 0; i < len; ++i) text += alphabet[next() % alphabet.size()];
        try {
            qexpr::parse(text);
            ++parsed;
        } catch (const ExprError&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 10000);
    CHECK(rejected > 0);  // garbage really is rejected
}
