#include "qslab/theorems.hpp"

#include "qslab/enumerate.hpp"
#include "qslab/qproducts.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qslab {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// zero-extended coefficient lookup
Integer at(const Series& s, long n) {
    return (n >= 0 && n <= s.order()) ? s.coeff(n) : Integer(0);
}

bool even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

/* A check accumulates layered sub-comparisons; the first failing layer
 * provides the first_failure payload and the note. */
struct Check {
    VerificationReport report;
    Clock::time_point t0 = Clock::now();

    explicit Check(std::string id, long order) {
        report.check_id = std::move(id);
        report.order_checked = order;
        report.range_hi = order;
    }

    void sweep(const std::string& layer, long lo, long hi,
               const std::function<Integer(long)>& expected,
               const std::function<Integer(long)>& actual) {
        if (report.verdict == Verdict::Fail) return;
        for (long n = lo; n <= hi; ++n) {
            Integer e = expected(n);
            Integer a = actual(n);
            if (e != a) {
                report.verdict = Verdict::Fail;
                report.first_failure = FirstFailure{n, e.get_str(), a.get_str()};
                report.note = layer;
                return;
            }
        }
    }

    void parity_sweep(const std::string& layer, long lo, long hi,
                      const std::function<bool(long)>& skip,
                      const std::function<Integer(long)>& lhs,
                      const std::function<Integer(long)>& rhs) {
        if (report.verdict == Verdict::Fail) return;
        for (long n = lo; n <= hi; ++n) {
            if (skip(n)) continue;
            Integer a = lhs(n);
            Integer b = rhs(n);
            if (even(a - b)) continue;
            report.verdict = Verdict::Fail;
            report.first_failure = FirstFailure{n, b.get_str() + " (mod 2)", a.get_str() + " (mod 2)"};
            report.note = layer;
            return;
        }
    }

    void series_equal(const std::string& layer, const Series& lhs, const Series& rhs, long up_to) {
        if (report.verdict == Verdict::Fail) return;
        auto cmp = equal_up_to(lhs, rhs, up_to);
        if (!cmp.equal) {
            report.verdict = Verdict::Fail;
            report.first_failure = FirstFailure{cmp.mismatch->index, cmp.mismatch->rhs.get_str(),
                                                cmp.mismatch->lhs.get_str()};
            report.note = layer;
        }
    }

    VerificationReport done(long lo, long hi, std::string pass_note = {}) {
        report.range_lo = lo;
        report.range_hi = hi;
        if (report.verdict == Verdict::Pass && !pass_note.empty()) report.note = std::move(pass_note);
        report.runtime_ms = ms_since(t0);
        return report;
    }
};

Series poly(std::vector<long> coeffs, long order) {
    return Series::from_coeffs(coeffs, order);
}

}  // namespace

ExceptionalSet::ExceptionalSet(Kind kind, long bound) : bound_(bound), member_(bound + 1, false) {
    switch (kind) {
        case Kind::Triangular:
            for (long j = 0; j * (j + 1) / 2 <= bound; ++j) member_[j * (j + 1) / 2] = true;
            break;
        case Kind::Pronic:
            for (long j = 0; j * (j + 1) <= bound; ++j) member_[j * (j + 1)] = true;
            break;
        case Kind::Square:
            for (long k = 0; k * k <= bound; ++k) member_[k * k] = true;
            break;
        case Kind::TwiceSquare:
            for (long k = 0; 2 * k * k <= bound; ++k) member_[2 * k * k] = true;
            break;
        case Kind::FourSquare:
            for (long k = 0; 4 * k * k <= bound; ++k) member_[4 * k * k] = true;
            break;
        case Kind::SquarePlusTwiceSquare:
            for (long k = 0; k * k <= bound; ++k)
                for (long l = 0; k * k + 2 * l * l <= bound; ++l) member_[k * k + 2 * l * l] = true;
            break;
    }
}

bool ExceptionalSet::contains(long long n) const {
    if (n < 0 || n > bound_) throw std::out_of_range("exceptional-set query past cached bound");
    return member_[static_cast<std::size_t>(n)];
}

VerificationReport check_T1(long k, long order) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    Check ck("T1[k=" + std::to_string(k) + "]", order);

    Series lhs = gen_DE_geq(k, order);
    Series R = gen_reg(4, order);

    // sum_n (q^k;q^2)_n (q^{k+1};q^2)_n q^{2n} / (q^4;q^4)_n
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
    std::vector<Integer> term(static_cast<std::size_t>(order) + 1);
    term[0] = 1;
    for (long n = 0; 2 * n <= order; ++n) {
        for (long i = 2 * n; i <= order; ++i) acc[i] += term[i];
        detail::mul_one_minus(term, 1, k + 2 * n);
        detail::mul_one_minus(term, 1, k + 1 + 2 * n);
        detail::shift_up(term, 2);
        detail::div_one_minus(term, 1, 4 * n + 4);
    }
    Series S(std::move(acc), order);

    Series first = mul(mul(R, poch(PochhammerSymbol::finite(1, 1, 1, k - 1), order)), S);
    Series second = mul(R, mul(invert(poly({1, 1}, order)),
                               mul(poch(PochhammerSymbol::finite(1, 2, 2, k - 1), order),
                                   invert(poch(PochhammerSymbol::finite(-1, 3, 2, k - 1), order)))));
    ck.series_equal("q-sum expansion vs DEgeq:" + std::to_string(k), sub(first, second), lhs, order);
    return ck.done(0, order);
}

VerificationReport check_T2(long k, long order) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    Check ck("T2[k=" + std::to_string(k) + "]", order);

    Series lhs = gen_DE_exact(k, order);
    Series R = gen_reg(4, order);

    // sum_n (q;q)_{2n+k-1} q^{4n} / (q^4;q^4)_n
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
    Series seed = poch(PochhammerSymbol::finite(1, 1, 1, k - 1), order);
    std::vector<Integer> term(seed.coeffs());
    for (long n = 0; 4 * n <= order; ++n) {
        for (long i = 4 * n; i <= order; ++i) acc[i] += term[i];
        detail::mul_one_minus(term, 1, 2 * n + k);
        detail::mul_one_minus(term, 1, 2 * n + k + 1);
        detail::shift_up(term, 4);
        detail::div_one_minus(term, 1, 4 * n + 4);
    }
    Series S(std::move(acc), order);

    Series first = shift(mul(R, S), k);
    // q^{2k} (q^4;q^4) (-q^{3+2k};q^2) / ((1-q)(q^6;q^4)(q^{2k};q^2)), all infinite products
    Series second_num = mul(poch(PochhammerSymbol::infinite(1, 4, 4), order),
                            poch(PochhammerSymbol::infinite(-1, 3 + 2 * k, 2), order));
    Series second_den = mul(poly({1, -1}, order),
                            mul(poch(PochhammerSymbol::infinite(1, 6, 4), order),
                                poch(PochhammerSymbol::infinite(1, 2 * k, 2), order)));
    Series second = shift(mul(second_num, invert(second_den)), 2 * k);
    ck.series_equal("q-sum expansion vs DEexact:" + std::to_string(k), sub(first, second), lhs, order);
    return ck.done(0, order);
}

VerificationReport check_T3_recurrence(long order) {
    if (order < 12) throw std::invalid_argument("order must be at least 12");
    Check ck("T3", order);
    Series D = gen_DE_exact(2, order);
    Series R = gen_reg(4, order);
    ck.sweep("eight-term DEexact:2 combination vs nine-term reg4 combination", 12, order,
             [&](long n) -> Integer {
                 return at(R, n - 2) + at(R, n - 3) - 2 * at(R, n - 4) - at(R, n - 5) + at(R, n - 6) +
                        2 * at(R, n - 8) - at(R, n - 9) - 2 * at(R, n - 10) + at(R, n - 11);
             },
             [&](long n) -> Integer {
                 return at(D, n - 3) - at(D, n - 4) + at(D, n - 6) - at(D, n - 7) + at(D, n - 8) -
                        at(D, n - 9) + at(D, n - 11) - at(D, n - 12);
             });
    return ck.done(12, order, "as stated");
}

VerificationReport check_T4_recurrence(long order) {
    if (order < 10) throw std::invalid_argument("order must be at least 10");
    Check ck("T4", order);
    Series D = gen_DE_geq(3, order);
    Series R = gen_reg(4, order);
    ck.sweep("eight-term DEgeq:3 combination vs five-term reg4 combination", 10, order,
             [&](long n) -> Integer {
                 return -at(R, n) - 3 * at(R, n - 1) + 3 * at(R, n - 2) - at(R, n - 5) + at(R, n - 6);
             },
             [&](long n) -> Integer {
                 return at(D, n - 1) - at(D, n - 2) + at(D, n - 4) - at(D, n - 5) + at(D, n - 6) -
                        at(D, n - 7) + at(D, n - 9) - at(D, n - 10);
             });
    return ck.done(10, order, "as stated");
}

VerificationReport check_T5(long order) {
    if (order < 3) throw std::invalid_argument("order must be at least 3");
    Check ck("T5", order);
    Series E = gen_DEe(order);
    Series R = gen_reg(4, order);

    ck.sweep("recurrence DEe(n) = reg4(n-1) - DEe(n-3)", 3, order,
             [&](long n) -> Integer { return at(R, n - 1) - at(E, n - 3); },
             [&](long n) -> Integer { return at(E, n); });
    ck.series_equal("(1+q^3) * DEe = q * reg4 + 1 - q",
                    mul(E, poly({1, 0, 0, 1}, order)),
                    add(shift(R, 1), poly({1, -1}, order)), order);
    // alternating closed form; the tail term (-1)^{n/3} enters at multiples of 3
    ck.sweep("alternating reg4 sum with boundary term", 3, order,
             [&](long n) -> Integer {
                 Integer s = 0;
                 int sign = 1;
                 for (long e = n - 1; e >= 1; e -= 3, sign = -sign) s += sign * at(R, e);
                 if (n % 3 == 0) s += (n / 3) % 2 ? -1 : 1;
                 return s;
             },
             [&](long n) -> Integer { return at(E, n); });
    return ck.done(3, order);
}

VerificationReport check_T6(long order) {
    if (order < 2) throw std::invalid_argument("order must be at least 2");
    Check ck("T6", order);
    Series E1 = gen_DEe_exact(1, order);
    Series R = gen_reg(4, order);

    ck.series_equal("(1+q) * DEe1 = q * reg4 - q",
                    mul(E1, poly({1, 1}, order)),
                    sub(shift(R, 1), Series::monomial(1, 1, order)), order);
    ck.sweep("alternating reg4 sum", 2, order,
             [&](long n) -> Integer {
                 Integer s = 0;
                 int sign = 1;
                 for (long i = 0; i <= n - 2; ++i, sign = -sign) s += sign * at(R, n - 1 - i);
                 return s;
             },
             [&](long n) -> Integer { return at(E1, n); });
    return ck.done(2, order);
}

VerificationReport check_T7(long order) {
    if (order < 2) throw std::invalid_argument("order must be at least 2");
    Check ck("T7", order);
    Series G2 = gen_DE_geq(2, order);
    Series G3 = gen_DE_geq(3, order);
    Series E2 = gen_DEe_geq(2, order);
    Series R1 = gen_reg4_gt1(order);

    ck.sweep("shift identity DEeGeq:2(n-2) = DEgeq:2(n) - DEgeq:3(n)", 0, order,
             [&](long n) -> Integer { return at(G2, n) - at(G3, n); },
             [&](long n) -> Integer { return at(E2, n - 2); });
    ck.sweep("recurrence DEgeq:2(n) = reg4gt1(n) - DEgeq:2(n-3)", 1, order,
             [&](long n) -> Integer { return at(R1, n) - at(G2, n - 3); },
             [&](long n) -> Integer { return at(G2, n); });
    // alternating sum over positive arguments only
    ck.sweep("alternating reg4gt1 sum", 2, order,
             [&](long n) -> Integer {
                 Integer s = 0;
                 int sign = 1;
                 for (long e = n; e >= 1; e -= 3, sign = -sign) s += sign * at(R1, e);
                 return s;
             },
             [&](long n) -> Integer { return at(E2, n - 2) + at(G3, n); });
    return ck.done(2, order);
}

VerificationReport check_AB_relations(long order) {
    if (order < 4) throw std::invalid_argument("order must be at least 4");
    Check ck("AB", order);
    Series D1 = gen_DE1(order);
    Series D2 = gen_DE2(order);
    Series D3 = gen_DE3(order);
    Series R = gen_reg(4, order);
    Series R1 = gen_reg4_gt1(order);

    ck.sweep("(i) DE1(n) + DE1(n-1) = reg4(n)", 1, order,
             [&](long n) -> Integer { return at(R, n); },
             [&](long n) -> Integer { return at(D1, n) + at(D1, n - 1); });
    ck.sweep("(ii) DE2(n) + DE2(n-3) = reg4gt1(n)", 1, order,
             [&](long n) -> Integer { return at(R1, n); },
             [&](long n) -> Integer { return at(D2, n) + at(D2, n - 3); });
    ck.sweep("(iii) DE3(n+2) + DE3(n-1) = reg4(n)", 2, order - 2,
             [&](long n) -> Integer { return at(R, n); },
             [&](long n) -> Integer { return at(D3, n + 2) + at(D3, n - 1); });
    ck.sweep("(iv) DE3(n+2) + DE3(n-1) = DE1(n) + DE1(n-1)", 2, order - 2,
             [&](long n) -> Integer { return at(D1, n) + at(D1, n - 1); },
             [&](long n) -> Integer { return at(D3, n + 2) + at(D3, n - 1); });
    return ck.done(1, order);
}

namespace {

/* The bracket series of the congruence layer: reg4(0) + reg4(1) q +
 * sum_{n>=2} (DEe(n+1)+DEe(n-2)) q^n, and its DEe1 analogue. Built from the
 * DE arrays, not from reg4 — that these brackets reproduce reg4 is exactly
 * what the exact layer asserts. */
Series bracket_dee(long order) {
    Series E = gen_DEe(order + 1);
    Series R = gen_reg(4, 1);
    std::vector<Integer> b(static_cast<std::size_t>(order) + 1);
    b[0] = R.coeff(0);
    if (order >= 1) b[1] = R.coeff(1);
    for (long n = 2; n <= order; ++n) b[n] = at(E, n + 1) + at(E, n - 2);
    return Series(std::move(b), order);
}

Series bracket_dee1(long order) {
    Series E1 = gen_DEe_exact(1, order + 1);
    Series R = gen_reg(4, 1);
    std::vector<Integer> b(static_cast<std::size_t>(order) + 1);
    b[0] = R.coeff(0);
    for (long n = 1; n <= order; ++n) b[n] = at(E1, n + 1) + at(E1, n);
    return Series(std::move(b), order);
}

}  // namespace

VerificationReport check_T8(long order) {
    if (order < 8) throw std::invalid_argument("order must be at least 8");
    Check ck("T8", order);
    Series B = bracket_dee(order);
    Series B1 = bracket_dee1(order);
    Series ts = theta(ThetaKind::TriangularSigned, order);
    Series pronic = theta(ThetaKind::Pronic, order);
    ck.series_equal("(DEe bracket) * signed-triangular theta = pronic theta", mul(B, ts), pronic, order);
    ck.series_equal("(DEe1 bracket) * signed-triangular theta = pronic theta", mul(B1, ts), pronic, order);

    // congruence form: triangular-shifted sums agree mod 2 away from pronic n;
    // where an argument hits 0 the bracket boundary reg4(0) = 1 stands in
    Series E = gen_DEe(order + 1);
    Series E1 = gen_DEe_exact(1, order + 1);
    ExceptionalSet pron(ExceptionalSet::Kind::Pronic, order);
    ExceptionalSet tri(ExceptionalSet::Kind::Triangular, order);
    auto skip = [&](long n) { return pron.contains(n); };
    ck.parity_sweep("shifted DEe sums mod 2 off the pronic set", 2, order, skip,
                    [&](long n) -> Integer {
                        Integer s = tri.contains(n) ? 1 : 0;
                        for (long j = 0; j * (j + 1) / 2 <= n; ++j) s += at(E, n - j * (j + 1) / 2 + 1);
                        return s;
                    },
                    [&](long n) -> Integer {
                        Integer s = 0;
                        for (long j = 0; j * (j + 1) / 2 <= n; ++j) s += at(E, n - j * (j + 1) / 2 - 2);
                        return s;
                    });
    ck.parity_sweep("shifted DEe1 sums mod 2 off the pronic set", 1, order, skip,
                    [&](long n) -> Integer {
                        Integer s = tri.contains(n) ? 1 : 0;
                        for (long j = 0; j * (j + 1) / 2 <= n; ++j) s += at(E1, n - j * (j + 1) / 2);
                        return s;
                    },
                    [&](long n) -> Integer {
                        Integer s = 0;
                        for (long j = 0; j * (j + 1) / 2 <= n; ++j) s += at(E1, n - j * (j + 1) / 2 + 1);
                        return s;
                    });
    return ck.done(1, order);
}

VerificationReport check_T10(long order) {
    if (order < 8) throw std::invalid_argument("order must be at least 8");
    Check ck("T10", order);
    Series B = bracket_dee(order);
    Series B1 = bracket_dee1(order);
    Series alt = theta(ThetaKind::SquareAlt, order);
    Series trig = theta(ThetaKind::Triangular, order);
    ck.series_equal("(DEe bracket) * alternating-square theta = triangular theta", mul(B, alt), trig, order);
    ck.series_equal("(DEe1 bracket) * alternating-square theta = triangular theta", mul(B1, alt), trig, order);

    Series E = gen_DEe(order + 1);
    Series E1 = gen_DEe_exact(1, order + 1);
    ExceptionalSet tri(ExceptionalSet::Kind::Triangular, order);
    auto skip = [&](long n) { return tri.contains(n); };
    auto bilateral = [&](const Series& s, long n, long offset) {
        // sum over all integers j of s(n - 2j^2 + offset), negatives dropped
        Integer total = 0;
        for (long j = 0; n - 2 * j * j + offset >= 0; ++j) {
            Integer v = at(s, n - 2 * j * j + offset);
            total += (j == 0) ? v : 2 * v;
        }
        return total;
    };
    ck.parity_sweep("bilateral DEe sums mod 2 off the triangular set", 2, order, skip,
                    [&](long n) { return bilateral(E, n, -2); },
                    [&](long n) { return bilateral(E, n, 1); });
    ck.parity_sweep("bilateral DEe1 sums mod 2 off the triangular set", 0, order, skip,
                    [&](long n) { return bilateral(E1, n, 1); },
                    [&](long n) { return bilateral(E1, n, 0); });
    return ck.done(0, order);
}

VerificationReport check_C12(long order) {
    if (order < 5) throw std::invalid_argument("order must be at least 5");
    Check ck("C12", order);
    Series E = gen_DEe(order);
    Series E1 = gen_DEe_exact(1, order);
    ExceptionalSet tri(ExceptionalSet::Kind::Triangular, order);
    auto indicator = [&](long n) { return Integer(tri.contains(n) ? 1 : 0); };

    // both directions at once: the pair is odd exactly at triangular n
    ck.sweep("DEe(n+1) = DEe(n-2) mod 2 iff n not triangular", 2, order - 1, indicator,
             [&](long n) { return Integer((at(E, n + 1) + at(E, n - 2)) % 2); });
    // the n = 0 pair carries the constant boundary term reg4(0)
    ck.sweep("DEe1(n) = DEe1(n+1) mod 2 iff n not triangular", 0, order - 1, indicator,
             [&](long n) -> Integer {
                 Integer pair = at(E1, n) + at(E1, n + 1);
                 if (n == 0) pair += 1;
                 return Integer(pair % 2);
             });
    return ck.done(0, order - 1);
}

namespace {

Series t14_theta_combination(long order) {
    // 1 + 2 sum q^{n^2} + 6 sum q^{2n^2}
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long n = 1; n * n <= order; ++n) c[n * n] += 2;
    for (long n = 1; 2 * n * n <= order; ++n) c[2 * n * n] += 6;
    return Series(std::move(c), order);
}

Series t15_theta_combination(long order) {
    // 1 + 2 sum q^{n^2} + 6 sum q^{2(2n-1)^2} + 18 sum q^{2(2n)^2}
    //   + 24 sum q^{4n^2} + 12 sum_{m,n>=1} q^{n^2+2m^2}
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long n = 1; n * n <= order; ++n) c[n * n] += 2;
    for (long n = 1; 2 * (2 * n - 1) * (2 * n - 1) <= order; ++n) c[2 * (2 * n - 1) * (2 * n - 1)] += 6;
    for (long n = 1; 8 * n * n <= order; ++n) c[8 * n * n] += 18;
    for (long n = 1; 4 * n * n <= order; ++n) c[4 * n * n] += 24;
    for (long n = 1; n * n + 2 <= order; ++n)
        for (long m = 1; n * n + 2 * m * m <= order; ++m) c[n * n + 2 * m * m] += 12;
    return Series(std::move(c), order);
}

/* Convolution layer shared by the mod-4 and mod-8 congruences: the shifted
 * DE pair convolved with the cubic-partition numbers, plus the a(n)*reg4(0)
 * term where the pair's argument bottoms out at 0. Equals the coefficient of
 * A(q) = reg4 * cubic when the exact layer holds. */
void convolution_layer(Check& ck, long order, long modulus, const ExceptionalSet* excl[], int n_excl) {
    Series a = gen_cubic(order);
    Series E = gen_DEe(order + 1);
    Series E1 = gen_DEe_exact(1, order + 1);
    auto skip = [&](long n) -> Integer {
        for (int i = 0; i < n_excl; ++i)
            if (excl[i]->contains(n)) return true;
        return false;
    };
    std::string tag = "mod " + std::to_string(modulus);
    ck.sweep("DEe convolution with cubic " + tag + " off the exceptional sets", 0, order,
             [&](long) -> Integer { return Integer(0); },
             [&](long n) -> Integer {
                 if (skip(n)) return Integer(0);
                 Integer s = at(a, n);  // boundary: a(n) * reg4(0)
                 for (long j = 0; j <= n; ++j)
                     s += (at(E, n - j + 1) + at(E, n - j - 2)) * at(a, j);
                 return Integer(s % modulus);
             });
    ck.sweep("DEe1 convolution with cubic " + tag + " off the exceptional sets", 0, order,
             [&](long) -> Integer { return Integer(0); },
             [&](long n) -> Integer {
                 if (skip(n)) return Integer(0);
                 Integer s = at(a, n);
                 for (long j = 0; j <= n; ++j)
                     s += (at(E1, n - j + 1) + at(E1, n - j)) * at(a, j);
                 return Integer(s % modulus);
             });
}

}  // namespace

VerificationReport check_T14(long order) {
    if (order < 16) throw std::invalid_argument("order must be at least 16");
    Check ck("T14", order);
    Series A = mul(gen_reg(4, order), gen_cubic(order));
    ck.series_equal("reg4 * cubic = 1 + 2 sum q^{n^2} + 6 sum q^{2n^2} mod 4",
                    reduce_mod(A, 4), reduce_mod(t14_theta_combination(order), 4), order);
    // functional equation A(q) = phi(q) phi(q^2) A(q^2)^2
    Series phi = theta(ThetaKind::Phi, order);
    Series rhs = mul(mul(phi, dilate(phi, 2)), pow(dilate(A, 2), 2));
    ck.series_equal("A(q) = phi(q) phi(q^2) A(q^2)^2", A, rhs, order);

    ExceptionalSet sq(ExceptionalSet::Kind::Square, order);
    ExceptionalSet twosq(ExceptionalSet::Kind::TwiceSquare, order);
    const ExceptionalSet* excl[] = {&sq, &twosq};
    convolution_layer(ck, order, 4, excl, 2);
    return ck.done(0, order);
}

VerificationReport check_T15(long order) {
    if (order < 16) throw std::invalid_argument("order must be at least 16");
    Check ck("T15", order);
    Series A = mul(gen_reg(4, order), gen_cubic(order));
    ck.series_equal("reg4 * cubic vs five-theta combination mod 8",
                    reduce_mod(A, 8), reduce_mod(t15_theta_combination(order), 8), order);

    ExceptionalSet sq(ExceptionalSet::Kind::Square, order);
    ExceptionalSet twosq(ExceptionalSet::Kind::TwiceSquare, order);
    ExceptionalSet foursq(ExceptionalSet::Kind::FourSquare, order);
    ExceptionalSet mixed(ExceptionalSet::Kind::SquarePlusTwiceSquare, order);
    const ExceptionalSet* excl[] = {&sq, &twosq, &foursq, &mixed};
    convolution_layer(ck, order, 8, excl, 4);
    return ck.done(0, order);
}

std::vector<VerificationReport> check_proof_identities(long order) {
    if (order < 12) throw std::invalid_argument("order must be at least 12");
    std::vector<VerificationReport> out;

    Series R = gen_reg(4, order);
    Series R1 = gen_reg4_gt1(order);
    Series D1 = gen_DE1(order);
    Series D2g = gen_DE2(order);
    Series D3 = gen_DE3(order);
    Series E = gen_DEe(order);
    Series E1 = gen_DEe_exact(1, order);

    {
        Check ck("PROOFS:de1_comb", order);
        ck.series_equal("(1+q) * DE1 = reg4 - 1", mul(D1, poly({1, 1}, order)),
                        sub(R, Series::one(order)), order);
        out.push_back(ck.done(0, order));
    }
    {
        Check ck("PROOFS:de3_comb", order);
        ck.series_equal("(1+q^3) * DE3 = q^2 reg4 - q^2 + q", mul(D3, poly({1, 0, 0, 1}, order)),
                        add(shift(R, 2), poly({0, 1, -1}, order)), order);
        out.push_back(ck.done(0, order));
    }
    {
        Check ck("PROOFS:dee_recurrence", order);
        ck.sweep("DEe(n) = reg4(n-1) - DEe(n-3)", 3, order,
                 [&](long n) -> Integer { return at(R, n - 1) - at(E, n - 3); },
                 [&](long n) -> Integer { return at(E, n); });
        out.push_back(ck.done(3, order));
    }
    {
        Check ck("PROOFS:dee1_recurrence", order);
        ck.sweep("DEe1(n+1) = reg4(n) - DEe1(n)", 1, order - 1,
                 [&](long n) -> Integer { return at(R, n) - at(E1, n); },
                 [&](long n) -> Integer { return at(E1, n + 1); });
        out.push_back(ck.done(1, order - 1));
    }
    {
        Check ck("PROOFS:deegeq2_shift", order);
        ck.series_equal("q^2 * DEeGeq:2 = DEgeq:2 - DEgeq:3",
                        shift(gen_DEe_geq(2, order), 2), sub(D2g, gen_DE_geq(3, order)), order);
        out.push_back(ck.done(0, order));
    }
    {
        Check ck("PROOFS:de2_reg4gt1_recurrence", order);
        ck.series_equal("(1+q^3) * DEgeq:2 = reg4gt1 - 1",
                        mul(D2g, poly({1, 0, 0, 1}, order)), sub(R1, Series::one(order)), order);
        out.push_back(ck.done(0, order));
    }
    {
        // closed form claimed for sum_n (q;q)_{2n+1} q^{4n} / (q^4;q^4)_n;
        // cleared of denominators so both sides live in Z[[q]]
        Check ck("PROOFS:qsum_closed_form", order);
        std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
        std::vector<Integer> term(static_cast<std::size_t>(order) + 1);
        term[0] = 1;
        detail::mul_one_minus(term, 1, 1);  // (q;q)_1 seed
        for (long n = 0; 4 * n <= order; ++n) {
            for (long i = 4 * n; i <= order; ++i) acc[i] += term[i];
            detail::mul_one_minus(term, 1, 2 * n + 2);
            detail::mul_one_minus(term, 1, 2 * n + 3);
            detail::shift_up(term, 4);
            detail::div_one_minus(term, 1, 4 * n + 4);
        }
        Series X(std::move(acc), order);
        Series q4 = poch(PochhammerSymbol::infinite(1, 4, 4), order);
        Series q2_1 = poch(PochhammerSymbol::infinite(1, 2, 1), order);
        Series lhs = mul(mul(poly({0, 0, 0, 1, 0, 0, 1}, order), q4), X);  // q^3 (1+q^3) (q^4;q^4) X
        Series rhs = mul(poly({1, 1, -1}, order), sub(mul(poly({1, 1}, order), q4), q2_1));
        ck.series_equal("q^3(1+q^3)(q^4;q^4) X = (1+q-q^2)((1+q)(q^4;q^4) - (q^2;q))", lhs, rhs, order);
        out.push_back(ck.done(0, order));
    }
    {
        // rational closed form claimed for the DEexact:2 series, cleared:
        // q^3(1+q^3)(1+q^5)(1-q) DEexact:2 = (1+q^5)(q^5-q^3-q^2)
        //   + (1-q)(q^2+2q^3-q^5+2q^8+q^9-q^10) reg4
        Check ck("PROOFS:de2_rational_closed_form", order);
        Series D2x = gen_DE_exact(2, order);
        std::vector<Integer> p1(D2x.coeffs());
        detail::shift_up(p1, 3);
        detail::mul_one_minus(p1, -1, 3);
        detail::mul_one_minus(p1, -1, 5);
        detail::mul_one_minus(p1, 1, 1);
        Series lhs(std::move(p1), order);
        std::vector<Integer> p2(R.coeffs());
        detail::mul_one_minus(p2, 1, 1);
        Series rhs = add(mul(poly({0, 0, -1, -1, 0, 1, 0, -1, -1, 0, 1}, order), Series::one(order)),
                         mul(Series(std::move(p2), order), poly({0, 0, 1, 2, 0, -1, 0, 0, 2, 1, -1}, order)));
        ck.series_equal("cleared rational form vs DEexact:2", lhs, rhs, order);
        out.push_back(ck.done(0, order));
    }
    {
        // rational closed form claimed for the DEgeq:3 series, cleared:
        // q(1-q)(1+q^3)(1+q^5) DEgeq:3 = (-1-3q+3q^2-q^5+q^6) reg4 - 2(q-q^2-q^7) + 1 - q^5
        Check ck("PROOFS:degeq3_rational_closed_form", order);
        Series G3 = gen_DE_geq(3, order);
        std::vector<Integer> p1(G3.coeffs());
        detail::shift_up(p1, 1);
        detail::mul_one_minus(p1, 1, 1);
        detail::mul_one_minus(p1, -1, 3);
        detail::mul_one_minus(p1, -1, 5);
        Series lhs(std::move(p1), order);
        Series rhs = add(mul(poly({-1, -3, 3, 0, 0, -1, 1}, order), R),
                         poly({1, -2, 2, 0, 0, -1, 0, 2}, order));
        ck.series_equal("cleared rational form vs DEgeq:3", lhs, rhs, order);
        out.push_back(ck.done(0, order));
    }
    {
        Check ck("PROOFS:reg4_theta_signed_triangular", order);
        ck.series_equal("reg4 * signed-triangular theta = pronic theta",
                        mul(R, theta(ThetaKind::TriangularSigned, order)),
                        theta(ThetaKind::Pronic, order), order);
        out.push_back(ck.done(0, order));
    }
    {
        Check ck("PROOFS:reg4_theta_alternating_square", order);
        ck.series_equal("reg4 * alternating-square theta = triangular theta",
                        mul(R, theta(ThetaKind::SquareAlt, order)),
                        theta(ThetaKind::Triangular, order), order);
        out.push_back(ck.done(0, order));
    }
    return out;
}

VerificationReport check_listed_congruences() {
    const long order = 10;
    Check ck("LISTED", order);
    Series E = gen_DEe(order);
    Series E1 = gen_DEe_exact(1, order);
    // (n, stated parity of the pair); the second family's n = 0 instance
    // includes the constant boundary term reg4(0)
    const std::pair<long, int> dee_pairs[] = {{2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 1}, {7, 0}};
    const std::pair<long, int> dee1_pairs[] = {{0, 1}, {1, 1}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 1}};
    for (const auto& [n, parity] : dee_pairs) {
        ck.sweep("DEe(n-2) + DEe(n+1) mod 2, n=" + std::to_string(n), n, n,
                 [&](long) { return Integer(parity); },
                 [&](long m) { return Integer((at(E, m - 2) + at(E, m + 1)) % 2); });
    }
    for (const auto& [n, parity] : dee1_pairs) {
        ck.sweep("DEe1(n) + DEe1(n+1) mod 2, n=" + std::to_string(n), n, n,
                 [&](long) { return Integer(parity); },
                 [&](long m) {
                     Integer pair = at(E1, m) + at(E1, m + 1);
                     if (m == 0) pair += 1;
                     return Integer(pair % 2);
                 });
    }
    return ck.done(0, 7, "13 worked instances");
}

VerificationReport check_oracles(long limit) {
    Check ck("ORACLES", limit);
    int families = 0;
    for (const auto& c : all_constraints(4)) {
        Series gen = c.tag == PartitionConstraint::Tag::Reg ? gen_reg(c.param, limit)
                                                            : registry_eval(c.registry_name(), limit);
        Series oracle = oracle_series(c, limit);
        ck.series_equal("enumeration vs generating function for " + c.str(), oracle, gen, limit);
        if (ck.report.verdict == Verdict::Fail) return ck.done(0, limit);
        ++families;
    }
    return ck.done(0, limit, std::to_string(families) + " families");
}

std::vector<VerificationReport> run_classical(long order) {
    std::vector<VerificationReport> out;
    out.push_back(poch_split_check(order));
    out.push_back(qbinomial_check({-1, 1}, {1, 1}, order));
    out.push_back(qbinomial_check({1, 2}, {1, 3}, order));
    out.push_back(qbinomial_check({-1, 2}, {-1, 1}, order));
    out.push_back(asv_check({-1, 2}, {1, 1}, order));
    out.push_back(asv_check({-1, 3}, {1, 2}, order));
    out.push_back(asv_check({1, 3}, {-1, 2}, order));
    out.push_back(lebesgue_check(order));
    out.push_back(jacobi_triple_product_check(-1, 1, 2, order));
    out.push_back(jacobi_triple_product_check(-1, 0, 2, order));
    out.push_back(jacobi_triple_product_check(1, 1, 1, order));
    return out;
}

std::vector<VerificationReport> run_all(long order, long k_max) {
    if (order < 16) throw std::invalid_argument("order must be at least 16");
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    std::vector<VerificationReport> out;
    for (long k = 1; k <= k_max; ++k) out.push_back(check_T1(k, order));
    for (long k = 1; k <= k_max; ++k) out.push_back(check_T2(k, order));
    out.push_back(check_T3_recurrence(order));
    out.push_back(check_T4_recurrence(order));
    out.push_back(check_T5(order));
    out.push_back(check_T6(order));
    out.push_back(check_T7(order));
    out.push_back(check_AB_relations(order));
    out.push_back(check_T8(order));
    out.push_back(check_T10(order));
    out.push_back(check_C12(order));
    out.push_back(check_T14(order));
    out.push_back(check_T15(order));
    out.push_back(check_listed_congruences());
    for (auto& r : check_proof_identities(order)) out.push_back(std::move(r));
    return out;
}

std::vector<std::string> check_ids() {
    return {"T1",  "T2",  "T3",  "T4",     "T5",     "T6",  "T7",
            "AB",  "T8",  "T10", "C12",    "T14",    "T15", "LISTED",
            "PROOFS", "IE2", "QBINOM", "ASV", "LEBESGUE", "JTP", "ORACLES"};
}

std::vector<VerificationReport> run_check(const std::string& id, long order, long k_max,
                                          long oracle_limit) {
    std::vector<VerificationReport> out;
    if (id == "all") {
        out = run_all(order, k_max);
        for (auto& r : run_classical(std::min(order, 100L))) out.push_back(std::move(r));
        out.push_back(check_oracles(oracle_limit));
        return out;
    }
    if (id == "oracles" || id == "ORACLES") return {check_oracles(oracle_limit)};
    if (id == "T1") {
        for (long k = 1; k <= k_max; ++k) out.push_back(check_T1(k, order));
        return out;
    }
    if (id == "T2") {
        for (long k = 1; k <= k_max; ++k) out.push_back(check_T2(k, order));
        return out;
    }
    if (id == "T3") return {check_T3_recurrence(order)};
    if (id == "T4") return {check_T4_recurrence(order)};
    if (id == "T5") return {check_T5(order)};
    if (id == "T6") return {check_T6(order)};
    if (id == "T7") return {check_T7(order)};
    if (id == "AB") return {check_AB_relations(order)};
    if (id == "T8") return {check_T8(order)};
    if (id == "T10") return {check_T10(order)};
    if (id == "C12") return {check_C12(order)};
    if (id == "T14") return {check_T14(order)};
    if (id == "T15") return {check_T15(order)};
    if (id == "LISTED") return {check_listed_congruences()};
    if (id == "PROOFS") return check_proof_identities(order);
    if (id == "IE2") return {poch_split_check(order)};
    if (id == "QBINOM")
        return {qbinomial_check({-1, 1}, {1, 1}, order), qbinomial_check({1, 2}, {1, 3}, order),
                qbinomial_check({-1, 2}, {-1, 1}, order)};
    if (id == "ASV")
        return {asv_check({-1, 2}, {1, 1}, order), asv_check({-1, 3}, {1, 2}, order),
                asv_check({1, 3}, {-1, 2}, order)};
    if (id == "LEBESGUE") return {lebesgue_check(order)};
    if (id == "JTP")
        return {jacobi_triple_product_check(-1, 1, 2, order),
                jacobi_triple_product_check(-1, 0, 2, order),
                jacobi_triple_product_check(1, 1, 1, order)};
    throw std::invalid_argument("unknown check id: " + id);
}

}  // namespace qslab
