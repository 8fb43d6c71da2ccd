#include "qslab/qproducts.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qslab {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

VerificationReport make_report(std::string id, long order, Clock::time_point t0,
                               const CompareResult& cmp, std::string note = {}) {
    VerificationReport r;
    r.check_id = std::move(id);
    r.order_checked = order;
    r.range_hi = order;
    r.note = std::move(note);
    if (cmp.equal) {
        r.verdict = Verdict::Pass;
    } else {
        r.verdict = Verdict::Fail;
        r.first_failure = FirstFailure{cmp.mismatch->index, cmp.mismatch->rhs.get_str(),
                                       cmp.mismatch->lhs.get_str()};
    }
    r.runtime_ms = ms_since(t0);
    return r;
}

}  // namespace

Series poch(const PochhammerSymbol& sym, long order) {
    if (sym.step_exp < 1) throw std::invalid_argument("pochhammer step must be positive");
    if (sym.base_exp < 0) throw std::invalid_argument("pochhammer base exponent must be non-negative");
    if (sym.sign != 1 && sym.sign != -1) throw std::invalid_argument("pochhammer sign must be +-1");
    if (sym.count && *sym.count < 0) throw std::invalid_argument("pochhammer count must be non-negative");
    bool has_factor = !sym.count || *sym.count > 0;
    if (has_factor && sym.base_exp == 0 && sym.sign == 1)
        throw std::domain_error("pochhammer symbol (q^0;...) contains the zero factor 1-1");

    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long j = 0;; ++j) {
        if (sym.count && j >= *sym.count) break;
        long e = sym.base_exp + j * sym.step_exp;
        if (e > order) break;  // all remaining factors are 1 mod q^{order+1}
        if (e == 0) {
            // sign is -1 here: the factor is (1+1) = 2
            for (auto& x : c) x *= 2;
            continue;
        }
        detail::mul_one_minus(c, sym.sign, e);
    }
    return Series(std::move(c), order);
}

Series theta(ThetaKind kind, long order) {
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    switch (kind) {
        case ThetaKind::Phi:
            c[0] = 1;
            for (long k = 1; k * k <= order; ++k) c[k * k] += 2;
            break;
        case ThetaKind::TriangularSigned:
            for (long n = 0; n * (n + 1) / 2 <= order; ++n)
                c[n * (n + 1) / 2] += ((n + 1) / 2) % 2 ? -1 : 1;
            break;
        case ThetaKind::Triangular:
            for (long n = 0; n * (n + 1) / 2 <= order; ++n) c[n * (n + 1) / 2] += 1;
            break;
        case ThetaKind::Pronic:
            for (long n = 0; n * (n + 1) <= order; ++n) c[n * (n + 1)] += 1;
            break;
        case ThetaKind::SquareAlt:
            c[0] = 1;
            for (long n = 1; 2 * n * n <= order; ++n) c[2 * n * n] += (n % 2) ? -2 : 2;
            break;
    }
    return Series(std::move(c), order);
}

Series gen_reg(long t, long order) {
    if (t < 2) throw std::invalid_argument("regular-partition parameter must be at least 2");
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long j = 1; j <= order; ++j) detail::div_one_minus(c, 1, j);
    for (long j = t; j <= order; j += t) detail::mul_one_minus(c, 1, j);
    return Series(std::move(c), order);
}

Series gen_reg4_gt1(long order) {
    // removing the part-1 factor from the 4-regular product
    Series r = gen_reg(4, order);
    std::vector<Integer> c(r.coeffs());
    detail::mul_one_minus(c, 1, 1);
    return Series(std::move(c), order);
}

Series gen_ped(long order) {
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long j = 2; j <= order; j += 2) detail::mul_one_minus(c, -1, j);
    for (long j = 1; j <= order; j += 2) detail::div_one_minus(c, 1, j);
    return Series(std::move(c), order);
}

Series gen_cubic(long order) {
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long j = 1; j <= order; ++j) detail::div_one_minus(c, 1, j);
    for (long j = 2; j <= order; j += 2) detail::div_one_minus(c, 1, j);
    return Series(std::move(c), order);
}

namespace {

/* sum_{n>=0} (-q^2;q^2)_n q^{alpha*n+beta} / (q;q^2)_{n+d} with d in {0,1}.
 * The term ratio is (1+q^{2n+2}) q^alpha / (1-q^{2(n+d)+1}), so each further
 * term costs O(order). Terms stop once their minimal exponent alpha*n+beta
 * passes the order. */
Series de_family_sum(long alpha, long beta, int d, long order) {
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
    std::vector<Integer> term(static_cast<std::size_t>(order) + 1);
    term[0] = 1;
    if (d == 1) detail::div_one_minus(term, 1, 1);
    detail::shift_up(term, beta);
    for (long n = 0;; ++n) {
        long expo = alpha * n + beta;
        if (expo > order) break;
        for (long i = expo; i <= order; ++i) acc[i] += term[i];
        detail::mul_one_minus(term, -1, 2 * n + 2);
        detail::div_one_minus(term, 1, 2 * (n + d) + 1);
        detail::shift_up(term, alpha);
    }
    return Series(std::move(acc), order);
}

}  // namespace

Series gen_DE1(long order) { return de_family_sum(2, 1, 1, order); }
Series gen_DE2(long order) { return de_family_sum(4, 2, 1, order); }
Series gen_DE3(long order) { return de_family_sum(2, 1, 0, order); }

Series gen_DE_geq(long k, long order) {
    if (k < 1) throw std::invalid_argument("multiplicity parameter must be at least 1");
    return de_family_sum(2 * k, k, 1, order);
}

Series gen_DE_exact(long k, long order) {
    if (k < 1) throw std::invalid_argument("multiplicity parameter must be at least 1");
    return de_family_sum(2 * k, k, 0, order);
}

Series gen_DEe(long order) { return de_family_sum(2, 0, 0, order); }

Series gen_DEe_exact(long k, long order) {
    if (k < 1) throw std::invalid_argument("multiplicity parameter must be at least 1");
    return de_family_sum(2 * k, 2 * k, 1, order);
}

Series gen_DEe_geq(long k, long order) {
    if (k < 1) throw std::invalid_argument("multiplicity parameter must be at least 1");
    return de_family_sum(2 * k, 0, 0, order);
}

namespace {

bool split_param(const std::string& name, const std::string& prefix, long& k) {
    if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != ':')
        return false;
    try {
        std::size_t used = 0;
        std::string tail = name.substr(prefix.size() + 1);
        k = std::stol(tail, &used);
        return used == tail.size() && k >= 1;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

bool registry_has(const std::string& name) {
    long k;
    return name == "reg4" || name == "ped" || name == "cubic" || name == "DE1" ||
           name == "DE2" || name == "DE3" || name == "DEe" || name == "reg4gt1" ||
           split_param(name, "DEgeq", k) || split_param(name, "DEexact", k) ||
           split_param(name, "DEeExact", k) || split_param(name, "DEeGeq", k);
}

Series registry_eval(const std::string& name, long order) {
    long k;
    if (name == "reg4") return gen_reg(4, order);
    if (name == "ped") return gen_ped(order);
    if (name == "cubic") return gen_cubic(order);
    if (name == "DE1") return gen_DE1(order);
    if (name == "DE2") return gen_DE2(order);
    if (name == "DE3") return gen_DE3(order);
    if (name == "DEe") return gen_DEe(order);
    if (name == "reg4gt1") return gen_reg4_gt1(order);
    if (split_param(name, "DEgeq", k)) return gen_DE_geq(k, order);
    if (split_param(name, "DEexact", k)) return gen_DE_exact(k, order);
    if (split_param(name, "DEeExact", k)) return gen_DEe_exact(k, order);
    if (split_param(name, "DEeGeq", k)) return gen_DEe_geq(k, order);
    throw std::invalid_argument("unknown series name: " + name);
}

std::vector<std::string> registry_names(long k_max) {
    std::vector<std::string> out = {"reg4", "ped", "cubic", "DE1", "DE2", "DE3", "DEe", "reg4gt1"};
    for (long k = 1; k <= k_max; ++k) out.push_back("DEgeq:" + std::to_string(k));
    for (long k = 1; k <= k_max; ++k) out.push_back("DEexact:" + std::to_string(k));
    for (long k = 1; k <= k_max; ++k) out.push_back("DEeExact:" + std::to_string(k));
    for (long k = 1; k <= k_max; ++k) out.push_back("DEeGeq:" + std::to_string(k));
    return out;
}

std::string registry_expression(const std::string& name) {
    long k;
    auto de_sum = [](long a, long b, int d) {
        // sum(n, 0, inf, poch(-q^2;q^2;n) * q^(a*n+b) / poch(q;q^2;n[+1]))
        std::ostringstream os;
        os << "sum(n, 0, inf, poch(-q^2; q^2; n) * q^(";
        os << a << "*n";
        if (b != 0) os << " + " << b;
        os << ") / poch(q; q^2; " << (d ? "n + 1" : "n") << "))";
        return os.str();
    };
    if (name == "reg4") return "poch(q^4; q^4; inf) / poch(q; q; inf)";
    if (name == "ped") return "poch(-q^2; q^2; inf) / poch(q; q^2; inf)";
    if (name == "cubic") return "1 / (poch(q; q; inf) * poch(q^2; q^2; inf))";
    if (name == "reg4gt1") return "(1 - q) * poch(q^4; q^4; inf) / poch(q; q; inf)";
    if (name == "DE1") return de_sum(2, 1, 1);
    if (name == "DE2") return de_sum(4, 2, 1);
    if (name == "DE3") return de_sum(2, 1, 0);
    if (name == "DEe") return de_sum(2, 0, 0);
    if (split_param(name, "DEgeq", k)) return de_sum(2 * k, k, 1);
    if (split_param(name, "DEexact", k)) return de_sum(2 * k, k, 0);
    if (split_param(name, "DEeExact", k)) return de_sum(2 * k, 2 * k, 1);
    if (split_param(name, "DEeGeq", k)) return de_sum(2 * k, 0, 0);
    throw std::invalid_argument("unknown series name: " + name);
}

std::string Monomial::str() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    if (exp == 0)
        os << "1";
    else if (exp == 1)
        os << "q";
    else
        os << "q^" << exp;
    return os.str();
}

VerificationReport poch_split_check(long order) {
    auto t0 = Clock::now();
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    CompareResult cmp;
    std::string note;
    for (int sign : {1, -1}) {
        for (long a : {1L, 2L, 3L}) {
            // (alpha;q)_{n+m} = (alpha;q)_m (alpha q^m;q)_n
            for (long m = 0; m <= 3 && cmp.equal; ++m) {
                for (long n = 0; n <= 3 && cmp.equal; ++n) {
                    Series lhs = poch(PochhammerSymbol::finite(sign, a, 1, n + m), order);
                    Series rhs = mul(poch(PochhammerSymbol::finite(sign, a, 1, m), order),
                                     poch(PochhammerSymbol::finite(sign, a + m, 1, n), order));
                    cmp = equal_up_to(lhs, rhs, order);
                    if (!cmp.equal) note = "finite split, alpha=" + Monomial{sign, a}.str();
                }
            }
            // (alpha;q)_inf = (alpha;q)_n (alpha q^n;q)_inf
            for (long n = 1; n <= 3 && cmp.equal; ++n) {
                Series lhs = poch(PochhammerSymbol::infinite(sign, a, 1), order);
                Series rhs = mul(poch(PochhammerSymbol::finite(sign, a, 1, n), order),
                                 poch(PochhammerSymbol::infinite(sign, a + n, 1), order));
                cmp = equal_up_to(lhs, rhs, order);
                if (!cmp.equal) note = "tail split, alpha=" + Monomial{sign, a}.str();
            }
            // (alpha;q)_inf = (alpha;q^2)_inf (alpha q;q^2)_inf
            if (cmp.equal) {
                Series lhs = poch(PochhammerSymbol::infinite(sign, a, 1), order);
                Series rhs = mul(poch(PochhammerSymbol::infinite(sign, a, 2), order),
                                 poch(PochhammerSymbol::infinite(sign, a + 1, 2), order));
                cmp = equal_up_to(lhs, rhs, order);
                if (!cmp.equal) note = "even/odd split, alpha=" + Monomial{sign, a}.str();
            }
            if (!cmp.equal)
                return make_report("IE2", order, t0, cmp, note);
        }
    }
    return make_report("IE2", order, t0, cmp, "alpha in {+-q, +-q^2, +-q^3}");
}

VerificationReport qbinomial_check(Monomial alpha, Monomial z, long order) {
    auto t0 = Clock::now();
    if (z.exp < 1) throw std::invalid_argument("q-binomial argument z must have positive valuation");
    if (alpha.exp < 1) throw std::invalid_argument("q-binomial parameter alpha must have positive valuation");
    // sum_n (alpha;q)_n / (q;q)_n z^n
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
    std::vector<Integer> term(static_cast<std::size_t>(order) + 1);
    term[0] = 1;
    for (long n = 0; n * z.exp <= order; ++n) {
        for (long i = n * z.exp; i <= order; ++i) acc[i] += term[i];
        detail::mul_one_minus(term, alpha.sign, alpha.exp + n);
        detail::shift_up(term, z.exp);
        if (z.sign < 0)
            for (auto& x : term) x = -x;
        detail::div_one_minus(term, 1, n + 1);
    }
    Series lhs(std::move(acc), order);
    Series rhs = mul(poch(PochhammerSymbol::infinite(alpha.sign * z.sign, alpha.exp + z.exp, 1), order),
                     invert(poch(PochhammerSymbol::infinite(z.sign, z.exp, 1), order)));
    return make_report("QBINOM[alpha=" + alpha.str() + ",z=" + z.str() + "]", order, t0,
                       equal_up_to(lhs, rhs, order));
}

VerificationReport asv_check(Monomial alpha, Monomial beta, long order) {
    auto t0 = Clock::now();
    if (alpha.exp < 1 || beta.exp < 1)
        throw std::invalid_argument("asv parameters must have positive valuation");
    // sum_{n>=0} (alpha;q)_n / (beta;q)_n q^n; the term ratio is
    // (1 - s_a q^{e_a+n}) q / (1 - s_b q^{e_b+n})
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
    std::vector<Integer> term(static_cast<std::size_t>(order) + 1);
    term[0] = 1;
    for (long n = 0; n <= order; ++n) {
        for (long i = n; i <= order; ++i) acc[i] += term[i];
        detail::mul_one_minus(term, alpha.sign, alpha.exp + n);
        detail::shift_up(term, 1);
        detail::div_one_minus(term, beta.sign, beta.exp + n);
    }
    Series sum(std::move(acc), order);

    // cleared of denominators: sum * (beta - alpha q) * (beta;q)_inf
    //                          = q (alpha;q)_inf + (beta - q)(beta;q)_inf
    Series beta_inf = poch(PochhammerSymbol::infinite(beta.sign, beta.exp, 1), order);
    Series beta_minus_alpha_q =
        sub(Series::monomial(beta.sign, beta.exp, order), Series::monomial(alpha.sign, alpha.exp + 1, order));
    Series beta_minus_q =
        sub(Series::monomial(beta.sign, beta.exp, order), Series::monomial(1, 1, order));
    Series lhs = mul(sum, mul(beta_minus_alpha_q, beta_inf));
    Series rhs = add(shift(poch(PochhammerSymbol::infinite(alpha.sign, alpha.exp, 1), order), 1),
                     mul(beta_minus_q, beta_inf));
    return make_report("ASV[alpha=" + alpha.str() + ",beta=" + beta.str() + "]", order, t0,
                       equal_up_to(lhs, rhs, order));
}

VerificationReport lebesgue_check(long order) {
    auto t0 = Clock::now();
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    Series lhs = mul(poch(PochhammerSymbol::infinite(-1, 2, 2), order),
                     poch(PochhammerSymbol::infinite(-1, 1, 1), order));
    Series rhs = mul(poch(PochhammerSymbol::infinite(1, 4, 4), order),
                     invert(poch(PochhammerSymbol::infinite(1, 1, 1), order)));
    return make_report("LEBESGUE", order, t0, equal_up_to(lhs, rhs, order));
}

VerificationReport jacobi_triple_product_check(int z_sign, long z_exp, long base_exp, long order) {
    auto t0 = Clock::now();
    if (base_exp < 1) throw std::invalid_argument("base exponent must be positive");
    if (z_exp < 0 || z_exp > base_exp)
        throw std::invalid_argument("specialization would produce negative exponents");
    if (z_sign == -1 && z_exp == base_exp)
        throw std::domain_error("specialization hits the zero factor of the triple product");
    long b = base_exp;
    Series lhs = mul(poch(PochhammerSymbol::infinite(1, 2 * b, 2 * b), order),
                     mul(poch(PochhammerSymbol::infinite(-z_sign, z_exp + b, 2 * b), order),
                         poch(PochhammerSymbol::infinite(-z_sign, b - z_exp, 2 * b), order)));
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    for (long n = -order - 1; n <= order + 1; ++n) {
        long e = b * n * n + z_exp * n;
        if (e >= 0 && e <= order) c[e] += (n % 2 != 0) ? z_sign : 1;
    }
    Series rhs(std::move(c), order);
    std::ostringstream id;
    id << "JTP[z=" << Monomial{z_sign, z_exp}.str() << ",base=q^" << b << "]";
    return make_report(id.str(), order, t0, equal_up_to(lhs, rhs, order));
}

}  // namespace qslab
