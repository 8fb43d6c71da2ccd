#include "qslab/series.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace qslab {

Series::Series(long order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

Series::Series(std::vector<Integer> coeffs, long order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs.resize(static_cast<std::size_t>(order) + 1);
    coeffs_ = std::move(coeffs);
}

Series Series::one(long order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(int sign, long exp, long order) {
    if (exp < 0) throw std::invalid_argument("monomial exponent must be non-negative");
    Series s(order);
    if (exp <= order) s.coeffs_[static_cast<std::size_t>(exp)] = sign;
    return s;
}

Series Series::from_coeffs(const std::vector<Integer>& values, long order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    if (static_cast<long>(values.size()) > order + 1)
        throw std::invalid_argument("more coefficients than order+1");
    std::vector<Integer> c(values);
    return Series(std::move(c), order);
}

Series Series::from_coeffs(const std::vector<long>& values, long order) {
    std::vector<Integer> c;
    c.reserve(values.size());
    for (long v : values) c.emplace_back(v);
    return from_coeffs(c, order);
}

const Integer& Series::coeff(long n) const {
    if (n < 0 || n > order()) throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

bool Series::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

long Series::valuation() const {
    for (long i = 0; i <= order(); ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    return order() + 1;
}

std::string Series::to_string(std::size_t max_terms) const {
    std::ostringstream os;
    std::size_t printed = 0;
    for (long i = 0; i <= order(); ++i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (printed == max_terms) {
            os << " + ...";
            return os.str();
        }
        if (printed == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Integer a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        ++printed;
    }
    if (printed == 0) os << "0";
    return os.str();
}

std::string Series::to_json() const {
    nlohmann::ordered_json j;
    j["order"] = order();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_) arr.push_back(c.get_str());
    j["coeffs"] = arr;
    return j.dump();
}

Series Series::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    long order = j.at("order").get<long>();
    std::vector<Integer> c;
    for (const auto& s : j.at("coeffs")) c.emplace_back(s.get<std::string>(), 10);
    if (static_cast<long>(c.size()) != order + 1)
        throw std::invalid_argument("coeffs length does not match order+1");
    return Series(std::move(c), order);
}

static long min_order(const Series& f, const Series& g) {
    return std::min(f.order(), g.order());
}

Series add(const Series& f, const Series& g) {
    long n = min_order(f, g);
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[i] = f.coeff(i) + g.coeff(i);
    return Series(std::move(c), n);
}

Series sub(const Series& f, const Series& g) {
    long n = min_order(f, g);
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[i] = f.coeff(i) - g.coeff(i);
    return Series(std::move(c), n);
}

Series neg(const Series& f) {
    std::vector<Integer> c(f.coeffs());
    for (auto& x : c) x = -x;
    return Series(std::move(c), f.order());
}

Series mul(const Series& f, const Series& g) {
    long n = min_order(f, g);
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        const Integer& fi = f.coeff(i);
        if (fi == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            const Integer& gj = g.coeff(j);
            if (gj != 0) c[static_cast<std::size_t>(i + j)] += fi * gj;
        }
    }
    return Series(std::move(c), n);
}

Series invert(const Series& f) {
    const Integer& f0 = f.coeff(0);
    if (f0 != 1 && f0 != -1)
        throw std::domain_error("series is not invertible over the integers (constant term must be +-1)");
    long n = f.order();
    std::vector<Integer> g(static_cast<std::size_t>(n) + 1);
    g[0] = f0;  // 1/(+-1) = +-1
    for (long m = 1; m <= n; ++m) {
        Integer acc = 0;
        for (long j = 1; j <= m; ++j) {
            const Integer& fj = f.coeff(j);
            if (fj != 0) acc += fj * g[static_cast<std::size_t>(m - j)];
        }
        g[static_cast<std::size_t>(m)] = -f0 * acc;
    }
    return Series(std::move(g), n);
}

Series shift(const Series& f, long a) {
    if (a < 0)
        throw std::invalid_argument("shift exponent must be non-negative (use shift_down for division by q)");
    long n = f.order();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i + a <= n; ++i) c[static_cast<std::size_t>(i + a)] = f.coeff(i);
    return Series(std::move(c), n);
}

Series shift_down(const Series& f, long a) {
    if (a < 0) throw std::invalid_argument("shift_down exponent must be non-negative");
    if (a > f.order()) throw std::invalid_argument("shift_down exponent exceeds order");
    for (long i = 0; i < a; ++i)
        if (f.coeff(i) != 0)
            throw std::domain_error("shift_down requires the low coefficients to vanish");
    long n = f.order() - a;
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f.coeff(i + a);
    return Series(std::move(c), n);
}

Series reduce_mod(const Series& f, long m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    std::vector<Integer> c(f.coeffs());
    Integer mm(m);
    for (auto& x : c) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
        x = r;
    }
    return Series(std::move(c), f.order());
}

Series pow(const Series& f, long k) {
    if (k < 0) throw std::invalid_argument("series exponent must be non-negative");
    Series acc = Series::one(f.order());
    for (long i = 0; i < k; ++i) acc = mul(acc, f);
    return acc;
}

Series dilate(const Series& f, long d) {
    if (d < 1) throw std::invalid_argument("dilation step must be positive");
    long n = f.order();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i * d <= n; ++i) c[static_cast<std::size_t>(i * d)] = f.coeff(i);
    return Series(std::move(c), n);
}

CompareResult equal_up_to(const Series& f, const Series& g, long n) {
    if (n > std::min(f.order(), g.order()))
        throw std::invalid_argument("comparison bound exceeds series order");
    for (long i = 0; i <= n; ++i) {
        if (f.coeff(i) != g.coeff(i)) {
            return CompareResult{false, Mismatch{i, f.coeff(i), g.coeff(i)}};
        }
    }
    return CompareResult{};
}

namespace detail {

void mul_one_minus(std::vector<Integer>& c, int sign, long e) {
    long n = static_cast<long>(c.size()) - 1;
    if (e > n) return;
    if (e == 0) throw std::invalid_argument("degenerate factor 1 - sign*q^0");
    if (sign > 0) {
        for (long i = n; i >= e; --i) c[i] -= c[i - e];
    } else {
        for (long i = n; i >= e; --i) c[i] += c[i - e];
    }
}

void div_one_minus(std::vector<Integer>& c, int sign, long e) {
    long n = static_cast<long>(c.size()) - 1;
    if (e > n) return;
    if (e == 0) throw std::invalid_argument("degenerate divisor 1 - sign*q^0");
    if (sign > 0) {
        for (long i = e; i <= n; ++i) c[i] += c[i - e];
    } else {
        for (long i = e; i <= n; ++i) c[i] -= c[i - e];
    }
}

void shift_up(std::vector<Integer>& c, long a) {
    long n = static_cast<long>(c.size()) - 1;
    if (a == 0) return;
    for (long i = n; i >= a; --i) c[i] = c[i - a];
    for (long i = 0; i < a && i <= n; ++i) c[i] = 0;
}

}  // namespace detail

}  // namespace qslab
