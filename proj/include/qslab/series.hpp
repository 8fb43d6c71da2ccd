#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qslab {

using Integer = mpz_class;

/* A formal power series in q truncated at an explicit order N: exactly the
 * coefficients of q^0 .. q^N are stored, always as exact integers. Values are
 * immutable after construction; every operation returns a fresh series and
 * truncates to the minimum order of its inputs. */
class Series {
public:
    // the zero series of the given order
    explicit Series(long order);
    Series(std::vector<Integer> coeffs, long order);

    static Series zero(long order) { return Series(order); }
    static Series one(long order);
    // sign * q^exp, truncated (exp may exceed order)
    static Series monomial(int sign, long exp, long order);
    static Series from_coeffs(const std::vector<Integer>& values, long order);
    static Series from_coeffs(const std::vector<long>& values, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    // coefficient of q^n; n must lie in [0, order]
    const Integer& coeff(long n) const;

    bool is_zero() const;
    // index of the lowest nonzero coefficient, or order+1 for the zero series
    long valuation() const;

    std::string to_string(std::size_t max_terms = 16) const;
    // {"order": N, "coeffs": ["c0", ...]} with decimal-string coefficients
    std::string to_json() const;
    static Series from_json(const std::string& text);

    bool operator==(const Series& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<Integer> coeffs_;  // size order+1
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series neg(const Series& f);
Series mul(const Series& f, const Series& g);

// reciprocal; requires constant coefficient +1 or -1
Series invert(const Series& f);

// multiplication by q^a, a >= 0; order preserved, high coefficients dropped
Series shift(const Series& f, long a);
// division by q^a; requires coefficients 0..a-1 to vanish; order drops by a
Series shift_down(const Series& f, long a);

// every coefficient replaced by its least non-negative residue mod m (m >= 2)
Series reduce_mod(const Series& f, long m);

// f^k for k >= 0
Series pow(const Series& f, long k);
// substitute q -> q^d (d >= 1), truncated at the same order
Series dilate(const Series& f, long d);

struct Mismatch {
    long index = 0;
    Integer lhs;
    Integer rhs;
};
struct CompareResult {
    bool equal = true;
    std::optional<Mismatch> mismatch;
};

// coefficient-wise comparison for exponents 0..n; reports the smallest
// mismatching exponent on failure
CompareResult equal_up_to(const Series& f, const Series& g, long n);

inline Series operator+(const Series& f, const Series& g) { return add(f, g); }
inline Series operator-(const Series& f, const Series& g) { return sub(f, g); }
inline Series operator-(const Series& f) { return neg(f); }
inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }

namespace detail {

/* In-place coefficient-vector kernels. All are exact operations in
 * Z[[q]]/(q^{N+1}) and O(N) each; they are what makes the q-sum evaluators
 * run in O(N) per term. */

// c *= (1 - sign*q^e)
void mul_one_minus(std::vector<Integer>& c, int sign, long e);
// c /= (1 - sign*q^e), e >= 1
void div_one_minus(std::vector<Integer>& c, int sign, long e);
// c *= q^a
void shift_up(std::vector<Integer>& c, long a);

}  // namespace detail

}  // namespace qslab
