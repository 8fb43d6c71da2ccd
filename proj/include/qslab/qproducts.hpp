#pragma once

#include "qslab/report.hpp"
#include "qslab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qslab {

/* (sign*q^a ; q^b)_count with factors (1 - sign*q^{a+jb}); count empty means
 * the infinite product. */
struct PochhammerSymbol {
    int sign = 1;               // sign inside the base
    long base_exp = 0;          // a >= 0
    long step_exp = 1;          // b >= 1
    std::optional<long> count;  // nullopt = infinite

    static PochhammerSymbol finite(int sign, long a, long b, long n) {
        return PochhammerSymbol{sign, a, b, n};
    }
    static PochhammerSymbol infinite(int sign, long a, long b) {
        return PochhammerSymbol{sign, a, b, std::nullopt};
    }
};

Series poch(const PochhammerSymbol& sym, long order);

enum class ThetaKind {
    Phi,               // sum_{k in Z} q^{k^2}
    TriangularSigned,  // sum_{n>=0} (-1)^{ceil(n/2)} q^{n(n+1)/2}
    Triangular,        // sum_{n>=0} q^{n(n+1)/2}
    Pronic,            // sum_{n>=0} q^{n(n+1)}
    SquareAlt,         // sum_{n in Z} (-1)^n q^{2n^2}
};

Series theta(ThetaKind kind, long order);

// Named generating functions of the partition families.
Series gen_reg(long t, long order);    // (q^t;q^t)_inf / (q;q)_inf, t >= 2
Series gen_reg4_gt1(long order);       // (1-q) * gen_reg(4)
Series gen_ped(long order);            // (-q^2;q^2)_inf / (q;q^2)_inf
Series gen_cubic(long order);          // 1 / ((q;q)_inf (q^2;q^2)_inf)
Series gen_DE1(long order);
Series gen_DE2(long order);
Series gen_DE3(long order);
Series gen_DE_geq(long k, long order);
Series gen_DE_exact(long k, long order);
Series gen_DEe(long order);
Series gen_DEe_exact(long k, long order);
Series gen_DEe_geq(long k, long order);

// Registry of named series for the CLI and the expression catalog.
// Parameterized names take the form "DEgeq:3", "DEeExact:2", ...
bool registry_has(const std::string& name);
Series registry_eval(const std::string& name, long order);
std::vector<std::string> registry_names(long k_max = 4);
// expression-language text that must evaluate to the same series
std::string registry_expression(const std::string& name);

struct Monomial {
    int sign = 1;
    long exp = 0;  // sign * q^exp
    std::string str() const;
};

// classical identity checks (PASS/FAIL reports)
VerificationReport poch_split_check(long order);
VerificationReport qbinomial_check(Monomial alpha, Monomial z, long order);
VerificationReport asv_check(Monomial alpha, Monomial beta, long order);
VerificationReport lebesgue_check(long order);
// (Q^2;Q^2)(-zQ;Q^2)(-Q/z;Q^2) = sum_{n in Z} z^n Q^{n^2} under Q=q^base_exp,
// z = z_sign*q^z_exp; requires 0 <= z_exp <= base_exp
VerificationReport jacobi_triple_product_check(int z_sign, long z_exp, long base_exp, long order);

}  // namespace qslab
