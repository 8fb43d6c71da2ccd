#pragma once

#include "qslab/report.hpp"
#include "qslab/series.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qslab::qexpr {

struct Pos {
    int line = 1;
    int col = 1;
};

class ExprError : public std::runtime_error {
public:
    enum class Kind { Lex, Parse, Eval };

    ExprError(Kind kind, const std::string& msg, Pos pos);
    Kind kind;
    Pos pos;
};

// integer-linear combination of bound identifiers plus a constant
struct Affine {
    long constant = 0;
    std::vector<std::pair<char, long>> terms;

    long eval(const std::map<char, long>& env, Pos pos) const;
    bool is_constant() const { return terms.empty(); }
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { IntLit, Q, Var, Neg, Add, Sub, Mul, Div, Pow, Poch, Sum };

    Kind kind;
    Pos pos;
    long value = 0;  // IntLit
    char var = 0;    // Var name / Sum variable
    NodePtr a, b;    // operands; Pow base and Sum body live in `a`
    Affine exponent;  // Pow

    int poch_sign = 1;
    Affine poch_base;       // exponent of the base monomial
    long poch_step = 1;     // positive literal
    bool poch_infinite = false;
    Affine poch_count;

    long sum_lower = 0;
};

/* Grammar (whitespace insensitive; identifiers are single lowercase letters
 * other than q, and must be bound by an enclosing sum):
 *   expr   := term (("+"|"-") term)*
 *   term   := factor (("*"|"/") factor)*
 *   factor := atom ("^" "(" affine ")" | "^" int)?
 *   atom   := int | "q" | "(" expr ")" | "-" atom | poch | sum
 *   poch   := "poch" "(" ["-"] "q" ["^" affineOrInt] ";" "q" ["^" int] ";"
 *             (affineOrInt | "inf") ")"
 *   sum    := "sum" "(" ident "," int "," "inf" "," expr ")"
 * A leading minus negates the whole factor, so -q^2 reads as -(q^2). */
NodePtr parse(const std::string& text);

Series eval(const NodePtr& ast, long order);
Series eval_text(const std::string& text, long order);

// equal_up_to comparison of two expression texts; parse/eval errors are
// rethrown with an "lhs:" / "rhs:" tag
VerificationReport check_identity(const std::string& lhs_text, const std::string& rhs_text,
                                  long order);

}  // namespace qslab::qexpr
