#include "qslab/qexpr.hpp"

#include "qslab/qproducts.hpp"

#include <cctype>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

namespace qslab::qexpr {

namespace {

std::string pos_str(Pos p) {
    return "line " + std::to_string(p.line) + ", column " + std::to_string(p.col);
}

}  // namespace

ExprError::ExprError(Kind kind_, const std::string& msg, Pos pos_)
    : std::runtime_error(msg + " (" + pos_str(pos_) + ")"), kind(kind_), pos(pos_) {}

long Affine::eval(const std::map<char, long>& env, Pos pos) const {
    long v = constant;
    for (const auto& [var, coeff] : terms) {
        auto it = env.find(var);
        if (it == env.end()) throw ExprError(ExprError::Kind::Eval, std::string("unbound variable '") + var + "'", pos);
        v += coeff * it->second;
    }
    return v;
}

namespace {

enum class Tok {
    Int, Ident, Q, Poch, Sum, Inf,
    Plus, Minus, Star, Slash, Caret, LParen, RParen, Semi, Comma, End,
};

struct Token {
    Tok kind;
    long value = 0;  // Int
    char name = 0;   // Ident
    Pos pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) bump();
        tok_.pos = Pos{line_, col_};
        if (i_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            std::size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                if (i_ - start > 12) throw ExprError(ExprError::Kind::Lex, "integer literal too large", tok_.pos);
                v = v * 10 + (text_[i_] - '0');
                bump();
            }
            tok_.kind = Tok::Int;
            tok_.value = v;
            return;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string word;
            while (i_ < text_.size() && std::islower(static_cast<unsigned char>(text_[i_]))) {
                word += text_[i_];
                bump();
            }
            if (word == "poch") tok_.kind = Tok::Poch;
            else if (word == "sum") tok_.kind = Tok::Sum;
            else if (word == "inf") tok_.kind = Tok::Inf;
            else if (word == "q") tok_.kind = Tok::Q;
            else if (word.size() == 1) {
                tok_.kind = Tok::Ident;
                tok_.name = word[0];
            } else {
                throw ExprError(ExprError::Kind::Lex, "unknown word '" + word + "'", tok_.pos);
            }
            return;
        }
        bump();
        switch (c) {
            case '+': tok_.kind = Tok::Plus; return;
            case '-': tok_.kind = Tok::Minus; return;
            case '*': tok_.kind = Tok::Star; return;
            case '/': tok_.kind = Tok::Slash; return;
            case '^': tok_.kind = Tok::Caret; return;
            case '(': tok_.kind = Tok::LParen; return;
            case ')': tok_.kind = Tok::RParen; return;
            case ';': tok_.kind = Tok::Semi; return;
            case ',': tok_.kind = Tok::Comma; return;
        }
        throw ExprError(ExprError::Kind::Lex, std::string("unexpected character '") + c + "'", tok_.pos);
    }

    void bump() {
        if (text_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string& text_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    NodePtr run() {
        NodePtr e = expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg, Pos pos) {
        throw ExprError(ExprError::Kind::Parse, msg, pos);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind) fail("expected " + what, lex_.peek().pos);
        return lex_.next();
    }

    bool accept(Tok kind) {
        if (lex_.peek().kind != kind) return false;
        lex_.next();
        return true;
    }

    std::shared_ptr<Node> make(Node::Kind kind, Pos pos) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->pos = pos;
        return n;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Token op = lex_.next();
            auto n = make(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, op.pos);
            n->a = lhs;
            n->b = term();
            lhs = n;
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            Token op = lex_.next();
            auto n = make(op.kind == Tok::Star ? Node::Kind::Mul : Node::Kind::Div, op.pos);
            n->a = lhs;
            n->b = factor();
            lhs = n;
        }
        return lhs;
    }

    NodePtr factor() {
        if (lex_.peek().kind == Tok::Minus) {
            Token op = lex_.next();
            auto n = make(Node::Kind::Neg, op.pos);
            n->a = factor();
            return n;
        }
        NodePtr base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token op = lex_.next();
            auto n = make(Node::Kind::Pow, op.pos);
            n->a = base;
            n->exponent = exponent_spec();
            return n;
        }
        return base;
    }

    // "^" int | "^" "(" affine ")"; the caret itself is already consumed
    Affine exponent_spec() {
        if (accept(Tok::LParen)) {
            Affine a = affine();
            expect(Tok::RParen, "')'");
            return a;
        }
        bool negative = accept(Tok::Minus);
        Token t = expect(Tok::Int, "integer exponent");
        Affine a;
        a.constant = negative ? -t.value : t.value;
        return a;
    }

    NodePtr atom() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Int: {
                lex_.next();
                auto n = make(Node::Kind::IntLit, t.pos);
                n->value = t.value;
                return n;
            }
            case Tok::Q:
                lex_.next();
                return make(Node::Kind::Q, t.pos);
            case Tok::Ident: {
                lex_.next();
                if (!bound(t.name)) fail(std::string("unbound variable '") + t.name + "'", t.pos);
                auto n = make(Node::Kind::Var, t.pos);
                n->var = t.name;
                return n;
            }
            case Tok::LParen: {
                lex_.next();
                NodePtr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Minus: {
                lex_.next();
                auto n = make(Node::Kind::Neg, t.pos);
                n->a = factor();
                return n;
            }
            case Tok::Poch:
                return poch_node();
            case Tok::Sum:
                return sum_node();
            default:
                fail("expected a value", t.pos);
        }
    }

    NodePtr poch_node() {
        Token kw = lex_.next();
        auto n = make(Node::Kind::Poch, kw.pos);
        expect(Tok::LParen, "'('");
        n->poch_sign = accept(Tok::Minus) ? -1 : 1;
        expect(Tok::Q, "'q'");
        if (accept(Tok::Caret)) {
            if (accept(Tok::LParen)) {
                n->poch_base = affine();
                expect(Tok::RParen, "')'");
            } else {
                n->poch_base = affine();
            }
        } else {
            n->poch_base.constant = 1;
        }
        expect(Tok::Semi, "';'");
        expect(Tok::Q, "'q'");
        if (accept(Tok::Caret)) {
            Token s = expect(Tok::Int, "integer step exponent");
            if (s.value < 1) fail("step exponent must be positive", s.pos);
            n->poch_step = s.value;
        } else {
            n->poch_step = 1;
        }
        expect(Tok::Semi, "';'");
        if (accept(Tok::Inf)) {
            n->poch_infinite = true;
        } else if (accept(Tok::LParen)) {
            n->poch_count = affine();
            expect(Tok::RParen, "')'");
        } else {
            n->poch_count = affine();
        }
        expect(Tok::RParen, "')'");
        return n;
    }

    NodePtr sum_node() {
        Token kw = lex_.next();
        auto n = make(Node::Kind::Sum, kw.pos);
        expect(Tok::LParen, "'('");
        Token v = expect(Tok::Ident, "summation variable");
        n->var = v.name;
        expect(Tok::Comma, "','");
        bool neg = accept(Tok::Minus);
        Token lo = expect(Tok::Int, "integer lower bound");
        n->sum_lower = neg ? -lo.value : lo.value;
        expect(Tok::Comma, "','");
        expect(Tok::Inf, "'inf'");
        expect(Tok::Comma, "','");
        scope_.push_back(v.name);
        n->a = expr();
        scope_.pop_back();
        expect(Tok::RParen, "')'");
        return n;
    }

    // int | ident | int '*' ident | ident '*' int, combined with '+'/'-'
    Affine affine() {
        Affine a;
        int sign = 1;
        if (accept(Tok::Minus)) sign = -1;
        affine_term(a, sign);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            sign = lex_.next().kind == Tok::Plus ? 1 : -1;
            affine_term(a, sign);
        }
        return a;
    }

    void affine_term(Affine& a, int sign) {
        Token t = lex_.peek();
        if (t.kind == Tok::Int) {
            lex_.next();
            long coeff = sign * t.value;
            if (accept(Tok::Star)) {
                Token v = expect(Tok::Ident, "variable");
                if (!bound(v.name)) fail(std::string("unbound variable '") + v.name + "'", v.pos);
                add_term(a, v.name, coeff);
            } else {
                a.constant += coeff;
            }
            return;
        }
        if (t.kind == Tok::Ident) {
            lex_.next();
            if (!bound(t.name)) fail(std::string("unbound variable '") + t.name + "'", t.pos);
            long coeff = sign;
            if (accept(Tok::Star)) {
                Token c = expect(Tok::Int, "integer coefficient");
                coeff = sign * c.value;
            }
            add_term(a, t.name, coeff);
            return;
        }
        fail("expected an affine term", t.pos);
    }

    static void add_term(Affine& a, char var, long coeff) {
        for (auto& [v, c] : a.terms) {
            if (v == var) {
                c += coeff;
                return;
            }
        }
        a.terms.emplace_back(var, coeff);
    }

    bool bound(char v) const {
        for (char s : scope_)
            if (s == v) return true;
        return false;
    }

    Lexer lex_;
    std::vector<char> scope_;
};

using Env = std::map<char, long>;

Series eval_node(const NodePtr& n, Env& env, long order);

Series eval_sum(const Node& n, Env& env, long order) {
    std::optional<long> shadowed;
    if (auto it = env.find(n.var); it != env.end()) shadowed = it->second;

    Series acc = Series::zero(order);
    std::vector<long> vals;
    long slope = 0;
    long index = n.sum_lower;
    for (;;) {
        env[n.var] = index;
        Series t = eval_node(n.a, env, order);
        acc = add(acc, t);
        long v = t.is_zero() ? order + 1 : t.valuation();
        if (v > order) break;  // the series has left the truncation window
        vals.push_back(v);
        if (vals.size() >= 2 && vals[vals.size() - 1] <= vals[vals.size() - 2])
            throw ExprError(ExprError::Kind::Eval,
                            "sum does not terminate: term valuation fails to increase", n.pos);
        if (vals.size() == 3) {
            long d1 = vals[1] - vals[0];
            long d2 = vals[2] - vals[1];
            if (d1 != d2)
                throw ExprError(ExprError::Kind::Eval,
                                "sum valuation is not affine in the summation variable", n.pos);
            slope = d1;
        }
        // after the probe, trust the affine valuation for the iteration bound
        if (vals.size() >= 3 && vals[0] + slope * static_cast<long>(vals.size()) > order) break;
        ++index;
    }
    if (shadowed)
        env[n.var] = *shadowed;
    else
        env.erase(n.var);
    return acc;
}

Series eval_node(const NodePtr& np, Env& env, long order) {
    const Node& n = *np;
    switch (n.kind) {
        case Node::Kind::IntLit: {
            std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
            c[0] = n.value;
            return Series(std::move(c), order);
        }
        case Node::Kind::Q:
            return Series::monomial(1, 1, order);
        case Node::Kind::Var: {
            auto it = env.find(n.var);
            if (it == env.end())
                throw ExprError(ExprError::Kind::Eval, std::string("unbound variable '") + n.var + "'", n.pos);
            std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
            c[0] = it->second;
            return Series(std::move(c), order);
        }
        case Node::Kind::Neg:
            return neg(eval_node(n.a, env, order));
        case Node::Kind::Add:
            return add(eval_node(n.a, env, order), eval_node(n.b, env, order));
        case Node::Kind::Sub:
            return sub(eval_node(n.a, env, order), eval_node(n.b, env, order));
        case Node::Kind::Mul:
            return mul(eval_node(n.a, env, order), eval_node(n.b, env, order));
        case Node::Kind::Div: {
            Series num = eval_node(n.a, env, order);
            Series den = eval_node(n.b, env, order);
            if (den.coeff(0) != 1 && den.coeff(0) != -1)
                throw ExprError(ExprError::Kind::Eval, "division by a non-unit series", n.pos);
            return mul(num, invert(den));
        }
        case Node::Kind::Pow: {
            long e = n.exponent.eval(env, n.pos);
            if (e < 0)
                throw ExprError(ExprError::Kind::Eval,
                                "negative exponent " + std::to_string(e) + " after instantiation", n.pos);
            if (n.a->kind == Node::Kind::Q) return Series::monomial(1, e, order);
            Series base = eval_node(n.a, env, order);
            // binary powering; truncation keeps every step at the same order
            Series result = Series::one(order);
            Series sq = base;
            long m = e;
            while (m > 0) {
                if (m & 1) result = mul(result, sq);
                m >>= 1;
                if (m) sq = mul(sq, sq);
            }
            return result;
        }
        case Node::Kind::Poch: {
            long a = n.poch_base.eval(env, n.pos);
            if (a < 0)
                throw ExprError(ExprError::Kind::Eval,
                                "negative base exponent " + std::to_string(a) + " after instantiation", n.pos);
            PochhammerSymbol sym;
            sym.sign = n.poch_sign;
            sym.base_exp = a;
            sym.step_exp = n.poch_step;
            if (!n.poch_infinite) {
                long cnt = n.poch_count.eval(env, n.pos);
                if (cnt < 0)
                    throw ExprError(ExprError::Kind::Eval,
                                    "negative subscript " + std::to_string(cnt) + " after instantiation", n.pos);
                sym.count = cnt;
            }
            try {
                return poch(sym, order);
            } catch (const std::exception& e) {
                throw ExprError(ExprError::Kind::Eval, e.what(), n.pos);
            }
        }
        case Node::Kind::Sum:
            return eval_sum(n, env, order);
    }
    throw ExprError(ExprError::Kind::Eval, "malformed expression tree", n.pos);
}

}  // namespace

NodePtr parse(const std::string& text) { return Parser(text).run(); }

Series eval(const NodePtr& ast, long order) {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    Env env;
    return eval_node(ast, env, order);
}

Series eval_text(const std::string& text, long order) { return eval(parse(text), order); }

VerificationReport check_identity(const std::string& lhs_text, const std::string& rhs_text,
                                  long order) {
    auto t0 = std::chrono::steady_clock::now();
    auto tagged = [](const char* side, const std::function<Series()>& f) {
        try {
            return f();
        } catch (const ExprError& e) {
            throw std::invalid_argument(std::string(side) + ": " + e.what());
        }
    };
    Series lhs = tagged("lhs", [&] { return eval_text(lhs_text, order); });
    Series rhs = tagged("rhs", [&] { return eval_text(rhs_text, order); });

    VerificationReport r;
    r.check_id = "IDENTITY";
    r.order_checked = order;
    r.range_hi = order;
    auto cmp = equal_up_to(lhs, rhs, order);
    if (!cmp.equal) {
        r.verdict = Verdict::Fail;
        r.first_failure =
            FirstFailure{cmp.mismatch->index, cmp.mismatch->rhs.get_str(), cmp.mismatch->lhs.get_str()};
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

}  // namespace qslab::qexpr
