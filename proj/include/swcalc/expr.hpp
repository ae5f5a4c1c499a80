#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bundles.hpp"
#include "errors.hpp"
#include "graded.hpp"
#include "rational.hpp"
#include "spaces.hpp"

namespace swcalc {

/// AST for the expression language. Nodes are immutable and shared freely.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        rational_lit, // lit
        generator,    // name
        add,          // lhs, rhs
        sub,          // lhs, rhs
        mul,          // lhs, rhs
        div,          // lhs, rhs (lowered to mul-by-inverse at evaluation)
        neg,          // lhs
        pow,          // lhs ^ k (literal integer exponent, negative allowed)
        exp_fn,       // exp(lhs)
        integrate_fn, // integrate(lhs)
        degree_fn     // degree(lhs, k)
    };

    Kind kind;
    Rational lit;
    std::string name;
    ExprPtr lhs;
    ExprPtr rhs;
    long k = 0;
};

inline ExprPtr make_lit(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::rational_lit;
    e->lit = std::move(v);
    return e;
}

inline ExprPtr make_generator(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::generator;
    e->name = std::move(name);
    return e;
}

inline ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

inline ExprPtr make_neg(ExprPtr operand) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::neg;
    e->lhs = std::move(operand);
    return e;
}

inline ExprPtr make_pow(ExprPtr base, long k) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::pow;
    e->lhs = std::move(base);
    e->k = k;
    return e;
}

inline ExprPtr make_call(Expr::Kind kind, ExprPtr arg, long k = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(arg);
    e->k = k;
    return e;
}

inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b)
        return a == b;
    if (a->kind != b->kind || a->lit != b->lit || a->name != b->name || a->k != b->k)
        return false;
    return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

namespace detail {

enum class TokKind { integer, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    TokKind kind;
    std::size_t offset;
    std::string text;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({TokKind::integer, start, src.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '.'))
                ++i;
            out.push_back({TokKind::ident, start, src.substr(start, i - start)});
            continue;
        }
        TokKind k;
        switch (c) {
        case '+': k = TokKind::plus; break;
        case '-': k = TokKind::minus; break;
        case '*': k = TokKind::star; break;
        case '/': k = TokKind::slash; break;
        case '^': k = TokKind::caret; break;
        case '(': k = TokKind::lparen; break;
        case ')': k = TokKind::rparen; break;
        case ',': k = TokKind::comma; break;
        default:
            throw parse_error(i, "a valid token (got '" + std::string(1, c) + "')");
        }
        out.push_back({k, i, std::string(1, c)});
        ++i;
    }
    out.push_back({TokKind::end, src.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        if (peek().kind != TokKind::end)
            throw parse_error(peek().offset, "an operator or end of input");
        return e;
    }

private:
    static constexpr const char* atom_expected =
        "an integer literal, a rational literal, a generator, '(', 'exp(', 'integrate(', or 'degree('";

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(TokKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(TokKind k, const char* what) {
        if (!accept(k))
            throw parse_error(peek().offset, what);
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (true) {
            if (accept(TokKind::plus))
                e = make_binary(Expr::Kind::add, std::move(e), parse_term());
            else if (accept(TokKind::minus))
                e = make_binary(Expr::Kind::sub, std::move(e), parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (true) {
            if (accept(TokKind::star))
                e = make_binary(Expr::Kind::mul, std::move(e), parse_factor());
            else if (accept(TokKind::slash))
                e = make_binary(Expr::Kind::div, std::move(e), parse_factor());
            else
                return e;
        }
    }

    ExprPtr parse_factor() {
        if (accept(TokKind::minus))
            return make_neg(parse_factor());
        ExprPtr e = parse_atom();
        if (accept(TokKind::caret))
            return make_pow(std::move(e), parse_int_literal("an integer exponent"));
        return e;
    }

    long parse_int_literal(const char* what) {
        bool negative = accept(TokKind::minus);
        if (peek().kind != TokKind::integer)
            throw parse_error(peek().offset, what);
        const Token& t = advance();
        try {
            const long v = std::stol(t.text);
            return negative ? -v : v;
        } catch (const std::out_of_range&) {
            throw parse_error(t.offset, "an integer within machine range");
        }
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
        case TokKind::integer: {
            advance();
            Integer num(t.text);
            // Rational literal: digits '/' digits with no intervening space.
            if (peek().kind == TokKind::slash && peek().offset == t.offset + t.text.size() &&
                peek(1).kind == TokKind::integer && peek(1).offset == peek().offset + 1) {
                advance();
                Integer den(advance().text);
                if (den == 0)
                    throw parse_error(t.offset, "a rational literal with nonzero denominator");
                return make_lit(make_rational(num, den));
            }
            return make_lit(Rational(num));
        }
        case TokKind::ident: {
            advance();
            if (peek().kind == TokKind::lparen && (t.text == "exp" || t.text == "integrate" || t.text == "degree")) {
                advance();
                ExprPtr arg = parse_expr();
                if (t.text == "degree") {
                    expect(TokKind::comma, "',' and a degree");
                    const long k = parse_int_literal("an integer degree");
                    expect(TokKind::rparen, "')'");
                    return make_call(Expr::Kind::degree_fn, std::move(arg), k);
                }
                expect(TokKind::rparen, "')'");
                return make_call(t.text == "exp" ? Expr::Kind::exp_fn : Expr::Kind::integrate_fn,
                                 std::move(arg));
            }
            return make_generator(t.text);
        }
        case TokKind::lparen: {
            advance();
            ExprPtr e = parse_expr();
            expect(TokKind::rparen, "')'");
            return e;
        }
        default:
            throw parse_error(t.offset, atom_expected);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
        return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div:
        return 2;
    case Expr::Kind::neg:
        return 3;
    case Expr::Kind::pow:
        return 4;
    default:
        return 5;
    }
}

inline std::string print_prec(const ExprPtr& e, int min_prec) {
    const int p = precedence(e->kind);
    std::string body;
    switch (e->kind) {
    case Expr::Kind::rational_lit:
        body = to_canonical(e->lit);
        if (e->lit < 0)
            return "(" + body + ")"; // parsed sources never carry negative literals
        return body;
    case Expr::Kind::generator:
        return e->name;
    case Expr::Kind::add:
        body = print_prec(e->lhs, 1) + " + " + print_prec(e->rhs, 2);
        break;
    case Expr::Kind::sub:
        body = print_prec(e->lhs, 1) + " - " + print_prec(e->rhs, 2);
        break;
    case Expr::Kind::mul:
        body = print_prec(e->lhs, 2) + " * " + print_prec(e->rhs, 3);
        break;
    case Expr::Kind::div:
        body = print_prec(e->lhs, 2) + " / " + print_prec(e->rhs, 3);
        break;
    case Expr::Kind::neg:
        body = "-" + print_prec(e->lhs, 3);
        break;
    case Expr::Kind::pow:
        body = print_prec(e->lhs, 5) + "^" + std::to_string(e->k);
        break;
    case Expr::Kind::exp_fn:
        return "exp(" + print_prec(e->lhs, 0) + ")";
    case Expr::Kind::integrate_fn:
        return "integrate(" + print_prec(e->lhs, 0) + ")";
    case Expr::Kind::degree_fn:
        return "degree(" + print_prec(e->lhs, 0) + ", " + std::to_string(e->k) + ")";
    }
    return p < min_prec ? "(" + body + ")" : body;
}

} // namespace detail

/// Parses the expression grammar: left-associative + - * /, tightest-binding
/// ^ with a literal integer exponent, exp/integrate/degree calls, rational
/// literals written as adjacent digits/digits. Errors carry byte offsets.
inline ExprPtr parse(const std::string& src) {
    return detail::Parser(src).parse();
}

/// Canonical rendering; reparses to a structurally identical AST.
inline std::string print(const ExprPtr& e) {
    return detail::print_prec(e, 0);
}

/// Result of evaluation: integrate() yields a scalar, everything else a class.
using EvalValue = std::variant<Rational, GradedElement>;

inline bool is_scalar(const EvalValue& v) {
    return std::holds_alternative<Rational>(v);
}

inline GradedElement to_element(const EvalValue& v, const AmbientSpace& space) {
    if (is_scalar(v))
        return GradedElement::constant(space, std::get<Rational>(v));
    return std::get<GradedElement>(v);
}

namespace detail {

inline Rational rational_pow(const Rational& base, long k) {
    if (k < 0) {
        if (base == 0)
            throw not_invertible("0 raised to a negative power");
        return rational_pow(Rational(1) / base, -k);
    }
    Rational r = 1;
    for (long i = 0; i < k; ++i)
        r *= base;
    return r;
}

inline EvalValue eval(const ExprPtr& e, const AmbientSpace& space) {
    using K = Expr::Kind;
    switch (e->kind) {
    case K::rational_lit:
        return e->lit;
    case K::generator:
        return GradedElement::generator(space, e->name);
    case K::add:
    case K::sub:
    case K::mul: {
        EvalValue l = eval(e->lhs, space);
        EvalValue r = eval(e->rhs, space);
        if (is_scalar(l) && is_scalar(r)) {
            const Rational& a = std::get<Rational>(l);
            const Rational& b = std::get<Rational>(r);
            if (e->kind == K::add)
                return a + b;
            if (e->kind == K::sub)
                return a - b;
            return a * b;
        }
        const GradedElement a = to_element(l, space);
        const GradedElement b = to_element(r, space);
        if (e->kind == K::add)
            return a + b;
        if (e->kind == K::sub)
            return a - b;
        return a * b;
    }
    case K::div: {
        EvalValue l = eval(e->lhs, space);
        EvalValue r = eval(e->rhs, space);
        if (is_scalar(r)) {
            const Rational& b = std::get<Rational>(r);
            if (b == 0)
                throw not_invertible("division by zero");
            if (is_scalar(l))
                return std::get<Rational>(l) / b;
            return std::get<GradedElement>(l).scaled(Rational(1) / b);
        }
        const GradedElement& b = std::get<GradedElement>(r);
        if (b.constant_term() == 0)
            throw not_invertible("division by non-unit (zero constant term)");
        return to_element(l, space) * inverse(b);
    }
    case K::neg: {
        EvalValue v = eval(e->lhs, space);
        if (is_scalar(v))
            return -std::get<Rational>(v);
        return -std::get<GradedElement>(v);
    }
    case K::pow: {
        EvalValue v = eval(e->lhs, space);
        if (is_scalar(v))
            return rational_pow(std::get<Rational>(v), e->k);
        return pow_int(std::get<GradedElement>(v), e->k);
    }
    case K::exp_fn: {
        EvalValue v = eval(e->lhs, space);
        return exp(to_element(v, space));
    }
    case K::integrate_fn:
        return integrate(to_element(eval(e->lhs, space), space));
    case K::degree_fn:
        return degree_part(to_element(eval(e->lhs, space), space), e->k);
    }
    throw domain_error("eval: unhandled node");
}

} // namespace detail

/// Evaluates over a space. Generators must exist on the space; division
/// requires a unit; exp requires a vanishing constant term.
inline EvalValue evaluate(const ExprPtr& e, const AmbientSpace& space) {
    return detail::eval(e, space);
}

inline EvalValue evaluate(const std::string& src, const AmbientSpace& space) {
    return evaluate(parse(src), space);
}

} // namespace swcalc
