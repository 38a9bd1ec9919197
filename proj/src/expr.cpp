#include "nonarch/expr.hpp"

#include <cctype>
#include <optional>

#include "nonarch/derivations.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/field.hpp"
#include "nonarch/growth_number.hpp"
#include "nonarch/hyperfinite.hpp"
#include "nonarch/lc_number.hpp"
#include "nonarch/star.hpp"

namespace nonarch {

namespace {

struct Token {
    enum class Kind { number, ident, op, lparen, rparen, comma, end };
    Kind kind;
    std::string text;
    int line, column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& message, const Token& at) const {
        fail(errc::syntax_error,
             "at " + std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message);
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::end;
            current_.text = "<end>";
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_];
                bump();
            }
            current_ = {Token::Kind::number, num, current_.line, current_.column};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_];
                bump();
            }
            // star-lifted names: ident immediately followed by "*("
            if (pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '(') {
                id += '*';
                bump();
            }
            current_ = {Token::Kind::ident, id, current_.line, current_.column};
            return;
        }
        if (c == '(') { current_ = {Token::Kind::lparen, "(", line_, column_}; bump(); return; }
        if (c == ')') { current_ = {Token::Kind::rparen, ")", line_, column_}; bump(); return; }
        if (c == ',') { current_ = {Token::Kind::comma, ",", line_, column_}; bump(); return; }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            current_ = {Token::Kind::op, std::string(1, c), line_, column_};
            bump();
            return;
        }
        fail(errc::syntax_error, "at " + std::to_string(line_) + ":" + std::to_string(column_) +
                                     ": unexpected character '" + std::string(1, c) + "'");
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1, column_ = 1;
    Token current_{Token::Kind::end, "", 1, 1};
};

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr literal(Rational v) {
    Expr e;
    e.kind = Expr::Kind::literal;
    e.value = std::move(v);
    return make(std::move(e));
}

ExprPtr node(Expr::Kind kind, std::vector<ExprPtr> args) {
    Expr e;
    e.kind = kind;
    e.args = std::move(args);
    return make(std::move(e));
}

struct CallSpec {
    const char* name;
    size_t arity;
};

constexpr CallSpec kCalls[] = {
    {"st", 1},     {"classify", 1}, {"close", 2},  {"abs", 1},    {"sqrt", 1},  {"binom", 2},
    {"sin*", 1},   {"cos*", 1},     {"exp*", 1},   {"log1p*", 1}, {"geomsum", 2},
};

const CallSpec* find_call(const std::string& name) {
    for (const auto& c : kCalls)
        if (name == c.name) return &c;
    return nullptr;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ExprPtr run() {
        ExprPtr e = additive();
        if (lex_.peek().kind != Token::Kind::end)
            lex_.error("trailing input '" + lex_.peek().text + "'", lex_.peek());
        return e;
    }

  private:
    ExprPtr additive() {
        ExprPtr left = multiplicative();
        while (lex_.peek().kind == Token::Kind::op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.take().text;
            ExprPtr right = multiplicative();
            left = node(op == "+" ? Expr::Kind::add : Expr::Kind::sub, {left, right});
        }
        return left;
    }

    ExprPtr multiplicative() {
        ExprPtr left = unary();
        while (lex_.peek().kind == Token::Kind::op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            std::string op = lex_.take().text;
            ExprPtr right = unary();
            left = node(op == "*" ? Expr::Kind::mul : Expr::Kind::div, {left, right});
        }
        return left;
    }

    ExprPtr unary() {
        if (lex_.peek().kind == Token::Kind::op && lex_.peek().text == "-") {
            lex_.take();
            return node(Expr::Kind::neg, {unary()});
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.peek().kind == Token::Kind::op && lex_.peek().text == "^") {
            Token caret = lex_.take();
            bool negative = false;
            if (lex_.peek().kind == Token::Kind::op && lex_.peek().text == "-") {
                lex_.take();
                negative = true;
            }
            if (lex_.peek().kind != Token::Kind::number)
                lex_.error("'^' needs a literal integer exponent", caret);
            Token num = lex_.take();
            Expr e;
            e.kind = Expr::Kind::pow;
            e.exponent = std::stol(num.text);
            if (negative) e.exponent = -e.exponent;
            e.args = {base};
            return make(std::move(e));
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number:
                return literal(Rational::parse(t.text));
            case Token::Kind::ident: {
                if (t.text == "eps") return node(Expr::Kind::eps, {});
                if (t.text == "N") return node(Expr::Kind::big_n, {});
                const CallSpec* spec = find_call(t.text);
                if (!spec)
                    fail(errc::unknown_identifier,
                         "at " + std::to_string(t.line) + ":" + std::to_string(t.column) +
                             ": unknown identifier '" + t.text + "'");
                if (lex_.peek().kind != Token::Kind::lparen)
                    lex_.error("'" + t.text + "' is a function and needs arguments", t);
                lex_.take();
                std::vector<ExprPtr> args;
                if (lex_.peek().kind != Token::Kind::rparen) {
                    args.push_back(additive());
                    while (lex_.peek().kind == Token::Kind::comma) {
                        lex_.take();
                        args.push_back(additive());
                    }
                }
                if (lex_.peek().kind != Token::Kind::rparen)
                    lex_.error("expected ')' closing the call to '" + t.text + "'", lex_.peek());
                lex_.take();
                if (args.size() != spec->arity)
                    lex_.error("'" + t.text + "' takes " + std::to_string(spec->arity) +
                                   " argument(s), got " + std::to_string(args.size()),
                               t);
                Expr e;
                e.kind = Expr::Kind::call;
                e.callee = t.text;
                e.args = std::move(args);
                return make(std::move(e));
            }
            case Token::Kind::lparen: {
                ExprPtr inner = additive();
                if (lex_.peek().kind != Token::Kind::rparen)
                    lex_.error("expected ')'", lex_.peek());
                lex_.take();
                return inner;
            }
            default:
                lex_.error("expected a value, got '" + t.text + "'", t);
        }
    }

    Lexer lex_;
};

// precedence bands for printing: additive 1, multiplicative 2, unary 3, power 4, atom 5
int print_prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
    }
}

std::string print(const Expr& e, int parent_prec) {
    std::string out;
    switch (e.kind) {
        case Expr::Kind::literal: out = e.value.str(); break;
        case Expr::Kind::eps: out = "eps"; break;
        case Expr::Kind::big_n: out = "N"; break;
        case Expr::Kind::neg: out = "-" + print(*e.args[0], 3); break;
        case Expr::Kind::add: out = print(*e.args[0], 1) + " + " + print(*e.args[1], 2); break;
        case Expr::Kind::sub: out = print(*e.args[0], 1) + " - " + print(*e.args[1], 2); break;
        case Expr::Kind::mul: out = print(*e.args[0], 2) + "*" + print(*e.args[1], 3); break;
        case Expr::Kind::div: out = print(*e.args[0], 2) + "/" + print(*e.args[1], 3); break;
        case Expr::Kind::pow:
            out = print(*e.args[0], 5) + "^" + std::to_string(e.exponent);
            break;
        case Expr::Kind::call: {
            out = e.callee + "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ", ";
                out += print(*e.args[i], 0);
            }
            out += ")";
            break;
        }
    }
    if (print_prec(e) < parent_prec) out = "(" + out + ")";
    return out;
}

template <FieldBackend F>
F eval_field(const Expr& e, const EvalOptions& opt);

// The element must be exactly a rational embedding (geomsum ratio, binom index).
template <FieldBackend F>
Rational exact_rational(const F& x, const char* what) {
    if (x.is_exact_zero()) return Rational(0);
    Classification c = classify(x);
    if (c.tag == Tag::zero) return Rational(0);
    if (c.tag != Tag::appreciable || !c.shadow || !(x == F::from_rational(*c.shadow)))
        fail(errc::syntax_error, std::string(what) + " must be an exact rational, got " + x.str());
    return *c.shadow;
}

template <FieldBackend F>
EvalOutcome eval_outcome(const Expr& e, const EvalOptions& opt) {
    if (e.kind == Expr::Kind::call) {
        if (e.callee == "st") {
            Rational r = shadow(eval_field<F>(*e.args[0], opt));
            return {"rational", r.str(), ""};
        }
        if (e.callee == "classify") {
            Classification c = classify(eval_field<F>(*e.args[0], opt));
            return {"classification", c.str(), ""};
        }
        if (e.callee == "close") {
            bool close = is_close(eval_field<F>(*e.args[0], opt), eval_field<F>(*e.args[1], opt));
            return {"bool", close ? "true" : "false", ""};
        }
        if (e.callee == "geomsum") {
            if constexpr (std::is_same_v<F, GrowthNumber>) {
                Rational a = exact_rational<F>(eval_field<F>(*e.args[0], opt), "geomsum ratio");
                GrowthNumber upper = eval_field<F>(*e.args[1], opt);
                if (a == Rational(1)) {
                    GrowthNumber s = arithmetic_sum(upper);
                    return {"value", s.str(), classify(s).str()};
                }
                HyperfiniteSumResult r = geom_hyperfinite_sum(a, upper);
                return {"sum", r.str(), ""};
            } else {
                fail(errc::unsupported_backend,
                     "hyperfinite sums need the sequence backend: a^(N+1) has no finite-support "
                     "series representation");
            }
        }
    }
    F value = eval_field<F>(e, opt);
    Classification c = classify(value);
    return {"value", value.str(), c.str()};
}

template <FieldBackend F>
F eval_field(const Expr& e, const EvalOptions& opt) {
    switch (e.kind) {
        case Expr::Kind::literal: return F::from_rational(e.value);
        case Expr::Kind::eps: return F::eps();
        case Expr::Kind::big_n: return F::inf_n();
        case Expr::Kind::neg: return -eval_field<F>(*e.args[0], opt);
        case Expr::Kind::add: return eval_field<F>(*e.args[0], opt) + eval_field<F>(*e.args[1], opt);
        case Expr::Kind::sub: return eval_field<F>(*e.args[0], opt) - eval_field<F>(*e.args[1], opt);
        case Expr::Kind::mul: return eval_field<F>(*e.args[0], opt) * eval_field<F>(*e.args[1], opt);
        case Expr::Kind::div:
            return eval_field<F>(*e.args[0], opt) * eval_field<F>(*e.args[1], opt).inverse(opt.depth);
        case Expr::Kind::pow: return eval_field<F>(*e.args[0], opt).pow(e.exponent, opt.depth);
        case Expr::Kind::call: {
            if (e.callee == "abs") return eval_field<F>(*e.args[0], opt).abs();
            if (e.callee == "sqrt") return eval_field<F>(*e.args[0], opt).root(2, opt.depth);
            if (e.callee == "binom") {
                F n = eval_field<F>(*e.args[0], opt);
                Rational k = exact_rational<F>(eval_field<F>(*e.args[1], opt), "binomial index");
                if (!k.is_nonneg_integer())
                    fail(errc::syntax_error, "binomial index must be a nonnegative integer, got " + k.str());
                return hyper_binom(n, static_cast<unsigned>(k.to_long()));
            }
            if (e.callee == "sin*") return star_apply(StarFn::sin, eval_field<F>(*e.args[0], opt), opt.order);
            if (e.callee == "cos*") return star_apply(StarFn::cos, eval_field<F>(*e.args[0], opt), opt.order);
            if (e.callee == "exp*") return star_apply(StarFn::exp, eval_field<F>(*e.args[0], opt), opt.order);
            if (e.callee == "log1p*")
                return star_apply(StarFn::log1p, eval_field<F>(*e.args[0], opt), opt.order);
            fail(errc::unknown_identifier, "'" + e.callee + "' does not evaluate to a field element");
        }
    }
    fail(errc::syntax_error, "malformed expression node");
}

}  // namespace

ExprPtr parse_expr(std::string_view text) {
    return Parser(text).run();
}

std::string Expr::str() const {
    return print(*this, 0);
}

EvalOutcome evaluate(const Expr& e, const EvalOptions& options) {
    return options.backend == BackendKind::lc ? eval_outcome<LcNumber>(e, options)
                                              : eval_outcome<GrowthNumber>(e, options);
}

}  // namespace nonarch
