#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

/// Abstract syntax for the calculator front end. `eps` and `N` are the linked
/// generators of the active backend (eps · N = 1); `^` takes a literal integer
/// exponent; fractional powers go through sqrt.
struct Expr {
    enum class Kind { literal, eps, big_n, neg, add, sub, mul, div, pow, call };

    Kind kind;
    Rational value;                                  // literal
    long exponent = 0;                               // pow
    std::string callee;                              // call
    std::vector<std::shared_ptr<const Expr>> args;   // children

    /// Canonical rendering; parse ∘ str is the identity on ASTs.
    std::string str() const;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Recursive-descent parser for
///   expr := term (('+'|'-') term)*
///   term := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := base ('^' integer)?
///   base := integer | 'eps' | 'N' | call '(' args ')' | '(' expr ')'
/// Errors carry 1-based line:column positions.
ExprPtr parse_expr(std::string_view text);

enum class BackendKind { lc, seq };

inline const char* backend_kind_name(BackendKind b) { return b == BackendKind::lc ? "lc" : "seq"; }

struct EvalOptions {
    BackendKind backend = BackendKind::lc;
    long order = 16;  // star-function Taylor order
    int depth = 16;   // inverse/root truncation depth
};

/// What an evaluation produced, ready for text or JSON rendering.
struct EvalOutcome {
    std::string kind;            // "value" | "rational" | "bool" | "classification" | "sum"
    std::string value;           // canonical printed form
    std::string classification;  // only for kind == "value"
};

/// Evaluates over the backend selected in the options.
EvalOutcome evaluate(const Expr& e, const EvalOptions& options);

}  // namespace nonarch
