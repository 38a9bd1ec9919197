#include <doctest.h>

#include "nonarch/expr.hpp"

using namespace nonarch;

namespace {
EvalOutcome run(const std::string& text, BackendKind backend = BackendKind::lc) {
    EvalOptions opt;
    opt.backend = backend;
    return evaluate(*parse_expr(text), opt);
}
}  // namespace

TEST_SUITE("expr") {

TEST_CASE("parse shapes") {
    ExprPtr e = parse_expr("1/(1-eps)");
    CHECK(e->kind == Expr::Kind::div);
    CHECK(e->args[1]->kind == Expr::Kind::sub);

    ExprPtr w = parse_expr("(N-2)/(2*N)");
    CHECK(w->kind == Expr::Kind::div);

    ExprPtr b = parse_expr("binom(N,3)/N^3");
    CHECK(b->kind == Expr::Kind::div);
    CHECK(b->args[0]->callee == "binom");
    CHECK(b->args[1]->kind == Expr::Kind::pow);
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_expr("1 + 2*3")->str() == "1 + 2*3");
    CHECK(parse_expr("(1+2)*3")->str() == "(1 + 2)*3");
    CHECK(parse_expr("1 - 2 - 3")->str() == "1 - 2 - 3");
    CHECK(parse_expr("1 - (2 - 3)")->str() == "1 - (2 - 3)");
    CHECK(parse_expr("-N^2")->str() == "-N^2");
    CHECK(parse_expr("N^-2")->str() == "N^-2");
    CHECK(parse_expr("2*-3")->str() == "2*-3");
    // ^ binds tighter than unary minus: -N^2 = -(N^2)
    CHECK(run("-N^2 + N^2").value == "0");
}

TEST_CASE("round trip is idempotent on fixtures") {
    for (const std::string fixture : {
             "1/(1-eps)", "(N-2)/(2*N)", "binom(N,3)/N^3", "st((N-1)/N)",
             "classify(sqrt(eps))", "close(sin*(eps), eps)", "geomsum(1/2, N)",
             "-(1+eps)^3*2 - N^-1", "abs(1 - 2)", "exp*(eps)*exp*(-eps)",
         }) {
        std::string once = parse_expr(fixture)->str();
        std::string twice = parse_expr(once)->str();
        CHECK(once == twice);
    }
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_expr("1 + (2 *");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(std::string(e.what()).find("at 1:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expr("foo(1)"), Error);
    CHECK_THROWS_AS(parse_expr("bareword"), Error);
    CHECK_THROWS_AS(parse_expr("st(1, 2)"), Error);
    CHECK_THROWS_AS(parse_expr("N^eps"), Error);
}

TEST_CASE("evaluation over both backends") {
    for (BackendKind b : {BackendKind::lc, BackendKind::seq}) {
        CHECK(run("st((N-1)/N)", b).value == "1");
        CHECK(run("classify(eps)", b).value == "Infinitesimal");
        CHECK(run("close(sin*(eps), eps)", b).value == "true");
        CHECK(run("st((N-2)/(2*N))", b).value == "1/2");
        CHECK(run("close(1, 2)", b).value == "false");
        CHECK(run("classify(binom(N,3)/N^3)", b).value == "Appreciable(shadow 1/6)");
        CHECK(run("eps*N", b).value == "1");
        CHECK(run("abs(1 - 3)", b).value == "2");
    }
    // sqrt lives naturally in the series backend
    CHECK(run("classify(sqrt(eps))").value == "Infinitesimal");
    CHECK(run("sqrt(4*eps^2)").value == "2·ε");
}

TEST_CASE("field values report value and classification") {
    EvalOutcome out = run("1 + eps");
    CHECK(out.kind == "value");
    CHECK(out.value == "1 + ε");
    CHECK(out.classification == "Appreciable(shadow 1)");

    EvalOutcome seq = run("N + 1", BackendKind::seq);
    CHECK(seq.value == "n + 1");
    CHECK(seq.classification == "Infinite");
}

TEST_CASE("geomsum routes by backend and ratio") {
    EvalOutcome sum = run("geomsum(1/2, N)", BackendKind::seq);
    CHECK(sum.kind == "sum");
    CHECK(sum.value == "closed = 2 − (1/2)^n; shadow = 2; error ∈ Ω (certificate: 10 ↦ 3, 100 ↦ 6, 1000 ↦ 9)");

    EvalOutcome unit = run("geomsum(1, N)", BackendKind::seq);
    CHECK(unit.kind == "value");
    CHECK(unit.value == "n + 1");
    CHECK(unit.classification == "Infinite");

    CHECK_THROWS_AS(run("geomsum(1/2, N)", BackendKind::lc), Error);
    try {
        run("geomsum(1/2, N)", BackendKind::lc);
    } catch (const Error& e) {
        CHECK(e.code() == errc::unsupported_backend);
    }
    CHECK_THROWS_AS(run("geomsum(1/2, eps)", BackendKind::seq), Error);
}

TEST_CASE("division uses the configured depth with exact leading terms") {
    EvalOutcome out = run("1/(1-eps)");
    CHECK(out.kind == "value");
    CHECK(out.classification == "Appreciable(shadow 1)");
    // depth 16 keeps ε^16 and records the cutoff
    CHECK(out.value.find("(+O(ε^17))") != std::string::npos);
}

TEST_CASE("errors surface with context") {
    CHECK_THROWS_AS(run("1/0"), Error);
    CHECK_THROWS_AS(run("st(N)"), Error);
    CHECK_THROWS_AS(run("sqrt(0 - eps)"), Error);
    CHECK_THROWS_AS(run("sin*(1)"), Error);
    CHECK_THROWS_AS(run("binom(N, eps)"), Error);
}

}
