#include <doctest.h>

#include <cmath>
#include <functional>

#include "huplab/error.hpp"
#include "huplab/expr.hpp"
#include "test_support.hpp"

using namespace huplab;
using testing::kPi;

namespace {

cplx ev(const char* text, double t) { return parse(text).eval(t); }

Expr random_tree(int depth) {
    auto& g = testing::rng();
    const int pick = depth <= 0 ? static_cast<int>(g() % 3) : static_cast<int>(g() % 7);
    switch (pick) {
        case 0: return Expr::number(std::floor(testing::uniform(0.0, 50.0)) / 8.0);
        case 1: return Expr::variable();
        case 2: return Expr::constant(static_cast<Constant>(g() % 3));
        case 3: return Expr::binary(static_cast<BinaryOp>(g() % 5), random_tree(depth - 1), random_tree(depth - 1));
        case 4: return Expr::negate(random_tree(depth - 1));
        case 5: return Expr::call(static_cast<Func>(g() % 8), random_tree(depth - 1));
        default: return Expr::chi(Expr::number(0.25), Expr::number(3.5), random_tree(depth - 1));
    }
}

}  // namespace

TEST_CASE("parse and evaluate the documented examples") {
    CHECK(std::abs(ev("sin(t)", kPi / 2) - 1.0) < 1e-15);
    CHECK(ev("sqrt(cosh(2*t))*sin(t)*chi(-pi,pi)(t)", 0.0) == cplx(0.0));
    CHECK(ev("2^3^2", 0.0) == cplx(512.0));
    CHECK(std::abs(ev("exp(t^2)", 1.0) - std::exp(1.0)) < 1e-15);
    CHECK(ev("chi(0,1)(t)", 0.0) == cplx(0.0));
    CHECK(ev("chi(0,1)(t)", 1.0) == cplx(0.0));
    CHECK(ev("chi(0,1)(t)", 0.5) == cplx(1.0));
    CHECK(std::abs(ev("i*sin(t)", kPi / 2) - cplx(0.0, 1.0)) < 1e-15);
}

TEST_CASE("precedence") {
    CHECK(ev("1+2*3", 0) == cplx(7.0));
    CHECK(ev("-2^2", 0) == cplx(-4.0));  // ^ binds tighter than unary minus
    CHECK(ev("2^-1", 0) == cplx(0.5));
    CHECK(ev("8/4/2", 0) == cplx(1.0));
    CHECK(ev("10-3-2", 0) == cplx(5.0));
    CHECK(std::abs(ev("2+3*i", 0) - cplx(2.0, 3.0)) == 0.0);
    CHECK(ev("1.5e2", 0) == cplx(150.0));
}

TEST_CASE("complex functions") {
    CHECK(std::abs(ev("exp(i*pi)", 0) + 1.0) < 1e-15);
    CHECK(std::abs(ev("sqrt(-4)", 0) - cplx(0.0, 2.0)) < 1e-15);
    CHECK(std::abs(ev("abs(3+4*i)", 0) - 5.0) < 1e-15);
    CHECK(std::abs(ev("i^2", 0) + 1.0) < 1e-15);
    CHECK(std::abs(ev("cosh(t)^2 - sinh(t)^2", 1.7) - 1.0) < 1e-13);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("1+"), ParseError);
    CHECK_THROWS_AS(parse("sin(t"), ParseError);
    CHECK_THROWS_AS(parse("tan(t)"), UnknownIdentifierError);
    CHECK_THROWS_AS(parse("x"), UnknownIdentifierError);
    try {
        parse("1 + )");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(ev("1/t", 0.0), DomainError);
    CHECK_THROWS_AS(ev("log(t)", 0.0), DomainError);
    CHECK_THROWS_AS(ev("log(t)", -1.0), DomainError);
    try {
        ev("1 + log(t - 1)", 0.5);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.subexpression().find("log") != std::string::npos);
    }
}

TEST_CASE("print then parse gives an equal tree") {
    for (int i = 0; i < 500; ++i) {
        const Expr e = random_tree(5);
        const Expr back = parse(e.to_string());
        CHECK_MESSAGE(back == e, e.to_string());
    }
    CHECK(parse("sin(t)") != parse("cos(t)"));
}

TEST_CASE("evaluation is additive and multiplicative") {
    const Expr a = parse("sin(3*t)*exp(-t^2) + i*cosh(t)");
    const Expr b = parse("sqrt(t^2 + 1)*chi(-2,2)(t) - 2*i");
    const Expr sum = Expr::binary(BinaryOp::Add, a, b);
    const Expr prod = Expr::binary(BinaryOp::Mul, a, b);
    for (int k = 0; k <= 100; ++k) {
        const double t = -3.0 + 0.06 * k;
        CHECK(std::abs(sum.eval(t) - (a.eval(t) + b.eval(t))) <= 1e-15 * (1.0 + std::abs(a.eval(t)) + std::abs(b.eval(t))));
        CHECK(std::abs(prod.eval(t) - a.eval(t) * b.eval(t)) <= 1e-15 * (1.0 + std::abs(a.eval(t) * b.eval(t))));
    }
}
