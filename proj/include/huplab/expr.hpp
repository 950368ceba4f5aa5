#pragma once

// Small closed-form expression language for densities.
//
//   expr   := term   (('+' | '-') term)*
//   term   := unary  (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := primary ('^' unary)?          right-associative
//   primary:= number | 't' | 'pi' | 'e' | 'i' | '(' expr ')'
//           | func '(' expr ')' | 'chi' '(' expr ',' expr ')' '(' expr ')'
//
// Complex constants are written as a+b*i.

#include <complex>
#include <memory>
#include <string>
#include <string_view>

namespace huplab {

using cplx = std::complex<double>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Func { Sin, Cos, Exp, Cosh, Sinh, Sqrt, Log, Abs };
enum class Constant { Pi, E, I };

class Expr {
public:
    struct Node;

    static Expr number(double value);
    static Expr variable();
    static Expr constant(Constant c);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
    static Expr negate(Expr operand);
    static Expr call(Func f, Expr arg);
    /// Indicator of the open interval (lo, hi) applied to `arg`.
    static Expr chi(Expr lo, Expr hi, Expr arg);
    static Expr from_node(std::shared_ptr<const Node> n);

    /// Evaluates at parameter value t. Throws DomainError on log of a
    /// nonpositive real, division by zero, or a NaN result.
    cplx eval(double t) const;

    /// Fully parenthesized text that parses back to an equal tree.
    std::string to_string() const;

    const Node& node() const { return *node_; }

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Expr::Node {
    enum class Kind { Number, Variable, Constant, Binary, Negate, Call, Chi };

    Node() = default;
    explicit Node(Kind k) : kind(k) {}

    Kind kind = Kind::Number;
    double number = 0.0;
    Constant constant = Constant::Pi;
    BinaryOp op = BinaryOp::Add;
    Func func = Func::Sin;
    // Binary: lhs, rhs. Negate/Call: a. Chi: a = lo, b = hi, c = argument.
    std::shared_ptr<const Node> a, b, c;
};

/// Parses `text`. Throws ParseError (with byte offset) or UnknownIdentifierError.
Expr parse(std::string_view text);

}  // namespace huplab
