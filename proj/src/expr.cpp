#include "huplab/expr.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

#include "huplab/error.hpp"

namespace huplab {

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

const char* func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Exp: return "exp";
        case Func::Cosh: return "cosh";
        case Func::Sinh: return "sinh";
        case Func::Sqrt: return "sqrt";
        case Func::Log: return "log";
        case Func::Abs: return "abs";
    }
    return "?";
}

char op_char(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return '+';
        case BinaryOp::Sub: return '-';
        case BinaryOp::Mul: return '*';
        case BinaryOp::Div: return '/';
        case BinaryOp::Pow: return '^';
    }
    return '?';
}

void print(const Expr::Node& n, std::string& out) {
    switch (n.kind) {
        case Kind::Number: {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, n.number);
            out.append(buf, res.ptr);
            return;
        }
        case Kind::Variable: out += 't'; return;
        case Kind::Constant:
            out += n.constant == Constant::Pi ? "pi" : n.constant == Constant::E ? "e" : "i";
            return;
        case Kind::Binary:
            out += '(';
            print(*n.a, out);
            out += op_char(n.op);
            print(*n.b, out);
            out += ')';
            return;
        case Kind::Negate:
            out += "(-";
            print(*n.a, out);
            out += ')';
            return;
        case Kind::Call:
            out += func_name(n.func);
            out += '(';
            print(*n.a, out);
            out += ')';
            return;
        case Kind::Chi:
            out += "chi(";
            print(*n.a, out);
            out += ',';
            print(*n.b, out);
            out += ")(";
            print(*n.c, out);
            out += ')';
            return;
    }
}

std::string text_of(const Expr::Node& n) {
    std::string s;
    print(n, s);
    return s;
}

bool equal(const Expr::Node& x, const Expr::Node& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Kind::Number: return x.number == y.number;
        case Kind::Variable: return true;
        case Kind::Constant: return x.constant == y.constant;
        case Kind::Binary: return x.op == y.op && equal(*x.a, *y.a) && equal(*x.b, *y.b);
        case Kind::Negate: return equal(*x.a, *y.a);
        case Kind::Call: return x.func == y.func && equal(*x.a, *y.a);
        case Kind::Chi: return equal(*x.a, *y.a) && equal(*x.b, *y.b) && equal(*x.c, *y.c);
    }
    return false;
}

cplx int_pow(cplx base, long long n) {
    bool invert = n < 0;
    unsigned long long m = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    cplx acc{1.0, 0.0};
    while (m) {
        if (m & 1ULL) acc *= base;
        base *= base;
        m >>= 1;
    }
    return invert ? 1.0 / acc : acc;
}

double real_arg(const Expr::Node& whole, cplx v, const char* what) {
    if (v.imag() != 0.0) throw DomainError(std::string(what) + " must be real", text_of(whole));
    return v.real();
}

cplx eval_node(const Expr::Node& n, double t);

cplx eval_pow(const Expr::Node& n, cplx base, cplx expo) {
    const bool real_base = base.imag() == 0.0;
    const bool real_expo = expo.imag() == 0.0;
    if (base == 0.0) {
        if (real_expo && expo.real() == 0.0) return 1.0;
        if (expo.real() > 0.0) return 0.0;
        throw DomainError("zero raised to a nonpositive power", text_of(n));
    }
    if (real_expo && std::nearbyint(expo.real()) == expo.real() && std::abs(expo.real()) <= 64.0) {
        if (real_base) return std::pow(base.real(), expo.real());
        return int_pow(base, static_cast<long long>(expo.real()));
    }
    if (real_base && real_expo && base.real() > 0.0) return std::pow(base.real(), expo.real());
    return std::pow(base, expo);
}

cplx eval_call(const Expr::Node& n, cplx x) {
    if (x.imag() == 0.0) {
        const double r = x.real();
        switch (n.func) {
            case Func::Sin: return std::sin(r);
            case Func::Cos: return std::cos(r);
            case Func::Exp: return std::exp(r);
            case Func::Cosh: return std::cosh(r);
            case Func::Sinh: return std::sinh(r);
            case Func::Sqrt: return r >= 0.0 ? cplx(std::sqrt(r)) : cplx(0.0, std::sqrt(-r));
            case Func::Log:
                if (r <= 0.0) throw DomainError("log of a nonpositive real", text_of(n));
                return std::log(r);
            case Func::Abs: return std::abs(r);
        }
    }
    switch (n.func) {
        case Func::Sin: return std::sin(x);
        case Func::Cos: return std::cos(x);
        case Func::Exp: return std::exp(x);
        case Func::Cosh: return std::cosh(x);
        case Func::Sinh: return std::sinh(x);
        case Func::Sqrt: return std::sqrt(x);
        case Func::Log: return std::log(x);
        case Func::Abs: return std::abs(x);
    }
    return 0.0;
}

cplx eval_unchecked(const Expr::Node& n, double t) {
    switch (n.kind) {
        case Kind::Number: return n.number;
        case Kind::Variable: return t;
        case Kind::Constant:
            switch (n.constant) {
                case Constant::Pi: return std::numbers::pi;
                case Constant::E: return std::numbers::e;
                case Constant::I: return cplx(0.0, 1.0);
            }
            return 0.0;
        case Kind::Binary: {
            const cplx l = eval_node(*n.a, t);
            const cplx r = eval_node(*n.b, t);
            switch (n.op) {
                case BinaryOp::Add: return l + r;
                case BinaryOp::Sub: return l - r;
                case BinaryOp::Mul:
                    if (l.imag() == 0.0 && r.imag() == 0.0) return l.real() * r.real();
                    return l * r;
                case BinaryOp::Div:
                    if (r == 0.0) throw DomainError("division by zero", text_of(n));
                    if (l.imag() == 0.0 && r.imag() == 0.0) return l.real() / r.real();
                    return l / r;
                case BinaryOp::Pow: return eval_pow(n, l, r);
            }
            return 0.0;
        }
        case Kind::Negate: return -eval_node(*n.a, t);
        case Kind::Call: return eval_call(n, eval_node(*n.a, t));
        case Kind::Chi: {
            const double lo = real_arg(n, eval_node(*n.a, t), "indicator bound");
            const double hi = real_arg(n, eval_node(*n.b, t), "indicator bound");
            const double x = real_arg(n, eval_node(*n.c, t), "indicator argument");
            return (lo < x && x < hi) ? 1.0 : 0.0;
        }
    }
    return 0.0;
}

cplx eval_node(const Expr::Node& n, double t) {
    const cplx v = eval_unchecked(n, t);
    if (std::isnan(v.real()) || std::isnan(v.imag()))
        throw DomainError("result is not a number", text_of(n));
    return v;
}

// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr run() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    static NodePtr make(Expr::Node n) { return std::make_shared<const Expr::Node>(std::move(n)); }

    static NodePtr bin(BinaryOp op, NodePtr l, NodePtr r) {
        Expr::Node n;
        n.kind = Kind::Binary;
        n.op = op;
        n.a = std::move(l);
        n.b = std::move(r);
        return make(std::move(n));
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) lhs = bin(BinaryOp::Add, lhs, term());
            else if (accept('-')) lhs = bin(BinaryOp::Sub, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = bin(BinaryOp::Mul, lhs, unary());
            else if (accept('/')) lhs = bin(BinaryOp::Div, lhs, unary());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) {
            Expr::Node n;
        n.kind = Kind::Negate;
            n.a = unary();
            return make(std::move(n));
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return bin(BinaryOp::Pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if ((c >= '0' && c <= '9') || c == '.') return number();
        if (is_alpha(c)) return identifier();
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (is_digit(s_[pos_]) || s_[pos_] == '.')) ++pos_;
        // Exponent only when followed by digits; otherwise 'e' is the constant.
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t k = pos_ + 1;
            if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
            if (k < s_.size() && is_digit(s_[k])) {
                pos_ = k;
                while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
            }
        }
        double v = 0.0;
        const char* first = s_.data() + start;
        const char* last = s_.data() + pos_;
        auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last) throw ParseError("malformed number", start);
        if (!std::isfinite(v)) throw ParseError("number out of range", start);
        Expr::Node n;
        n.kind = Kind::Number;
        n.number = v;
        return make(std::move(n));
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (is_alpha(s_[pos_]) || is_digit(s_[pos_]))) ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);

        if (name == "t") return make(Expr::Node{Kind::Variable});
        if (name == "pi" || name == "e" || name == "i") {
            Expr::Node n;
        n.kind = Kind::Constant;
            n.constant = name == "pi" ? Constant::Pi : name == "e" ? Constant::E : Constant::I;
            return make(std::move(n));
        }
        if (name == "chi") {
            Expr::Node n;
        n.kind = Kind::Chi;
            expect('(');
            n.a = expr();
            expect(',');
            n.b = expr();
            expect(')');
            expect('(');
            n.c = expr();
            expect(')');
            return make(std::move(n));
        }
        static constexpr std::pair<std::string_view, Func> funcs[] = {
            {"sin", Func::Sin},   {"cos", Func::Cos},   {"exp", Func::Exp}, {"cosh", Func::Cosh},
            {"sinh", Func::Sinh}, {"sqrt", Func::Sqrt}, {"log", Func::Log}, {"abs", Func::Abs},
        };
        for (const auto& [fname, f] : funcs) {
            if (name == fname) {
                Expr::Node n;
        n.kind = Kind::Call;
                n.func = f;
                expect('(');
                n.a = expr();
                expect(')');
                return make(std::move(n));
            }
        }
        throw UnknownIdentifierError(std::string(name), start);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::number(double value) {
    if (!std::isfinite(value) || value < 0.0 || std::signbit(value))
        throw InvalidArgument("numeric literals are finite and nonnegative");
    Node n{Node::Kind::Number};
    n.number = value;
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::variable() { return Expr(std::make_shared<const Node>(Node{Node::Kind::Variable})); }

Expr Expr::constant(Constant c) {
    Node n{Node::Kind::Constant};
    n.constant = c;
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
    Node n{Node::Kind::Binary};
    n.op = op;
    n.a = std::move(lhs.node_);
    n.b = std::move(rhs.node_);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::negate(Expr operand) {
    Node n{Node::Kind::Negate};
    n.a = std::move(operand.node_);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::call(Func f, Expr arg) {
    Node n{Node::Kind::Call};
    n.func = f;
    n.a = std::move(arg.node_);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::chi(Expr lo, Expr hi, Expr arg) {
    Node n{Node::Kind::Chi};
    n.a = std::move(lo.node_);
    n.b = std::move(hi.node_);
    n.c = std::move(arg.node_);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::from_node(std::shared_ptr<const Node> n) {
    if (!n) throw InvalidArgument("null expression node");
    return Expr(std::move(n));
}

cplx Expr::eval(double t) const { return eval_node(*node_, t); }

std::string Expr::to_string() const { return text_of(*node_); }

bool operator==(const Expr& a, const Expr& b) { return equal(*a.node_, *b.node_); }

Expr parse(std::string_view text) { return Expr::from_node(Parser(text).run()); }

}  // namespace huplab
