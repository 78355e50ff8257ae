#include "bide/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bide/error.hpp"

namespace bide {

struct Expr::Node {
    Kind kind = Kind::Number;
    double value = 0.0;
    std::string name;   // Constant
    Func func = Func::Sin;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    bool has_x = false;
    bool has_t = false;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Kind;
using Func = Expr::Func;

struct FuncName {
    std::string_view name;
    Func func;
};

constexpr std::array<FuncName, 6> kFunctions{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sqrt", Func::Sqrt},
}};

std::string_view func_name(Func f)
{
    for (const auto& entry : kFunctions)
        if (entry.func == f)
            return entry.name;
    return "?";
}

NodePtr make_leaf(Kind kind, double value = 0.0, std::string name = {})
{
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->value = value;
    node->name = std::move(name);
    node->has_x = kind == Kind::VarX;
    node->has_t = kind == Kind::VarT;
    return node;
}

NodePtr make_node(Kind kind, NodePtr lhs, NodePtr rhs = nullptr, Func func = Func::Sin)
{
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->func = func;
    node->has_x = lhs->has_x || (rhs && rhs->has_x);
    node->has_t = lhs->has_t || (rhs && rhs->has_t);
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

bool is_ident_start(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c)
{
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c)
{
    return c >= '0' && c <= '9';
}

} // namespace

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr run()
    {
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return Expr(std::move(root));
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t offset) const
    {
        throw ParseError(message, offset);
    }

    // Offset reported when the input ends early: the last non-blank byte.
    std::size_t end_offset() const
    {
        std::size_t end = text_.size();
        while (end > 0 && std::isspace(static_cast<unsigned char>(text_[end - 1])))
            --end;
        return end == 0 ? 0 : end - 1;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail(std::string("expected '") + c + "' before end of input", end_offset());
        if (text_[pos_] != c)
            fail(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    NodePtr parse_expr()
    {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = make_node(Kind::Add, lhs, parse_term());
            else if (accept('-'))
                lhs = make_node(Kind::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term()
    {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*'))
                lhs = make_node(Kind::Mul, lhs, parse_unary());
            else if (accept('/'))
                lhs = make_node(Kind::Div, lhs, parse_unary());
            else
                return lhs;
        }
    }

    NodePtr parse_unary()
    {
        if (accept('-'))
            return make_node(Kind::Negate, parse_unary());
        return parse_power();
    }

    NodePtr parse_power()
    {
        NodePtr base = parse_primary();
        if (!accept('^'))
            return base;
        skip_ws();
        const std::size_t exponent_at = pos_;
        NodePtr exponent = parse_unary();
        if (exponent->has_x || exponent->has_t)
            fail("exponent must not depend on x or t", exponent_at);
        return make_node(Kind::Pow, base, exponent);
    }

    NodePtr parse_primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("expected an operand before end of input", end_offset());
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (is_digit(c) || c == '.')
            return parse_number();
        if (is_ident_start(c))
            return parse_identifier();
        fail("unexpected '" + std::string(1, c) + "'", pos_);
    }

    NodePtr parse_number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_]))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && is_digit(text_[pos_]))
                ++pos_;
        }
        // Exponent part only when digits follow, so "2e" stays "2" then "e".
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-'))
                ++look;
            if (look < text_.size() && is_digit(text_[look])) {
                pos_ = look;
                while (pos_ < text_.size() && is_digit(text_[pos_]))
                    ++pos_;
            }
        }
        const std::string_view literal = text_.substr(start, pos_ - start);
        if (literal == ".")
            fail("malformed number", start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
        if (ec != std::errc() || ptr != literal.data() + literal.size() || !std::isfinite(value))
            fail("malformed or out-of-range number '" + std::string(literal) + "'", start);
        return make_leaf(Kind::Number, value);
    }

    NodePtr parse_identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        if (peek('(')) {
            for (const auto& entry : kFunctions) {
                if (entry.name != name)
                    continue;
                ++pos_;
                NodePtr arg = parse_expr();
                std::size_t count = 1;
                while (accept(',')) {
                    parse_expr();
                    ++count;
                }
                if (count != 1)
                    fail(name + " takes 1 argument, got " + std::to_string(count), start);
                expect(')');
                return make_node(Kind::Call, arg, nullptr, entry.func);
            }
            fail("unknown function '" + name + "'", start);
        }

        if (name == "x")
            return make_leaf(Kind::VarX);
        if (name == "t")
            return make_leaf(Kind::VarT);
        if (name == "pi")
            return make_leaf(Kind::Constant, std::numbers::pi, name);
        if (name == "e")
            return make_leaf(Kind::Constant, std::numbers::e, name);
        for (const auto& entry : kFunctions)
            if (entry.name == name)
                fail("function '" + name + "' needs an argument list", start);
        fail("unknown identifier '" + name + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

namespace {

double checked(double value, const char* what)
{
    if (!std::isfinite(value))
        throw DomainError(std::string(what) + " produced a non-finite value");
    return value;
}

double eval_node(const Expr::Node& n, double x, const std::optional<double>& t)
{
    switch (n.kind) {
    case Kind::Number:
    case Kind::Constant:
        return n.value;
    case Kind::VarX:
        return x;
    case Kind::VarT:
        if (!t)
            throw BindingError("expression uses t but no value was bound");
        return *t;
    case Kind::Negate:
        return -eval_node(*n.lhs, x, t);
    case Kind::Add:
        return checked(eval_node(*n.lhs, x, t) + eval_node(*n.rhs, x, t), "addition");
    case Kind::Sub:
        return checked(eval_node(*n.lhs, x, t) - eval_node(*n.rhs, x, t), "subtraction");
    case Kind::Mul:
        return checked(eval_node(*n.lhs, x, t) * eval_node(*n.rhs, x, t), "multiplication");
    case Kind::Div: {
        const double num = eval_node(*n.lhs, x, t);
        const double den = eval_node(*n.rhs, x, t);
        if (den == 0.0)
            throw DomainError("division by zero");
        return checked(num / den, "division");
    }
    case Kind::Pow: {
        const double base = eval_node(*n.lhs, x, t);
        const double exponent = eval_node(*n.rhs, x, t);
        if (base < 0.0 && std::trunc(exponent) != exponent)
            throw DomainError("negative base raised to a non-integer power");
        if (base == 0.0 && exponent < 0.0)
            throw DomainError("zero raised to a negative power");
        return checked(std::pow(base, exponent), "power");
    }
    case Kind::Call: {
        const double arg = eval_node(*n.lhs, x, t);
        switch (n.func) {
        case Func::Sin:
            return std::sin(arg);
        case Func::Cos:
            return std::cos(arg);
        case Func::Tan:
            return checked(std::tan(arg), "tan");
        case Func::Exp:
            return checked(std::exp(arg), "exp");
        case Func::Log:
            if (arg <= 0.0)
                throw DomainError("log of non-positive value");
            return std::log(arg);
        case Func::Sqrt:
            if (arg < 0.0)
                throw DomainError("sqrt of negative value");
            return std::sqrt(arg);
        }
    }
    }
    throw DomainError("corrupt expression node");
}

int precedence(const Expr::Node& n)
{
    switch (n.kind) {
    case Kind::Add:
    case Kind::Sub:
        return 1;
    case Kind::Mul:
    case Kind::Div:
        return 2;
    case Kind::Negate:
        return 3;
    case Kind::Pow:
        return 4;
    case Kind::Number:
        return n.value < 0.0 ? 0 : 5;
    default:
        return 5;
    }
}

void print_node(const Expr::Node& n, std::string& out);

void print_child(const Expr::Node& child, bool parens, std::string& out)
{
    if (parens)
        out += '(';
    print_node(child, out);
    if (parens)
        out += ')';
}

void print_node(const Expr::Node& n, std::string& out)
{
    switch (n.kind) {
    case Kind::Number: {
        std::array<char, 32> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), n.value);
        out.append(buf.data(), res.ptr);
        return;
    }
    case Kind::Constant:
        out += n.name;
        return;
    case Kind::VarX:
        out += 'x';
        return;
    case Kind::VarT:
        out += 't';
        return;
    case Kind::Negate:
        out += '-';
        print_child(*n.lhs, precedence(*n.lhs) < 3, out);
        return;
    case Kind::Call:
        out += func_name(n.func);
        print_child(*n.lhs, true, out);
        return;
    case Kind::Pow:
        print_child(*n.lhs, precedence(*n.lhs) <= 4, out);
        out += '^';
        print_child(*n.rhs, precedence(*n.rhs) < 3, out);
        return;
    default: {
        const int p = precedence(n);
        const char op = n.kind == Kind::Add ? '+' : n.kind == Kind::Sub ? '-' : n.kind == Kind::Mul ? '*' : '/';
        print_child(*n.lhs, precedence(*n.lhs) < p, out);
        out += ' ';
        out += op;
        out += ' ';
        print_child(*n.rhs, precedence(*n.rhs) <= p, out);
        return;
    }
    }
}

bool same_tree(const Expr::Node* a, const Expr::Node* b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    if (a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Kind::Number:
        return a->value == b->value;
    case Kind::Constant:
        return a->name == b->name;
    case Kind::Call:
        return a->func == b->func && same_tree(a->lhs.get(), b->lhs.get());
    default:
        return same_tree(a->lhs.get(), b->lhs.get()) && same_tree(a->rhs.get(), b->rhs.get());
    }
}

} // namespace

Expr Expr::parse(std::string_view text)
{
    return ExprParser(text).run();
}

Expr Expr::number(double value)
{
    if (!std::isfinite(value))
        throw DomainError("expression literal must be finite");
    // Negative values become a negated literal, the shape the parser builds.
    if (std::signbit(value))
        return Expr(make_node(Kind::Negate, make_leaf(Kind::Number, -value)));
    return Expr(make_leaf(Kind::Number, value));
}

Expr::Kind Expr::kind() const noexcept
{
    return root_->kind;
}

bool Expr::uses_x() const noexcept
{
    return root_->has_x;
}

bool Expr::uses_t() const noexcept
{
    return root_->has_t;
}

double Expr::eval(double x, std::optional<double> t) const
{
    return eval_node(*root_, x, t);
}

std::string Expr::to_string() const
{
    std::string out;
    print_node(*root_, out);
    return out;
}

bool operator==(const Expr& a, const Expr& b)
{
    return same_tree(a.root_.get(), b.root_.get());
}

} // namespace bide
