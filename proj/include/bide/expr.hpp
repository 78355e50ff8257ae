#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace bide {

/// Immutable expression tree over the variables x and t.
///
/// Grammar, loosest to tightest binding:
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?          right associative
///     primary := number | 'x' | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
///     func    := sin | cos | tan | exp | log | sqrt
///
/// Exponents must not depend on x or t. Juxtaposition is not
/// multiplication: "2x" is a syntax error. `e` is Euler's number unless it
/// is followed by '(', which makes it an unknown function.
///
/// Copies share the tree; evaluation is reentrant.
class Expr {
public:
    enum class Kind { Number, Constant, VarX, VarT, Negate, Add, Sub, Mul, Div, Pow, Call };
    enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt };

    /// Throws ParseError carrying the byte offset of the problem.
    static Expr parse(std::string_view text);
    /// Literal; negative values are stored as a negated literal, as parsed.
    /// Throws DomainError for non-finite values.
    static Expr number(double value);

    Kind kind() const noexcept;

    bool uses_x() const noexcept;
    bool uses_t() const noexcept;
    bool is_constant() const noexcept { return !uses_x() && !uses_t(); }

    /// Throws BindingError if the tree references t and none is given, and
    /// DomainError when an operation leaves its real domain.
    double eval(double x, std::optional<double> t = std::nullopt) const;
    double operator()(double x) const { return eval(x); }
    double operator()(double x, double t) const { return eval(x, t); }

    /// Canonical text with minimal parentheses; parse(to_string()) rebuilds the same tree.
    std::string to_string() const;

    friend bool operator==(const Expr& a, const Expr& b);

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;

    friend class ExprParser;
};

/// Convenience wrapper for eval_expr(e, x, t) call sites.
inline double eval_expr(const Expr& e, double x, std::optional<double> t = std::nullopt)
{
    return e.eval(x, t);
}

} // namespace bide
