#include "bide/problem.hpp"

#include <cmath>

#include "bide/error.hpp"

namespace bide {

double coefficient_at(const Coefficient& c, double x)
{
    if (const double* value = std::get_if<double>(&c))
        return *value;
    return std::get<Expr>(c).eval(x);
}

bool is_constant(const Coefficient& c)
{
    return std::holds_alternative<double>(c);
}

std::string to_string(const Coefficient& c)
{
    if (const double* value = std::get_if<double>(&c))
        return Expr::number(*value).to_string();
    return std::get<Expr>(c).to_string();
}

void IdeProblem::validate() const
{
    if (order < 1)
        throw ProblemError("order must satisfy k >= 1, got " + std::to_string(order));
    if (coefficients.size() != static_cast<std::size_t>(order) + 1)
        throw ProblemError("expected " + std::to_string(order + 1) + " coefficients a_0..a_k, got " +
                           std::to_string(coefficients.size()));
    if (initial_conditions.size() != static_cast<std::size_t>(order))
        throw ProblemError("expected exactly k = " + std::to_string(order) + " initial conditions, got " +
                           std::to_string(initial_conditions.size()));

    for (const Coefficient& c : coefficients)
        if (const Expr* e = std::get_if<Expr>(&c); e && e->uses_t())
            throw ProblemError("coefficient '" + e->to_string() + "' may only depend on x");

    // The leading coefficient must not vanish identically on [0,1].
    const Coefficient& lead = coefficients.back();
    bool nonzero = false;
    for (int i = 0; i <= 64 && !nonzero; ++i)
        nonzero = coefficient_at(lead, i / 64.0) != 0.0;
    if (!nonzero)
        throw ProblemError("leading coefficient a_k is identically zero");

    for (std::size_t idx = 0; idx < integral_terms.size(); ++idx) {
        const IntegralTerm& term = integral_terms[idx];
        const std::string where = "integral term " + std::to_string(idx);
        if (term.deriv < 0 || term.deriv >= order)
            throw ProblemError(where + ": derivative order j must satisfy 0 <= j < k, got " +
                               std::to_string(term.deriv));
        if (const Expr* e = std::get_if<Expr>(&term.weight); e && e->uses_t())
            throw ProblemError(where + ": weight may only depend on x");
        if (const auto* conv = std::get_if<ConvolutionKernel>(&term.kernel); conv && conv->m < 1)
            throw ProblemError(where + ": convolution power m must be >= 1, got " + std::to_string(conv->m));
    }

    if (rhs.uses_t())
        throw ProblemError("rhs may only depend on x");
    if (exact && exact->uses_t())
        throw ProblemError("exact solution may only depend on x");
    for (double y : initial_conditions)
        if (!std::isfinite(y))
            throw ProblemError("initial conditions must be finite");
}

bool IdeProblem::has_constant_structure() const
{
    for (const Coefficient& c : coefficients)
        if (!is_constant(c))
            return false;
    for (const IntegralTerm& term : integral_terms)
        if (!is_constant(term.weight) || !std::holds_alternative<ConvolutionKernel>(term.kernel))
            return false;
    return true;
}

} // namespace bide
