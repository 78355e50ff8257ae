#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bide/expr.hpp"

namespace bide {

/// Coefficient of a derivative term or weight of an integral term: either a
/// real constant or an expression in x.
using Coefficient = std::variant<double, Expr>;

/// (x - t)^(m-1), m >= 1.
struct ConvolutionKernel {
    int m = 1;
};

/// Arbitrary non-singular kernel K(x, t).
struct GeneralKernel {
    Expr k;
};

using Kernel = std::variant<ConvolutionKernel, GeneralKernel>;

/// weight(x) * integral_0^x K(x,t) y^(deriv)(t) dt
struct IntegralTerm {
    Coefficient weight = 1.0;
    Kernel kernel = ConvolutionKernel{1};
    int deriv = 0;
};

/// Linear Volterra integro-differential equation on [0, 1]:
///
///   sum_{i=0}^{k} a_i(x) y^(i)(x) + sum_terms w(x) integral_0^x K(x,t) y^(j)(t) dt = r(x)
///
/// with y^(i)(0) = initial_conditions[i] for i < k.
struct IdeProblem {
    std::string name = "problem";
    int order = 1;
    std::vector<Coefficient> coefficients;   // a_0..a_k
    std::vector<IntegralTerm> integral_terms;
    std::vector<double> initial_conditions;  // y(0), y'(0), ..., y^(k-1)(0)
    Expr rhs = Expr::number(0.0);
    std::optional<Expr> exact;

    /// Throws ProblemError naming the violated invariant.
    void validate() const;

    /// True when every coefficient and weight is constant and every kernel is a convolution.
    bool has_constant_structure() const;
};

/// Evaluates a coefficient at x.
double coefficient_at(const Coefficient& c, double x);
bool is_constant(const Coefficient& c);
std::string to_string(const Coefficient& c);

} // namespace bide
