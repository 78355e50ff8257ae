#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bide/linalg.hpp"
#include "bide/poly.hpp"
#include "bide/problem.hpp"
#include "bide/project.hpp"

namespace bide {

inline constexpr int kDefaultDegree = 7;

enum class AssemblyPath {
    Auto,      ///< Constant when the problem allows it, General otherwise.
    Constant,  ///< Powers of theta only; needs constant coefficients and convolution kernels.
    General,   ///< Product matrices for every coefficient, kernel matrices for general kernels.
};

/// How y is rebuilt from the coefficients C of y^(k).
enum class Reconstruction {
    /// k-fold exact integral of C^T phi; y has degree n + k and meets the
    /// initial conditions exactly.
    ExactIntegration,
    /// C^T theta^k phi; y has degree n, but the truncated last row of theta
    /// perturbs y and its derivatives at 0.
    OperationalMatrix,
};

struct SolveOptions {
    AssemblyPath path = AssemblyPath::Auto;
    Reconstruction reconstruction = Reconstruction::ExactIntegration;
    /// Gauss-Legendre order for every projection; 0 selects default_quadrature_order(n).
    int quadrature_order = 0;
};

struct Diagnostics {
    /// max |LHS - RHS| of the original equation at the quadrature nodes, with y substituted.
    double max_residual = 0.0;
    /// max |y - exact| over 1001 equispaced points, when an exact solution is known.
    std::optional<double> max_error;
    /// 1-norm condition number of the system matrix.
    double condition_estimate = 0.0;
};

struct SpectralSolution {
    int n = 0;
    AssemblyPath path = AssemblyPath::Constant;
    CoeffVector c;       ///< y^(k) ~= C^T phi
    Polynomial y;
    Polynomial ic;       ///< sum_i y_i x^i / i!
    Diagnostics diagnostics;
};

/// System matrix M and projected right side R of C^T M phi = R^T phi.
struct AssembledSystem {
    DenseMatrix m;
    CoeffVector r;
    AssemblyPath path = AssemblyPath::Constant;
};

/// Taylor polynomial of the initial conditions.
Polynomial ic_polynomial(const IdeProblem& problem);

/// r(x) minus every contribution of ic_polynomial to the left side.
RealFunction effective_rhs(const IdeProblem& problem, const QuadratureRule& quad);

AssembledSystem assemble(const IdeProblem& problem, int n, const SolveOptions& options = {});

SpectralSolution solve(const IdeProblem& problem, int n = kDefaultDegree, const SolveOptions& options = {});

/// Residual of the equation for a candidate y, sampled at the quadrature nodes.
double max_residual(const IdeProblem& problem, const Polynomial& y, const QuadratureRule& quad);

struct SweepRow {
    int n = 0;
    std::optional<double> max_error;
    std::optional<double> max_residual;
    std::optional<std::string> failure;
};

/// Solves at each degree; a failure is recorded in its row and the sweep continues.
std::vector<SweepRow> convergence_sweep(const IdeProblem& problem, std::span<const int> degrees,
                                        const SolveOptions& options = {});

} // namespace bide
