#include "bide/solver.hpp"

#include <cmath>
#include <string>

#include "bide/basis.hpp"
#include "bide/error.hpp"
#include "bide/opmat.hpp"

namespace bide {

namespace {

double factorial(int m)
{
    double out = 1.0;
    for (int i = 2; i <= m; ++i)
        out *= i;
    return out;
}

/// integral_0^x (x-t)^(m-1) p(t) dt = (m-1)! * (m-fold integral of p).
Polynomial convolve(const Polynomial& p, int m)
{
    Polynomial out = p;
    for (int i = 0; i < m; ++i)
        out = integrate(out);
    return scale(out, factorial(m - 1));
}

/// integral_0^x K(x,t) p(t) dt by the rule mapped onto [0,x].
double kernel_integral(const Expr& kernel, const Polynomial& p, double x, const QuadratureRule& quad)
{
    double acc = 0.0;
    for (int b = 0; b < quad.order(); ++b) {
        const double t = x * quad.nodes[static_cast<std::size_t>(b)];
        acc += quad.weights[static_cast<std::size_t>(b)] * kernel.eval(x, t) * p(t);
    }
    return x * acc;
}

RealFunction as_function(const Coefficient& c)
{
    if (const double* value = std::get_if<double>(&c))
        return [v = *value](double) { return v; };
    return [e = std::get<Expr>(c)](double x) { return e.eval(x); };
}

struct Workspace {
    BasisSet basis;
    DenseMatrix theta;
    QuadratureRule quad;
};

Workspace make_workspace(const IdeProblem& problem, int n, const SolveOptions& options)
{
    problem.validate();
    if (n < problem.order)
        throw ProblemError("basis degree n = " + std::to_string(n) + " must be at least the order k = " +
                           std::to_string(problem.order));
    if (n > kMaxBasisDegree)
        throw ProblemError("basis degree n = " + std::to_string(n) + " exceeds the supported maximum " +
                           std::to_string(kMaxBasisDegree));
    const int q = options.quadrature_order > 0 ? options.quadrature_order : default_quadrature_order(n);
    return Workspace{orthonormal_basis(n), bide::theta(n).theta, gauss_legendre(q)};
}

AssembledSystem assemble_with(const IdeProblem& problem, const Workspace& ws, const SolveOptions& options)
{
    const int k = problem.order;
    const std::size_t size = ws.basis.size();

    AssemblyPath path = options.path;
    if (path == AssemblyPath::Auto)
        path = problem.has_constant_structure() ? AssemblyPath::Constant : AssemblyPath::General;
    if (path == AssemblyPath::Constant && !problem.has_constant_structure())
        throw ProblemError("constant-coefficient assembly needs constant coefficients, constant weights and "
                           "convolution kernels");

    // theta^0 .. theta^(k + max m) on demand.
    std::vector<DenseMatrix> powers{DenseMatrix::identity(size)};
    auto theta_pow = [&](int p) -> const DenseMatrix& {
        while (static_cast<int>(powers.size()) <= p)
            powers.push_back(mat_mul(powers.back(), ws.theta));
        return powers[static_cast<std::size_t>(p)];
    };

    DenseMatrix m(size, size);
    for (int i = 0; i <= k; ++i) {
        const Coefficient& a = problem.coefficients[static_cast<std::size_t>(i)];
        if (path == AssemblyPath::Constant) {
            const double value = std::get<double>(a);
            if (value != 0.0)
                m = m + value * theta_pow(k - i);
        } else {
            // a_i y^(i) -> C^T theta^(k-i) (a_i phi) = C^T theta^(k-i) A_i phi
            m = m + theta_pow(k - i) * product_matrix(as_function(a), ws.basis, ws.quad);
        }
    }

    for (const IntegralTerm& term : problem.integral_terms) {
        const DenseMatrix& lift = theta_pow(k - term.deriv);
        if (const auto* conv = std::get_if<ConvolutionKernel>(&term.kernel)) {
            const DenseMatrix kernel = convolution_matrix(conv->m, ws.theta);
            if (path == AssemblyPath::Constant)
                m = m + std::get<double>(term.weight) * (lift * kernel);
            else
                m = m + lift * kernel * product_matrix(as_function(term.weight), ws.basis, ws.quad);
        } else {
            const Expr& kexpr = std::get<GeneralKernel>(term.kernel).k;
            const KernelFunction kfun = [kexpr](double x, double t) { return kexpr.eval(x, t); };
            m = m + lift * kernel_matrix(as_function(term.weight), kfun, ws.basis, ws.quad);
        }
    }

    const CoeffVector r = project(effective_rhs(problem, ws.quad), ws.basis, ws.quad);
    return AssembledSystem{std::move(m), r, path};
}

} // namespace

Polynomial ic_polynomial(const IdeProblem& problem)
{
    std::vector<double> c(problem.initial_conditions.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = problem.initial_conditions[i] / factorial(static_cast<int>(i));
    return Polynomial(std::move(c));
}

RealFunction effective_rhs(const IdeProblem& problem, const QuadratureRule& quad)
{
    const Polynomial ic = ic_polynomial(problem);
    if (ic.is_zero())
        return [rhs = problem.rhs](double x) { return rhs.eval(x); };

    struct DiffTerm {
        RealFunction coefficient;
        Polynomial derivative;
    };
    struct KernelTerm {
        RealFunction weight;
        Polynomial convolved;           // convolution kernels: exact integral
        std::optional<Expr> kernel;     // general kernels: integrate derivative by quadrature
        Polynomial derivative;
    };

    std::vector<DiffTerm> diff_terms;
    for (int i = 0; i <= problem.order; ++i) {
        Polynomial d = differentiate(ic, i);
        if (!d.is_zero())
            diff_terms.push_back({as_function(problem.coefficients[static_cast<std::size_t>(i)]), std::move(d)});
    }

    std::vector<KernelTerm> kernel_terms;
    for (const IntegralTerm& term : problem.integral_terms) {
        Polynomial d = differentiate(ic, term.deriv);
        if (d.is_zero())
            continue;
        KernelTerm kt{as_function(term.weight), {}, std::nullopt, {}};
        if (const auto* conv = std::get_if<ConvolutionKernel>(&term.kernel))
            kt.convolved = convolve(d, conv->m);
        else {
            kt.kernel = std::get<GeneralKernel>(term.kernel).k;
            kt.derivative = std::move(d);
        }
        kernel_terms.push_back(std::move(kt));
    }

    return [rhs = problem.rhs, diff_terms = std::move(diff_terms), kernel_terms = std::move(kernel_terms),
            quad](double x) {
        double value = rhs.eval(x);
        for (const DiffTerm& term : diff_terms)
            value -= term.coefficient(x) * term.derivative(x);
        for (const KernelTerm& term : kernel_terms) {
            const double integral =
                term.kernel ? kernel_integral(*term.kernel, term.derivative, x, quad) : term.convolved(x);
            value -= term.weight(x) * integral;
        }
        return value;
    };
}

AssembledSystem assemble(const IdeProblem& problem, int n, const SolveOptions& options)
{
    return assemble_with(problem, make_workspace(problem, n, options), options);
}

double max_residual(const IdeProblem& problem, const Polynomial& y, const QuadratureRule& quad)
{
    std::vector<Polynomial> derivatives;
    for (int i = 0; i <= problem.order; ++i)
        derivatives.push_back(differentiate(y, i));

    std::vector<Polynomial> convolved(problem.integral_terms.size());
    for (std::size_t idx = 0; idx < problem.integral_terms.size(); ++idx) {
        const IntegralTerm& term = problem.integral_terms[idx];
        if (const auto* conv = std::get_if<ConvolutionKernel>(&term.kernel))
            convolved[idx] = convolve(derivatives[static_cast<std::size_t>(term.deriv)], conv->m);
    }

    double worst = 0.0;
    for (double x : quad.nodes) {
        double lhs = 0.0;
        for (int i = 0; i <= problem.order; ++i)
            lhs += coefficient_at(problem.coefficients[static_cast<std::size_t>(i)], x) *
                   derivatives[static_cast<std::size_t>(i)](x);
        for (std::size_t idx = 0; idx < problem.integral_terms.size(); ++idx) {
            const IntegralTerm& term = problem.integral_terms[idx];
            double integral = 0.0;
            if (std::holds_alternative<ConvolutionKernel>(term.kernel))
                integral = convolved[idx](x);
            else
                integral = kernel_integral(std::get<GeneralKernel>(term.kernel).k,
                                           derivatives[static_cast<std::size_t>(term.deriv)], x, quad);
            lhs += coefficient_at(term.weight, x) * integral;
        }
        worst = std::max(worst, std::abs(lhs - problem.rhs.eval(x)));
    }
    return worst;
}

SpectralSolution solve(const IdeProblem& problem, int n, const SolveOptions& options)
{
    const Workspace ws = make_workspace(problem, n, options);
    const AssembledSystem system = assemble_with(problem, ws, options);
    const int k = problem.order;

    SpectralSolution out;
    out.n = n;
    out.path = system.path;
    out.c = solve_transposed(system.m, system.r);
    out.ic = ic_polynomial(problem);

    Polynomial particular;
    if (options.reconstruction == Reconstruction::ExactIntegration) {
        particular = reconstruct(out.c, ws.basis);
        for (int i = 0; i < k; ++i)
            particular = integrate(particular);
    } else {
        particular = reconstruct(vec_mat(out.c, mat_pow(ws.theta, k)), ws.basis);
    }
    out.y = out.ic + particular;

    out.diagnostics.max_residual = max_residual(problem, out.y, ws.quad);
    out.diagnostics.condition_estimate = condition_estimate(system.m);
    if (problem.exact) {
        const Expr exact = *problem.exact;
        const Polynomial& y = out.y;
        out.diagnostics.max_error = sup_distance([&](double x) { return y(x); },
                                                 [&](double x) { return exact.eval(x); });
    }
    return out;
}

std::vector<SweepRow> convergence_sweep(const IdeProblem& problem, std::span<const int> degrees,
                                        const SolveOptions& options)
{
    std::vector<SweepRow> rows;
    rows.reserve(degrees.size());
    for (int n : degrees) {
        SweepRow row;
        row.n = n;
        try {
            const SpectralSolution s = solve(problem, n, options);
            row.max_error = s.diagnostics.max_error;
            row.max_residual = s.diagnostics.max_residual;
        } catch (const Error& e) {
            row.failure = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace bide
