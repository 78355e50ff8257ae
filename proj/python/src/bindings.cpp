#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "bide/basis.hpp"
#include "bide/cli/problem_file.hpp"
#include "bide/error.hpp"
#include "bide/expr.hpp"
#include "bide/opmat.hpp"
#include "bide/project.hpp"
#include "bide/solver.hpp"

namespace py = pybind11;
using namespace bide;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows rows_of(const DenseMatrix& m)
{
    Rows out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        out[r].assign(m.row(r).begin(), m.row(r).end());
    return out;
}

const char* path_name(AssemblyPath path)
{
    switch (path) {
    case AssemblyPath::Constant:
        return "constant";
    case AssemblyPath::General:
        return "general";
    case AssemblyPath::Auto:
        break;
    }
    return "auto";
}

py::dict solution_dict(const SpectralSolution& s)
{
    py::dict d;
    d["n"] = s.n;
    d["assembly"] = path_name(s.path);
    d["coefficients"] = s.c.vector();
    d["solution"] = std::vector<double>(s.y.coeffs().begin(), s.y.coeffs().end());
    d["max_error"] = s.diagnostics.max_error;
    d["max_residual"] = s.diagnostics.max_residual;
    d["condition_estimate"] = s.diagnostics.condition_estimate;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Spectral solver for linear Volterra integro-differential equations on [0, 1]";

    static py::exception<Error> base(m, "BideError", PyExc_RuntimeError);
    static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
    static py::exception<ProblemError> problem_error(m, "ProblemError", base.ptr());
    static py::exception<SingularMatrixError> singular(m, "SingularMatrixError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const ProblemError& e) {
            py::set_error(problem_error, e.what());
        } catch (const SingularMatrixError& e) {
            py::set_error(singular, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.attr("MAX_DEGREE") = kMaxBasisDegree;

    m.def(
        "bernoulli_numbers",
        [](int n) {
            std::vector<std::string> out;
            for (const Rational& b : bernoulli_numbers(n))
                out.push_back(b.to_string());
            return out;
        },
        py::arg("n"), "B_0..B_n as exact 'p/q' strings.");

    m.def(
        "orthonormal_basis",
        [](int n) {
            const BasisSet basis = orthonormal_basis(n);
            Rows out;
            for (const Polynomial& p : basis.phis())
                out.emplace_back(p.coeffs().begin(), p.coeffs().end());
            return out;
        },
        py::arg("n"), "Monomial coefficients (x^0 first) of phi_0..phi_n.");

    m.def(
        "eval_basis", [](int n, double x) { return orthonormal_basis(n).eval_all(x); }, py::arg("n"), py::arg("x"),
        "phi_0(x)..phi_n(x).");

    m.def(
        "theta", [](int n) { return rows_of(theta(n).theta); }, py::arg("n"),
        "Operational matrix of integration, as a list of rows.");

    m.def(
        "convolution_matrix", [](int m, int n) { return rows_of(convolution_matrix(m, theta(n).theta)); },
        py::arg("m"), py::arg("n"), "(m-1)! theta^m for the kernel (x-t)^(m-1).");

    m.def(
        "gauss_legendre",
        [](int q) {
            const QuadratureRule& rule = gauss_legendre(q);
            return py::make_tuple(rule.nodes, rule.weights);
        },
        py::arg("q"), "Nodes and weights of the q-point rule on [0, 1].");

    m.def(
        "project",
        [](const std::function<double(double)>& f, int n, int q) {
            const BasisSet basis = orthonormal_basis(n);
            const CoeffVector c =
                q > 0 ? project(f, basis, gauss_legendre(q)) : project(f, basis);
            return c.vector();
        },
        py::arg("f"), py::arg("n"), py::arg("quadrature_order") = 0,
        "Coefficients <f, phi_k> for k = 0..n.");

    py::class_<Expr>(m, "Expr")
        .def(py::init(&Expr::parse), py::arg("text"))
        .def("__call__", [](const Expr& e, double x, std::optional<double> t) { return e.eval(x, t); },
             py::arg("x"), py::arg("t") = std::nullopt)
        .def_property_readonly("uses_x", &Expr::uses_x)
        .def_property_readonly("uses_t", &Expr::uses_t)
        .def("__str__", &Expr::to_string)
        .def("__repr__", [](const Expr& e) { return "Expr('" + e.to_string() + "')"; })
        .def("__eq__", [](const Expr& a, const Expr& b) { return a == b; });

    m.def(
        "solve",
        [](const std::string& problem_text, std::optional<int> n) {
            const cli::ProblemFile file = cli::parse_problem_file(problem_text);
            return solution_dict(solve(file.problem, n.value_or(file.options.n.value_or(kDefaultDegree))));
        },
        py::arg("problem"), py::arg("n") = std::nullopt, "Solves a problem given in the key = value format.");

    m.def(
        "sweep",
        [](const std::string& problem_text, const std::vector<int>& degrees) {
            const cli::ProblemFile file = cli::parse_problem_file(problem_text);
            py::list rows;
            for (const SweepRow& row : convergence_sweep(file.problem, degrees)) {
                py::dict d;
                d["n"] = row.n;
                d["max_error"] = row.max_error;
                d["max_residual"] = row.max_residual;
                d["failure"] = row.failure;
                rows.append(d);
            }
            return rows;
        },
        py::arg("problem"), py::arg("degrees"));

    m.def("builtin_examples", [] {
        py::dict out;
        for (const cli::BuiltinExample& ex : cli::builtin_examples())
            out[py::str(std::string(ex.name))] = std::string(ex.text);
        return out;
    });
}
