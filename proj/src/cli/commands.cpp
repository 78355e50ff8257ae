#include "bide/cli/commands.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bide/basis.hpp"
#include "bide/opmat.hpp"

namespace bide::cli {

namespace {

std::string path_name(AssemblyPath path)
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

void write_output(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw ProblemError("cannot open '" + path + "' for writing");
    file << text;
    if (!file)
        throw ProblemError("failed writing '" + path + "'");
}

std::string default_samples_path(const IdeProblem& problem)
{
    return (problem.name.empty() ? std::string("solution") : problem.name) + "_samples.csv";
}

/// Maps exceptions to exit codes; problem and parse errors are input errors.
template <class F>
int guarded(Streams io, F&& body)
{
    try {
        return body();
    } catch (const ProblemError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        io.err << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::out_of_range& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

int solve_file(const ProblemFile& file, const SolveOverrides& overrides, Streams io)
{
    const IdeProblem& problem = file.problem;
    const int n = overrides.n.value_or(file.options.n.value_or(kDefaultDegree));
    const int samples = overrides.samples.value_or(file.options.samples.value_or(kDefaultSamples));
    if (samples < 2)
        throw ProblemError("samples must be at least 2");
    if (n < problem.order)
        throw ProblemError("basis degree n = " + std::to_string(n) + " must be at least the order k = " +
                           std::to_string(problem.order));

    const auto start = std::chrono::steady_clock::now();
    SpectralSolution solution;
    try {
        solution = solve(problem, n);
    } catch (const ProblemError&) {
        throw;
    } catch (const Error& e) {
        io.err << "solver error: " << e.what() << '\n';
        return kExitSolver;
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

    io.out << format_report(problem, solution);
    const std::string csv_path = overrides.out.value_or(file.options.out.value_or(default_samples_path(problem)));
    write_output(csv_path, samples_csv(problem, solution.y, samples));
    io.out << "samples: " << csv_path << '\n';
    io.err << "elapsed_ms: " << format_g12(elapsed.count()) << '\n';
    return kExitOk;
}

} // namespace

std::string format_g12(double value)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

std::string format_exact(double value)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

std::string format_report(const IdeProblem& problem, const SpectralSolution& solution)
{
    std::ostringstream out;
    out << "problem: " << (problem.name.empty() ? "(unnamed)" : problem.name) << '\n';
    out << "order: " << problem.order << '\n';
    out << "n: " << solution.n << '\n';
    out << "assembly: " << path_name(solution.path) << '\n';
    out << "coefficients:";
    for (double c : solution.c)
        out << ' ' << format_g12(c);
    out << '\n';
    out << "solution (x^0 first):";
    for (double c : solution.y.coeffs())
        out << ' ' << format_g12(c);
    out << '\n';
    out << "max_error: " << (solution.diagnostics.max_error ? format_g12(*solution.diagnostics.max_error) : "n/a")
        << '\n';
    out << "max_residual: " << format_g12(solution.diagnostics.max_residual) << '\n';
    out << "condition_estimate: " << format_g12(solution.diagnostics.condition_estimate) << '\n';
    return out.str();
}

std::string samples_csv(const IdeProblem& problem, const Polynomial& y, int samples)
{
    std::string out = problem.exact ? "x,y_approx,y_exact,abs_err\n" : "x,y_approx\n";
    for (int i = 0; i < samples; ++i) {
        const double x = static_cast<double>(i) / (samples - 1);
        const double approx = y(x);
        out += format_exact(x) + ',' + format_exact(approx);
        if (problem.exact) {
            const double exact = problem.exact->eval(x);
            out += ',' + format_exact(exact) + ',' + format_exact(std::abs(approx - exact));
        }
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "n,max_error,max_residual\n";
    for (const SweepRow& row : rows) {
        out += std::to_string(row.n) + ',';
        if (row.max_error)
            out += format_exact(*row.max_error);
        out += ',';
        if (row.max_residual)
            out += format_exact(*row.max_residual);
        out += '\n';
    }
    return out;
}

std::string basis_csv(int n)
{
    const BasisSet basis = orthonormal_basis(n);
    std::string out = "k";
    for (int i = 0; i <= n; ++i)
        out += ",c" + std::to_string(i);
    out += '\n';
    for (int k = 0; k <= n; ++k) {
        out += std::to_string(k);
        for (int i = 0; i <= n; ++i)
            out += ',' + format_exact(basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
        out += '\n';
    }
    return out;
}

std::string theta_csv(int n)
{
    const DenseMatrix t = theta(n).theta;
    std::string out = "row";
    for (int j = 0; j <= n; ++j)
        out += ",c" + std::to_string(j);
    out += '\n';
    for (std::size_t i = 0; i < t.rows(); ++i) {
        out += std::to_string(i);
        for (std::size_t j = 0; j < t.cols(); ++j)
            out += ',' + format_exact(t(i, j));
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw ProblemError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int run_solve(std::string_view file_text, const SolveOverrides& overrides, Streams io)
{
    return guarded(io, [&] { return solve_file(parse_problem_file(file_text), overrides, io); });
}

int run_sweep(std::string_view file_text, const std::optional<std::vector<int>>& degrees,
              const std::optional<std::string>& out, Streams io)
{
    return guarded(io, [&] {
        const ProblemFile file = parse_problem_file(file_text);
        const std::vector<int> ns = degrees.value_or(file.options.sweep);
        if (ns.empty())
            throw ProblemError("no degrees to sweep; pass --n-list or set 'sweep' in the file");
        for (int n : ns)
            if (n < file.problem.order)
                throw ProblemError("basis degree n = " + std::to_string(n) + " must be at least the order k = " +
                                   std::to_string(file.problem.order));

        const std::vector<SweepRow> rows = convergence_sweep(file.problem, ns);
        const std::string csv = sweep_csv(rows);
        if (out)
            write_output(*out, csv);
        else
            io.out << csv;

        int code = kExitOk;
        for (const SweepRow& row : rows) {
            if (row.failure) {
                io.err << "n = " << row.n << ": " << *row.failure << '\n';
                code = kExitSolver;
            }
        }
        return code;
    });
}

int run_basis(int n, Streams io)
{
    return guarded(io, [&] {
        io.out << basis_csv(n);
        return kExitOk;
    });
}

int run_theta(int n, Streams io)
{
    return guarded(io, [&] {
        if (n > kMaxBasisDegree)
            throw ProblemError("n must be at most " + std::to_string(kMaxBasisDegree));
        io.out << theta_csv(n);
        return kExitOk;
    });
}

int run_examples_list(Streams io)
{
    for (const BuiltinExample& ex : builtin_examples())
        io.out << ex.name << "  " << ex.summary << '\n';
    return kExitOk;
}

int run_example(std::string_view name, const SolveOverrides& overrides, Streams io)
{
    const BuiltinExample* ex = find_builtin(name);
    if (!ex) {
        io.err << "error: unknown example '" << name << "'; try 'examples list'\n";
        return kExitInput;
    }
    return run_solve(ex->text, overrides, io);
}

} // namespace bide::cli
