#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bide/cli/problem_file.hpp"
#include "bide/solver.hpp"

namespace bide::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,   ///< parse or validation failure
    kExitSolver = 2,  ///< singular system, quadrature failure, ...
};

inline constexpr int kDefaultSamples = 201;

/// Command-line values that take precedence over the problem file.
struct SolveOverrides {
    std::optional<int> n;
    std::optional<std::string> out;
    std::optional<int> samples;
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

/// `%.12g`-style formatting, locale independent.
std::string format_g12(double value);

/// Shortest round-trip formatting, locale independent.
std::string format_exact(double value);

/// Report printed by `solve`; contains no timing so it is reproducible.
std::string format_report(const IdeProblem& problem, const SpectralSolution& solution);

/// x,y_approx[,y_exact,abs_err] at `samples` equispaced points of [0,1].
std::string samples_csv(const IdeProblem& problem, const Polynomial& y, int samples);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string basis_csv(int n);
std::string theta_csv(int n);

int run_solve(std::string_view file_text, const SolveOverrides& overrides, Streams io);
int run_sweep(std::string_view file_text, const std::optional<std::vector<int>>& degrees,
              const std::optional<std::string>& out, Streams io);
int run_basis(int n, Streams io);
int run_theta(int n, Streams io);
int run_examples_list(Streams io);
int run_example(std::string_view name, const SolveOverrides& overrides, Streams io);

/// Reads a whole file; throws ProblemError when it cannot be opened.
std::string read_text_file(const std::string& path);

} // namespace bide::cli
