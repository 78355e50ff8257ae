#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bide/error.hpp"
#include "bide/problem.hpp"

namespace bide::cli {

/// Line-oriented `key = value` problem description.
///
///     # comment
///     name = example1
///     order = 4                        k >= 1
///     coeff.<i> = <number or expr in x>   i = 0..k, missing terms are 0
///     integral.<idx>.weight = <number or expr in x>   default 1
///     integral.<idx>.kernel = conv:<m> | <expr in x, t>
///     integral.<idx>.deriv = <j>       0 <= j < k, default 0
///     ic.<i> = <number>                exactly k of them, i = 0..k-1
///     rhs = <expr in x>
///     exact = <expr in x>              optional
///     n = <degree>                     optional run options
///     sweep = 3,5,7
///     samples = 201
///     out = samples.csv
///
/// Unknown or repeated keys are errors.
struct RunOptions {
    std::optional<int> n;
    std::vector<int> sweep;
    std::optional<int> samples;
    std::optional<std::string> out;
};

struct ProblemFile {
    IdeProblem problem;
    RunOptions options;
};

/// Error located at a 1-based line of the problem file.
class ProblemFileError : public ProblemError {
public:
    ProblemFileError(std::size_t line, const std::string& message)
        : ProblemError("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parses and validates; throws ProblemFileError or ProblemError.
ProblemFile parse_problem_file(std::string_view text);

/// Writes a file that parse_problem_file reads back to an equal problem.
std::string format_problem_file(const ProblemFile& file);

/// Parses "3,5,7".
std::vector<int> parse_int_list(std::string_view text);

bool same_problem(const IdeProblem& a, const IdeProblem& b);

struct BuiltinExample {
    std::string_view name;
    std::string_view summary;
    std::string_view text;
};

const std::vector<BuiltinExample>& builtin_examples();
const BuiltinExample* find_builtin(std::string_view name);

} // namespace bide::cli
