#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bide/cli/commands.hpp"

using namespace bide::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Spectral solver for linear Volterra integro-differential equations on [0,1]", "bide"};
    app.require_subcommand(1);

    std::string file;
    std::optional<int> n;
    std::optional<std::string> out;
    std::optional<int> samples;

    auto* solve = app.add_subcommand("solve", "Solve the problem described in a problem file");
    solve->add_option("file", file, "Problem file")->required();
    solve->add_option("--n", n, "Basis degree (default: file value or 7)");
    solve->add_option("--out", out, "Samples CSV path (default: <name>_samples.csv)");
    solve->add_option("--samples", samples, "Number of CSV sample points (default 201)");

    std::string n_list;
    auto* sweep = app.add_subcommand("sweep", "Solve at several degrees and print n,max_error,max_residual");
    sweep->add_option("file", file, "Problem file")->required();
    sweep->add_option("--n-list", n_list, "Comma-separated degrees, e.g. 3,5,7");
    sweep->add_option("--out", out, "Write the CSV here instead of stdout");

    int degree = 0;
    auto* basis = app.add_subcommand("basis", "Print monomial coefficients of the orthonormal basis");
    basis->add_option("--n", degree, "Highest degree")->required();

    auto* theta = app.add_subcommand("theta", "Print the integration operational matrix");
    theta->add_option("--n", degree, "Highest degree")->required();

    auto* examples = app.add_subcommand("examples", "Built-in example problems");
    examples->require_subcommand(1);
    examples->add_subcommand("list", "List built-in examples");
    std::string example_name;
    auto* run = examples->add_subcommand("run", "Solve a built-in example");
    run->add_option("name", example_name, "Example name")->required();
    run->add_option("--n", n, "Basis degree");
    run->add_option("--out", out, "Samples CSV path");
    run->add_option("--samples", samples, "Number of CSV sample points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    const Streams io{std::cout, std::cerr};
    const SolveOverrides overrides{n, out, samples};

    if (solve->parsed() || sweep->parsed()) {
        std::string text;
        try {
            text = read_text_file(file);
        } catch (const bide::Error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitInput;
        }
        if (solve->parsed())
            return run_solve(text, overrides, io);
        std::optional<std::vector<int>> degrees;
        if (!n_list.empty()) {
            try {
                degrees = parse_int_list(n_list);
            } catch (const bide::Error& e) {
                std::cerr << "error: --n-list: " << e.what() << '\n';
                return kExitInput;
            }
        }
        return run_sweep(text, degrees, out, io);
    }
    if (basis->parsed())
        return run_basis(degree, io);
    if (theta->parsed())
        return run_theta(degree, io);
    if (run->parsed())
        return run_example(example_name, overrides, io);
    return run_examples_list(io);
}
