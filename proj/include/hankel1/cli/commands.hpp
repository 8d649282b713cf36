#ifndef HANKEL1_CLI_COMMANDS_HPP
#define HANKEL1_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hankel1/cli/report.hpp"

namespace hankel1::cli
{

struct RunConfig
{
    std::string command;
    std::string input;         ///< path, or "-" for stdin
    std::string matrix;        ///< inline matrix, rows separated by ';'
    std::string field = "auto";  ///< auto | real | complex
    std::optional<double> eps;
    double tol        = 1e-12;
    double tol_zero   = 1e-12;
    Index grid_radii  = 64;
    Index grid_angles = 256;
    std::size_t grid  = 2048;  ///< spectral inner grid
    std::size_t max_iter = 100000;
    bool trace = false;
    std::string output = "json";  ///< json | text
    std::uint64_t seed = 0;
    std::string kind = "random";
    Index rows = 4;
    Index cols = 4;
    double noise = 0.0;
    std::string out;  ///< gen target file; stdout when empty
};

/// Throws InvalidArgument for non-positive tolerances or grids below three points.
void validate(const RunConfig& config);

/// Runs a solver command (`frobenius`, `spectral`, `cadzow`, `compare`, `project`) on `a`.
Json run_command(const RunConfig& config, const CMatrix& a);

/// Deterministic test matrix for `gen`.
CMatrix generate(const RunConfig& config);

/// Full pipeline for parsed options; returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `argv`-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hankel1::cli

#endif  // HANKEL1_CLI_COMMANDS_HPP
