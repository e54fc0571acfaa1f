// cli.hpp
// Command-line front end. Exit codes: 0 success, 1 suite failure,
// 2 input/parse error.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace triality {

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::string family = "schmidt";  // sweep: schmidt | werner
    std::string format;              // json | csv; per-command default if empty
    int samples = 1000;
    std::uint64_t seed = 12345;
    int grid_n = 256;
    int points = 101;
    double tol_triality = 1e-10;
    double tol_mixed = 1e-10;
    double tol_invariance = 1e-10;
    double tol_bell = 1e-3;
};

int cmd_analyze(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);
int cmd_simulate(const RunConfig& config, std::ostream& out);
int cmd_bell(const RunConfig& config, std::ostream& out);

// Parses argv, dispatches, and maps triality::Error to exit code 2 with a
// one-line "<ErrorCode>: detail" reason on err.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace triality
