#pragma once

// Command-line front end.  run_cli is a library function so the whole
// interface is exercisable in-process by tests; the installed binary is a
// thin wrapper around it.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tridyn {

// Parsed run parameters shared across subcommands.
struct RunConfig {
    std::string command;
    std::string map;
    std::vector<double> angles;
    double alpha = 0.0;
    double beta = 0.0;
    bool exterior = false;
    std::size_t max_iters = 10000;
    double tol = 0.0;  // 0 = per-map default
    int samples = 1000;
    std::uint64_t seed = 42;
    std::string output_path;
    std::string format = "csv";
    bool degrees = false;
};

// Executes one subcommand.  Returns 0 on success, 1 on invalid input or
// usage, 2 when a verification suite reports failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tridyn
