#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "pmcount/graph.hpp"

namespace pmcount::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse_error = 2,
    exit_precondition = 3,
    exit_size_limit = 4,
    exit_violation = 5,
    exit_numerical = 6,
};

/// Environment variable that overrides the default vertex guard of the
/// exponential routes (brute force, cycle enumeration).
inline constexpr const char* guard_env_var = "PMCOUNT_MAX_VERTICES";

/// "path:N", "cycle:N", "tree-random:N:SEED", or a path to an edge-list file.
Graph parse_graph_spec(const std::string& spec);

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`; returns the process exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pmcount::cli
