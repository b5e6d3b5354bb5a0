#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cpt {

enum ExitCode : int {
    exit_ok = 0,
    exit_invalid = 1,
    exit_budget = 2,
    exit_theorem = 3,
};

/// Runs one CLI invocation; args excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpt
