#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nda::cli {

/// Runs `nondet-agg` with `args` (excluding the program name). Reports go
/// to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 all checks pass (or hypothesis-not-met / skipped), 1 a check failed,
/// 2 usage, parse, guard or evaluation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nda::cli
