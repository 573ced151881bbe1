#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brooks {

/// Process exit codes of the `brooks` tool.
enum class ExitStatus : int {
  ok = 0,
  usage_or_io = 1,
  infeasible = 2,
  not_applicable = 3,
  internal_failure = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`; the first line written to `err` is always `status=<word>`.
ExitStatus run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brooks
