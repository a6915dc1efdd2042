#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qfkg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitHolds = 0,
  kExitFailed = 1,
  kExitUsage = 2,
};

/// Runs the qfkg command line; args excludes the program name. The report
/// goes to `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human rendering of a JSON report: indented key/value lines, integral
/// rationals shown without "/1".
std::string render_human(const std::string& json_text);

}  // namespace qfkg
