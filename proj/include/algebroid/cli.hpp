#pragma once

#include <ostream>

namespace algebroid {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitNotStabilized = 3,
  kExitUsage = 64,
  kExitParse = 65,
};

/// Line separating the human table from the JSON report on stdout.
inline constexpr const char* kReportSeparator = "--- report.json ---";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace algebroid
