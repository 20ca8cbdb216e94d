#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace gl2q::cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kVerificationFailed = 2 };

struct RunResult {
  int exit_code = kUsage;
  Json report;         // null when parsing failed or help was requested
  std::string output;  // --out path, empty for stdout
  std::string message; // usage or error text
};

/// Parses `args` (without the program name), dispatches and builds the report.
/// Never throws; errors become exit code 1 with a message.
RunResult run(const std::vector<std::string>& args);

}  // namespace gl2q::cli
