#pragma once

#include <string>
#include <vector>

namespace lpcert::cli {

/// Process exit statuses.
enum ExitCode : int {
  kVerified = 0,      // verified / proved / consistent
  kFalsified = 1,     // falsified / violated
  kInconclusive = 2,  // precision cap reached
  kUsage = 3,         // input or usage error
};

struct CommandResult {
  int exit_code = kUsage;
  std::string output;       // report payload (JSON or text)
  std::string diagnostics;  // human-oriented messages, never part of the report
};

/// Runs one command; args excludes the program name. Never throws.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace lpcert::cli
