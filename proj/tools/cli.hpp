#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricreg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInconclusive = 2,
  kInternal = 3,
};

/// Runs one invocation; args excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricreg::cli
