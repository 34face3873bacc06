#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phigroup::cli {

enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phigroup::cli
