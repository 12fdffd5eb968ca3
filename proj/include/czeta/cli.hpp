#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace czeta::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kConvergence = 3 };

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.17g" with negative zero printed as 0.
std::string format17(double x);

}  // namespace czeta::cli
