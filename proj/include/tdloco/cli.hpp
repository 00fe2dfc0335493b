#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdloco::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kVerifyFailed = 3,
};

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdloco::cli
