#pragma once

#include <iosfwd>

namespace diagcover::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFails = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

// Runs one invocation; argv[0] is the program name.
int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace diagcover::cli
