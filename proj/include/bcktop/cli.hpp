#pragma once

#include <iosfwd>

namespace bcktop::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // a check did not hold, or the instance is invalid
  kUsage = 2,   // bad arguments, unknown names, unreadable file
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bcktop::cli
