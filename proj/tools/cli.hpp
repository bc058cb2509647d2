#pragma once

#include <iosfwd>

namespace nctk::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2 };

// Runs one nctk command line; output and diagnostics go to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nctk::cli
