#pragma once

// Command-line front end: analyze, compare, classify, sweep, bench, dump.
// Exit codes: 0 success, 1 internal error, 2 usage or configuration error.

#include <iosfwd>
#include <string>
#include <vector>

namespace sca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sca::cli
