#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lamcf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (args excludes the program name). JSON goes to
/// `out`, human-readable summaries to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamcf::cli
