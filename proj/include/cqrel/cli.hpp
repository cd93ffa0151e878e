#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cqrel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (arguments without the program name). JSON payloads
/// given as "-" are read from `in`. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cqrel::cli
