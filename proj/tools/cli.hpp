#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgnlab::cli {

// Exit codes. verify uses accept/reject; every command returns usage_error
// for malformed input, and failed for an operation that ran but could not
// produce a result (e.g. nothing to extract, curve setup exhausted).
inline constexpr int kOk = 0;
inline constexpr int kReject = 1;
inline constexpr int kFailed = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs the property suites at (p, q) = (5, 7) and (3, 5) on both backends.
// Prints one line per check; returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace bgnlab::cli
