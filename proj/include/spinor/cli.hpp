#pragma once

// Batch front-end: subcommands quiver, verify, classes, config.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace spinor::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceCap = 3 };

// args excludes the program name. Output goes to `out` unless --output names
// a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Thread cap from SPINOR_LAB_THREADS; 0 means unset. Throws ArgumentError
// on a value that is not a positive integer.
int threads_from_environment();

}  // namespace spinor::cli
