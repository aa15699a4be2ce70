#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittorders::cli {

inline constexpr const char* kToolName = "wittorders";
inline constexpr const char* kVersion = "0.1.0";
// Version of the JSON document formats described in docs/formats.md.
inline constexpr int kSchemaVersion = 1;

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;
inline constexpr int kInputError = 2;
inline constexpr int kUndecided = 3;

// Runs one command line (without the program name). The JSON report goes to
// `out` (or to --output), diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittorders::cli
