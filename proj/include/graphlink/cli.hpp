#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace graphlink {

/// Exit codes of the command-line interface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // selftest found a failing property
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitPrecondition = 4;

struct CommandOutput {
    std::string out;
    std::string err;
    int exit_code = kExitOk;
};

/// Runs one CLI invocation. `args` excludes the program name; a file
/// argument of "-" reads `stdin_text`.
[[nodiscard]] CommandOutput run_command(const std::vector<std::string>& args, std::string_view stdin_text = {});

}  // namespace graphlink
