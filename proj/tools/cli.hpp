#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simplexwidth::cli {

/// Exit codes: 0 success, 1 check failure or runtime error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct Options {
    bool color = false;
};

/// Runs `simplexwidth <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options options = {});

}  // namespace simplexwidth::cli
