#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcdom::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // usage or parse error
inline constexpr int kExitValidation = 2;  // validation / verification failure
inline constexpr int kExitResource = 3;    // resource guard

/// Runs one bcdom invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcdom::cli
