#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPrecondition = 3;

// Runs one command line (without the program name); results go to `out`,
// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifc::cli
