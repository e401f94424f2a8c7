#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// as JSON (default) or CSV, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohgeom::cli
