#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fdebt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAnalysisError = 1;
inline constexpr int kExitUsage = 2;

/// The fdebt command line. `args` excludes the program name. Results go to
/// `out` (or to the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdebt
