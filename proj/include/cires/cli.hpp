#ifndef CIRES_CLI_HPP
#define CIRES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cires {

inline constexpr const char* kToolVersion = "cires 0.1.0";
inline constexpr const char* kCacheEnvVar = "CIRES_CACHE";

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitError = 2 };

/// Runs the command line `args` (without the program name). Artifacts go to
/// `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cires

#endif
