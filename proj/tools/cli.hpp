#ifndef DICHRO_TOOLS_CLI_HPP
#define DICHRO_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dichro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dichro::cli

#endif  // DICHRO_TOOLS_CLI_HPP
