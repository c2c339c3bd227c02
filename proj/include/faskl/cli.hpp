#ifndef FASKL_CLI_HPP
#define FASKL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace faskl::cli {

// Exit codes: 0 success, 2 flag/parameter error, 3 numerical error, 4 I/O.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Run the experiment CLI. args excludes the program name. CSV tables go to
/// `out` unless --out redirects them to a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faskl::cli

#endif  // FASKL_CLI_HPP
