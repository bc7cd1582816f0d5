#ifndef MONKBENCH_HARNESS_CLI_HPP
#define MONKBENCH_HARNESS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace monkbench {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitBadInput = 2;

/// The monkbench command line. args excludes the program name. Errors go to
/// err; the exit code is kExitPass, kExitCheckFailure or kExitBadInput.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monkbench

#endif  // MONKBENCH_HARNESS_CLI_HPP
