#ifndef SUBPAL_TOOLS_CLI_HPP
#define SUBPAL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace subpal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

/// Entry point shared by the executable and the tests. `args[0]` is the
/// program name. Standard input for `run` without a FILE comes from `in`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err);

} // namespace subpal::cli

#endif // SUBPAL_TOOLS_CLI_HPP
