#ifndef DCOSET_CLI_HPP
#define DCOSET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dcoset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// Runs one command; `args` excludes the program name. Verdicts are
/// written to `out` and never change the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcoset::cli

#endif  // DCOSET_CLI_HPP
