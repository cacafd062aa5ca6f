#ifndef ELASTIC_TOOLS_CLI_HPP
#define ELASTIC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace elastic::cli {

// Exit codes shared by every command.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. The JSON report goes to `out`, diagnostics to `err`.
/// Always returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of the given file contents, each length-prefixed.
std::string inputs_digest(const std::vector<std::string>& contents);

}  // namespace elastic::cli

#endif  // ELASTIC_TOOLS_CLI_HPP
