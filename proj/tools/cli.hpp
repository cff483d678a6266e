#ifndef DEFCOH_TOOLS_CLI_HPP
#define DEFCOH_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace defcoh::cli {

inline constexpr int exit_true = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_internal_error = 3;

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace defcoh::cli

#endif // DEFCOH_TOOLS_CLI_HPP
