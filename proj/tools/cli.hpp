#ifndef SEMIFORGE_TOOLS_CLI_HPP_
#define SEMIFORGE_TOOLS_CLI_HPP_

#include <iosfwd>  // for ostream

namespace semiforge::cli {

  enum ExitCode : int { ok = 0, usage_error = 1, cap_exceeded = 2 };

  // Runs one subcommand. The JSON result goes to out, diagnostics to err.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semiforge::cli

#endif  // SEMIFORGE_TOOLS_CLI_HPP_
