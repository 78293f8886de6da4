#pragma once

#include <iosfwd>

namespace siwkb::cli {

enum ExitCode : int {
  ok = 0,
  runtime_failure = 1,
  usage = 2,
  validation = 3,
  verification = 4,
};

/// Parses argv and runs the chosen subcommand. Reports go to `out` (or the
/// --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace siwkb::cli
