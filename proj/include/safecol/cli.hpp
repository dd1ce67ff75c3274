#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace safecol {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;      // bad arguments, malformed JSON, refused input
inline constexpr int kExitInternal = 3;   // the extension engine hit an impossible state

/// Runs one subcommand. args excludes the program name. Results go to `out` as JSON
/// (JSON-lines for streams); errors are JSON too, also on `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace safecol
