#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mechsynth::cli {

/// Exit codes.
enum Exit : int { Ok = 0, Rejected = 1, Usage = 2, Internal = 3 };

/// Runs one command. args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mechsynth::cli
