#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circdual::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvariantViolation = 1;
inline constexpr int kUsage = 2;

// Parses argv and runs one subcommand. Artifacts go to --out when given,
// otherwise to `out`; usage text and error reports go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circdual::cli
