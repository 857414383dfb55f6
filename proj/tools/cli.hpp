#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracpos::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` (or --output), diagnostics to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "start:stop:count" into an inclusive linear grid.
/// Throws ParseError when malformed.
std::vector<double> parse_grid(const std::string& text);

}  // namespace fracpos::cli
