#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgspec::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitIo = 3;

/// Runs one command line (args excludes the program name) and returns the
/// exit code. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.12g" with negative zero printed as 0.
std::string format_real(double v);

}  // namespace sgspec::cli
