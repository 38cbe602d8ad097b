#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not found, bound violated, verification failures
inline constexpr int kExitError = 2;     // usage or I/O error

/// Runs one `itg` command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Floating output format: 10 significant digits, integral values keep a
/// trailing ".0".
std::string format_real(double x);

}  // namespace itg::cli
