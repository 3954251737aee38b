#pragma once

#include "betatet/core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace betatet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSentinel = 3;

/// Parses "a+bi", "a-bi", "a", "bi" (and "i", "-i"); no spaces, scientific
/// notation allowed in either part. Throws std::invalid_argument.
cplx parse_complex(const std::string& text);

/// "<re>+<im>i" / "<re>-<im>i" with `digits` significant digits.
std::string format_complex(cplx z, int digits = 15);

/// Run one subcommand. args excludes the program name. Results go to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betatet::cli
