#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pie::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by main() and the tests. `args` excludes the program
/// name. Flags override PIE_* environment variables, which override built-ins.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1.5", "-2", "0.5+0.5i", "2-i", "i". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

/// "2/3", "-1", "0.25". Throws std::invalid_argument.
mpq_class parse_rational(std::string_view text);

}  // namespace pie::cli
