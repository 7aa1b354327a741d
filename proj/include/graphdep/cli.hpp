#pragma once

#include <ostream>

namespace graphdep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitScale = 2;
inline constexpr int kExitVerification = 3;

/// Data goes to `out` (or --output), diagnostics to `err` only.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphdep::cli
