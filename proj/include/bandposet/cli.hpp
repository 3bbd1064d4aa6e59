#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bandposet {

/// Exit codes: 0 when a decision was computed (NO included), 1 for bad
/// input, 2 when an internal invariant breaks.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInvariant = 2;

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bandposet
