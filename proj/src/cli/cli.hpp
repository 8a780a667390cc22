#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jh::cli {

// Exit codes: 0 on success (including empty results), 1 for usage, parse and
// domain errors, 2 when a value leaves the supported integer range.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRange = 2;

// args excludes the program name. Output is written only when the whole
// command succeeds.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jh::cli
