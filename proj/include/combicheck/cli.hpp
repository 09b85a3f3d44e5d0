#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "combicheck/poset.hpp"

namespace combicheck {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Reads {"n": N, "covers": [[i, j], ...]}. Throws PosetError(parse) for
/// unreadable or malformed files and PosetError(cyclic) for cyclic covers.
Poset load_poset(const std::string& path);
Poset poset_from_json_text(const std::string& text);

/// Runs one command line (without the program name). Returns 0 when every
/// report is verified or skipped, 1 on a counterexample and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combicheck
