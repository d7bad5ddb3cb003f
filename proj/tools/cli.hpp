#pragma once

// The `lg` command, callable in-process. Exit codes: 0 ok, 1 a proof or
// derivation fails to check, 2 a parse error or a non-pattern problem,
// 3 a stratification or well-formedness error, 4 an internal error.

#include <iosfwd>
#include <string>
#include <vector>

namespace lg::cli {

enum Exit : int { kOk = 0, kViolation = 1, kParse = 2, kStrat = 3, kInternal = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lg::cli
