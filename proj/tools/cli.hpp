#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jumpnum::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 bad input, 2 oracle disagreement.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumpnum::cli
