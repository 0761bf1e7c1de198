#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liemod::cli {

/// Exit codes: 0 true/ok, 1 false, 2 usage or input error, 3 inconclusive.
enum Exit : int { Ok = 0, False = 1, Usage = 2, Inconclusive = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liemod::cli
