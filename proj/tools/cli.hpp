#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gensol::cli {

/// Exit codes: 0 success or certified, 1 certification or property failure,
/// 2 usage or input error.
enum Exit : int { kOk = 0, kFailed = 1, kBadInput = 2 };

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gensol::cli
