// Command-line front end. Kept separate from main() so tests can drive it
// in-process.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kmw::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kPrecondition = 2,
    kMismatch = 3,
};

/// `args` excludes the program name. JSON (or text) goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmw::cli
