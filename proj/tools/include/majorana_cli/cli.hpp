#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majorana::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kNumerical = 3, kIo = 4 };

// Runs the command line (args excludes the program name). Payloads go to
// `out` unless --output names a file; "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace majorana::cli
