#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnested::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kOracleMismatch = 2, kIo = 3 };

/// Runs one command. `args` excludes the program name; `in` is read when no
/// input file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bnested::cli
