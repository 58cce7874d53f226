#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropfan {

enum ExitCode : int { kOk = 0, kInputError = 2, kPreconditionFailure = 3, kInternalError = 4 };

// Entry point of the command-line tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropfan
