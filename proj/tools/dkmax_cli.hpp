// dkmax_cli.hpp
// Command dispatch for the dkmax executable, kept in a library so tests can
// drive it with in-memory streams.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dkmax::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsageError = 2 };

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dkmax::cli
