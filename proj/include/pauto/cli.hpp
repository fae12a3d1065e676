#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pauto {

/// Exit codes: 0 success or a true verdict, 1 a false verdict or an
/// obstruction (still a valid run), 2 input errors.
struct CommandResult {
  std::string out;
  std::string err;
  int exit_code = 0;
};

/// Runs one command line (without the program name). `stdin_stream` is read
/// for `--manifest -`.
CommandResult run_command(const std::vector<std::string>& args, std::istream& stdin_stream);

}  // namespace pauto
