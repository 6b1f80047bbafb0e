#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace manin::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInputError = 2 };

struct CommandInfo {
  std::string command;
  std::string subaction;
  std::string summary;
  // Library operations this subcommand exercises.
  std::vector<std::string> operations;
};

// Every subcommand the tool accepts.
const std::vector<CommandInfo>& command_table();

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace manin::cli
