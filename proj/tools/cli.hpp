#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace szt::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommandInfo {
  std::string name;                     // "tree rank"
  std::vector<std::string> operations;  // "tree::rank_tree", ...
  std::vector<std::string> example;     // arguments that exercise the command
};

/// Every subcommand with the library operations it reaches.
const std::vector<CommandInfo>& command_table();

}  // namespace szt::cli
