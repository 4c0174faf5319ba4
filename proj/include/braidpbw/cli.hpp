#pragma once

#include "braidpbw/json_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace braidpbw {

enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_input_error = 2, exit_resource_cap = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::size_t degree_cap = 4;
  bool nichols = false;
  bool right = false;
  bool exact = false;
  bool json = false;
  std::uint64_t seed = 20240607;
  int threads = 0;
  unsigned module_n = 1;
  std::string output;
};

/// Result of one command: the JSON document, its text rendering and the exit
/// code. Both renderings are built from the same verdicts.
struct CommandResult {
  Json json;
  std::string text;
  int exit_code = exit_ok;
};

CommandResult cmd_check(const RunConfig& cfg);
CommandResult cmd_pbw(const RunConfig& cfg);
CommandResult cmd_nichols(const RunConfig& cfg);
CommandResult cmd_verify_paper(const RunConfig& cfg);
CommandResult cmd_export_uqsl2(const RunConfig& cfg);

/// Parses arguments, runs the command and maps exceptions to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace braidpbw
