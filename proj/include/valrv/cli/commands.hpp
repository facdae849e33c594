#pragma once

// Subcommand dispatch. Exit codes: 0 Holds / success, 1 Fails,
// 2 Unknown / indeterminate, 3 usage or parse error.

#include <string>
#include <vector>

#include "valrv/cli/config.hpp"
#include "valrv/cli/format.hpp"

namespace valrv::cli {

enum ExitCode : int { kOk = 0, kFails = 1, kUnknown = 2, kUsage = 3 };

struct CommandOutput {
  int exit_code = kOk;
  std::string text;
  Json json;
};

struct SubcommandInfo {
  std::string name;
  std::string usage;
  std::string summary;
};

const std::vector<SubcommandInfo>& subcommands();

/// Runs one subcommand; library errors are caught and mapped to exit codes.
CommandOutput run(const std::string& command, const std::vector<std::string>& args, const SessionConfig& cfg);

/// The text or JSON rendering that the executable prints.
std::string render(const CommandOutput& out, bool json);

/// Parses {"f": ..., "gens": [{"n": .., "b": .., "h": ..}]}, given inline or
/// as a path to a file holding it.
TameExtensionData parse_tame_data(const std::string& source, const FieldSpec& spec);

}  // namespace valrv::cli
