#pragma once

#include <optional>
#include <string>

#include "toric/report.hpp"
#include "toric/verify.hpp"

namespace toric {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMalformed = 3;

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

CommandResult cmd_validate(const std::string& content);
CommandResult cmd_cox(const std::string& content);
/// `degree` is a comma-separated integer vector; defaults to the anticanonical class.
CommandResult cmd_euler(const std::string& content, const std::optional<std::string>& degree);
CommandResult cmd_reconstruct(const std::string& content);
CommandResult cmd_verify(const std::string& content, const VerifyOptions& opts = {});

/// Dispatches on the subcommand name; unknown names are a parse error.
CommandResult run_command(const std::string& command, const std::string& content,
                          const std::optional<std::string>& degree);

}  // namespace toric
