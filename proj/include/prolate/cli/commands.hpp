#pragma once

#include <string>

#include "prolate/cli/config.hpp"

namespace prolate::cli {

/// Exit codes:
///   0 success
///   1 config, parse or input errors (including PoleOnContour, InvalidContour)
///   2 exact identity failures (FactorizationFails and other certificate
///     failures, DualFactorizationFails, BoundViolated)
///   3 NoNonconstantSolution or SearchBudgetExceeded
///   4 commutator residual above tolerance
///   5 internal consistency failure (NotSymmetricGenerator)
int exit_code_for(ErrorCode code);

struct CommandResult {
  int exit_code = 0;
  /// Deterministic report written to stdout.
  std::string report;
  /// Diagnostics for stderr.
  std::string diagnostics;
};

CommandResult cmd_verify(const JobConfig& job);
CommandResult cmd_dims(const JobConfig& job);
CommandResult cmd_solve(const JobConfig& job);
CommandResult cmd_eval(const JobConfig& job);

/// Loads the config, applies overrides and runs the subcommand, turning
/// exceptions into exit codes.
CommandResult run(const std::string& command, const std::string& config_path, const Overrides& o);

}  // namespace prolate::cli
