#pragma once

#include "run_config.hpp"

#include <string>

namespace majorana::cli {

/// Outcome of a command: the summary written to disk and the exit status.
struct CommandResult {
  int status = 0;
  std::string summary;  // JSON text
};

/// Each command writes its artifacts below config.output.directory.
CommandResult run_verify_command(const RunConfig& config);
CommandResult run_evolve(const RunConfig& config);
CommandResult run_transform(const RunConfig& config);
CommandResult run_spectrum(const RunConfig& config);

CommandResult run_command(const RunConfig& config);

}  // namespace majorana::cli
