#pragma once

#include "run_config.hpp"

#include <string>
#include <vector>

namespace majorana::cli {

struct CheckResult {
  std::string id;
  std::string identity;  // the relation being measured
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> skipped;
  bool pass = false;

  std::string to_json() const;
};

/// Runs the Clifford, Lorentz, Fourier, angular and Hankel suites at the
/// resolution given by the config. A check passes when measured ≤ tolerance.
/// Throws ConfigError when a tolerance override names an unknown check.
VerifyReport run_verify(const RunConfig& config);

}  // namespace majorana::cli
