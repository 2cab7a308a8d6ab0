#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mst {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Pass/fail checks (dimensions, dichotomies) carry residual 0 or 1.
  bool boolean = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double max_residual = 0.0;
  bool passed = true;
};

/// rational, blaschke, model, operators, dual, wh
const std::vector<std::string>& suite_names();

/// Runs one module's invariant suite. tol_override replaces the tolerance of
/// every residual check (not the pass/fail ones). Throws InvalidArgument for an
/// unknown suite name.
SuiteReport run_suite(const std::string& name, std::optional<double> tol_override = std::nullopt,
                      unsigned seed = 20240501);

}  // namespace mst
