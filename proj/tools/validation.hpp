#pragma once

#include <string>
#include <vector>

namespace wedgecp::cli {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

/// Runs the acceptance checks in-process.
std::vector<CheckResult> run_validation();

/// {"passed": bool, "checks": [...]} with one entry per check.
std::string validation_report_json(const std::vector<CheckResult>& checks);

}  // namespace wedgecp::cli
