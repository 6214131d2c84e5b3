#pragma once

#include <string>
#include <vector>

namespace polyberg::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  double runtime_s = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool verdict() const;
};

// Suites: "specfun", "spectral", "algebra".  tol_scale multiplies every
// check's tolerance.  Unknown suite: std::domain_error.
SuiteReport run_suite(const std::string& name, double tol_scale = 1.0);
std::vector<SuiteReport> run_all(double tol_scale = 1.0);

}  // namespace polyberg::verify
