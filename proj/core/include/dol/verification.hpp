#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dol/bogoliubov.hpp"
#include "dol/spectrum.hpp"

namespace dol {

struct VerifyOptions {
  double q = 1.1;
  double p = 1.0;
  int dim = 64;
  double tol = 1e-10;
  double kappa = 1.0;
};

/// One residual check. Checks whose spec tolerance differs from the base
/// 1e-10 keep their relative strictness when --tol rescales the suite.
/// mode "upper" passes when residual <= tolerance; "lower" marks negative
/// controls that must EXCEED the threshold; "diagnostic" entries are reported
/// but never gate the suite.
struct CheckEntry {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string mode = "upper";
  std::string status;  // pass | fail | diagnostic
};

struct VerificationReport {
  std::string tool = "dol";
  std::string version;
  std::string timestamp;
  VerifyOptions options;
  std::vector<std::string> notes;
  std::vector<CheckEntry> entries;
  ConstraintTable constraints;

  bool all_passed() const;
  std::string to_json() const;
};

/// Runs every residual suite of the library at the given parameter point and
/// at the handful of pinned reference points the checks prescribe.
VerificationReport run_verification(const VerifyOptions& opts);

}  // namespace dol
