#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bpapprox {

/// One verification check: an observed value against its target, with the
/// tolerance that was applied.
struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double expected = 0.0;
  double tol = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct VerifyParams {
  double tolerance = 1e-9;      ///< sidedness grid tolerance
  unsigned grid = 4096;         ///< sidedness grid size
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

/// Available suites: extremal, interp, l1, poisson, lehmer, zeta.
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite ("all" runs every suite concatenated).
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyParams& params);

}  // namespace bpapprox
