#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exinv::suites {

enum class CaseAlgebra { quat, cayley, exact };

struct CaseResult {
  std::string suite, name;
  long samples = 0;
  double max_error = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  long ms = 0;
};

struct CaseSpec {
  std::string suite, name;
  CaseAlgebra algebra = CaseAlgebra::exact;
  double tol = 0.0;
  long fixed_samples = -1;  // >= 0: enumeration size, overrides the budget
  std::function<double(long samples, std::uint64_t seed)> run;
};

const std::vector<std::string>& suite_names();
const std::vector<CaseSpec>& all_cases();

struct RunConfig {
  std::string suite = "all";
  long samples = 10000;
  std::uint64_t seed = 1;
  double tol_override = -1.0;    // < 0 keeps per-case defaults
  std::string algebra = "both";  // quat | cayley | both
};

bool known_suite(const std::string& name);

/// Runs the selected cases in canonical order. Deterministic for a fixed
/// config; the wall-time field is informational only.
std::vector<CaseResult> run_cases(const RunConfig& config);

}  // namespace exinv::suites
