#ifndef TORILINK_VERIFY_HPP
#define TORILINK_VERIFY_HPP

#include <string>
#include <vector>

namespace torilink {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // short fact when passing, mismatch when failing
};

// Names of all claim checks, in report order.
std::vector<std::string> check_names();

// Runs one named check; throws std::invalid_argument for unknown names.
// Exceptions inside the check are converted into a failing result.
CheckResult run_check(const std::string& name);

std::vector<CheckResult> run_all_checks();

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// The ten gate criteria.  Criteria 6 and 10 contain exhaustive sweeps and
// randomized property suites; the seed fixes the random parts.
std::vector<CriterionResult> run_acceptance(unsigned seed = 20260823);

}  // namespace torilink

#endif
