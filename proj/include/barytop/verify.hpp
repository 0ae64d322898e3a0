#ifndef BARYTOP_VERIFY_HPP
#define BARYTOP_VERIFY_HPP

#include <string>
#include <vector>

#include "barytop/budget.hpp"

namespace barytop {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  bool skipped = false;  // construction exceeded the cell budget
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::int64_t cell_budget = kDefaultCellBudget;
};

std::vector<std::string> verify_suite_names();

// Runs one suite ("all" runs every suite).  A skipped check does not fail
// the suite; any hard failure does.
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace barytop

#endif
