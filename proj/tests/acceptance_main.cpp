// Acceptance gate: runs every criterion and prints one line per check.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "barytop/verify.hpp"

int main(int argc, char** argv) {
  barytop::VerifyOptions opt;
  if (const char* s = std::getenv("BARYTOP_CELL_BUDGET")) opt.cell_budget = std::atoll(s);
  if (argc > 1) opt.cell_budget = std::atoll(argv[1]);

  std::vector<barytop::CheckResult> results =
      barytop::run_verify_suite("acceptance", opt);
  std::size_t failures = 0;
  for (const barytop::CheckResult& r : results) {
    std::cout << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << "  " << r.name
              << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
    if (!r.detail.empty()) std::cout << "  -- " << r.detail;
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() << " acceptance criteria, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}
