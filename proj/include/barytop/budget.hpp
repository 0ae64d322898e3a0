#ifndef BARYTOP_BUDGET_HPP
#define BARYTOP_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace barytop {

inline constexpr std::int64_t kDefaultCellBudget = 5'000'000;

// Thrown when a construction would exceed the configured cell budget.
// Carries the census accumulated so far for diagnostics.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string what, std::vector<std::int64_t> partial_census)
      : std::runtime_error(std::move(what)), partial_census_(std::move(partial_census)) {}
  const std::vector<std::int64_t>& partial_census() const { return partial_census_; }

 private:
  std::vector<std::int64_t> partial_census_;
};

}  // namespace barytop

#endif
