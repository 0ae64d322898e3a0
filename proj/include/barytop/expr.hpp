#ifndef BARYTOP_EXPR_HPP
#define BARYTOP_EXPR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "barytop/budget.hpp"
#include "barytop/simplicial_set.hpp"

namespace barytop {

// Space expressions: S(k) | pt | RP2 | torus | surface(g) | wedge(e,e) |
// prod(e,e) | smash(e,e) | susp(e) | sp(n,e) | rsp(n,e) | bary(n,e) |
// symjoin2(e).  Fully parenthesized, no precedence.
struct SpaceExpr {
  enum class Kind {
    sphere, point, rp2, torus, surface,
    wedge, prod, smash, susp, sp, rsp, bary, symjoin2
  };
  Kind kind;
  long long param = 0;
  std::vector<SpaceExpr> args;
};

// Parse diagnostics carry a stable code ("syntax", "unknown-constructor",
// "arity", "range") and the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, std::size_t offset, const std::string& message)
      : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
        code_(std::move(code)),
        offset_(offset) {}
  const std::string& code() const { return code_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string code_;
  std::size_t offset_;
};

SpaceExpr parse_space_expr(const std::string& text);
std::string expr_to_string(const SpaceExpr& e);

struct RunConfig {
  int max_degree = -1;
  long long mod_p = 0;  // 0 = integral
  enum class Model { suspension, direct, both } model = Model::suspension;
  std::int64_t cell_budget = kDefaultCellBudget;
};

// A space together with the degree shift of the homology report (nonzero
// only for a top-level bary(...) under the suspension model).
struct EvalResult {
  SimplicialSet space;
  int degree_shift = 0;
};

EvalResult eval_space_expr(const SpaceExpr& e, const RunConfig& cfg);

}  // namespace barytop

#endif
