#include <doctest.h>

#include <stdexcept>

#include "barytop/expr.hpp"
#include "barytop/homology.hpp"
#include "barytop/models.hpp"
#include "barytop/spaces.hpp"

using namespace barytop;

TEST_CASE("parse and print round-trip") {
  for (const std::string& s :
       {"pt", "RP2", "torus", "S(3)", "surface(2)", "wedge(S(1), S(2))",
        "prod(S(1), S(1))", "smash(S(1), RP2)", "susp(torus)", "sp(2, S(1))",
        "rsp(3, susp(torus))", "bary(2, S(1))", "symjoin2(S(2))",
        "bary(2, wedge(S(1), S(1)))"}) {
    SpaceExpr e = parse_space_expr(s);
    CHECK(expr_to_string(e) == s);
    // printing then parsing again is the identity
    CHECK(expr_to_string(parse_space_expr(expr_to_string(e))) == s);
  }
}

TEST_CASE("whitespace is ignored, printing normalizes") {
  SpaceExpr e = parse_space_expr("  bary( 2 ,S( 1 ) ) ");
  CHECK(expr_to_string(e) == "bary(2, S(1))");
}

TEST_CASE("diagnostics carry codes and byte offsets") {
  auto expect_code = [](const std::string& text, const std::string& code) {
    try {
      parse_space_expr(text);
      FAIL_CHECK("no diagnostic for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.code() == code);
      CHECK(e.offset() <= text.size());
    }
  };
  expect_code("gary(2, S(1))", "unknown-constructor");
  expect_code("bary(0, S(1))", "range");
  expect_code("S(0)", "range");
  expect_code("surface(-1)", "range");
  expect_code("wedge(S(1))", "arity");
  expect_code("susp(S(1), S(2))", "arity");
  expect_code("bary(2 S(1))", "arity");
  expect_code("bary(2, S(1)) extra", "syntax");
  expect_code("", "syntax");
}

TEST_CASE("evaluation matches the direct constructions") {
  RunConfig cfg;
  EvalResult r = eval_space_expr(parse_space_expr("prod(S(1), S(1))"), cfg);
  CHECK(r.degree_shift == 0);
  CHECK(integral_homology(r.space).same_groups(integral_homology(torus())));

  EvalResult b = eval_space_expr(parse_space_expr("bary(2, S(1))"), cfg);
  CHECK(b.degree_shift == 1);

  RunConfig direct;
  direct.model = RunConfig::Model::direct;
  EvalResult bd = eval_space_expr(parse_space_expr("bary(2, S(1))"), direct);
  CHECK(bd.degree_shift == 0);
  HomologyProfile H = integral_homology(bd.space);
  CHECK(H.groups[3] == HomologyGroup{1, {}});

  // nested barycenter constructors always evaluate through the direct model
  EvalResult nested = eval_space_expr(parse_space_expr("susp(bary(2, S(1)))"), cfg);
  CHECK(nested.degree_shift == 0);
  CHECK(integral_homology(nested.space).groups[4] == HomologyGroup{1, {}});
}

TEST_CASE("euler of expressions") {
  RunConfig cfg;
  EvalResult r = eval_space_expr(parse_space_expr("bary(2, torus)"), cfg);
  std::int64_t chi_model = euler_from_census(r.space);
  std::int64_t chi = (r.degree_shift == 1) ? 2 - chi_model : chi_model;
  CHECK(chi == 0);
}
