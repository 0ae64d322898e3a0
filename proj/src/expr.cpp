#include "barytop/expr.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "barytop/models.hpp"
#include "barytop/ops.hpp"
#include "barytop/spaces.hpp"

namespace barytop {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!eat(c))
      throw ParseError("syntax", pos, std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) throw ParseError("syntax", pos, "expected a constructor name");
    return text.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (text[start] == '-' && pos == start + 1))
      throw ParseError("syntax", start, "expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }

  SpaceExpr expr() {
    skip_ws();
    std::size_t at = pos;
    std::string name = ident();
    using K = SpaceExpr::Kind;
    if (name == "pt") return SpaceExpr{K::point, 0, {}};
    if (name == "RP2") return SpaceExpr{K::rp2, 0, {}};
    if (name == "torus") return SpaceExpr{K::torus, 0, {}};
    if (name == "S") {
      expect('(');
      std::size_t pat = pos;
      long long k = integer();
      expect(')');
      if (k < 1) throw ParseError("range", pat, "S(k): k must be >= 1");
      return SpaceExpr{K::sphere, k, {}};
    }
    if (name == "surface") {
      expect('(');
      std::size_t pat = pos;
      long long g = integer();
      expect(')');
      if (g < 0) throw ParseError("range", pat, "surface(g): g must be >= 0");
      return SpaceExpr{K::surface, g, {}};
    }
    if (name == "wedge" || name == "prod" || name == "smash") {
      K k = (name == "wedge") ? K::wedge : (name == "prod") ? K::prod : K::smash;
      expect('(');
      SpaceExpr a = expr();
      if (!eat(',')) throw ParseError("arity", pos, name + " takes two space arguments");
      SpaceExpr b = expr();
      expect(')');
      return SpaceExpr{k, 0, {std::move(a), std::move(b)}};
    }
    if (name == "susp" || name == "symjoin2") {
      K k = (name == "susp") ? K::susp : K::symjoin2;
      expect('(');
      SpaceExpr a = expr();
      skip_ws();
      if (pos < text.size() && text[pos] == ',')
        throw ParseError("arity", pos, name + " takes one space argument");
      expect(')');
      return SpaceExpr{k, 0, {std::move(a)}};
    }
    if (name == "sp" || name == "rsp" || name == "bary") {
      K k = (name == "sp") ? K::sp : (name == "rsp") ? K::rsp : K::bary;
      expect('(');
      std::size_t pat = pos;
      long long n = integer();
      if (n < 1) throw ParseError("range", pat, name + "(n, e): n must be >= 1");
      if (!eat(',')) throw ParseError("arity", pos, name + " takes (n, space)");
      SpaceExpr a = expr();
      expect(')');
      return SpaceExpr{k, n, {std::move(a)}};
    }
    throw ParseError("unknown-constructor", at, "unknown constructor '" + name + "'");
  }

  SpaceExpr parse() {
    SpaceExpr e = expr();
    skip_ws();
    if (pos != text.size())
      throw ParseError("syntax", pos, "trailing input after expression");
    return e;
  }
};

}  // namespace

SpaceExpr parse_space_expr(const std::string& text) { return Parser(text).parse(); }

std::string expr_to_string(const SpaceExpr& e) {
  using K = SpaceExpr::Kind;
  std::ostringstream os;
  switch (e.kind) {
    case K::point: return "pt";
    case K::rp2: return "RP2";
    case K::torus: return "torus";
    case K::sphere: os << "S(" << e.param << ")"; return os.str();
    case K::surface: os << "surface(" << e.param << ")"; return os.str();
    case K::wedge: return "wedge(" + expr_to_string(e.args[0]) + ", " + expr_to_string(e.args[1]) + ")";
    case K::prod: return "prod(" + expr_to_string(e.args[0]) + ", " + expr_to_string(e.args[1]) + ")";
    case K::smash: return "smash(" + expr_to_string(e.args[0]) + ", " + expr_to_string(e.args[1]) + ")";
    case K::susp: return "susp(" + expr_to_string(e.args[0]) + ")";
    case K::symjoin2: return "symjoin2(" + expr_to_string(e.args[0]) + ")";
    case K::sp: os << "sp(" << e.param << ", " << expr_to_string(e.args[0]) << ")"; return os.str();
    case K::rsp: os << "rsp(" << e.param << ", " << expr_to_string(e.args[0]) << ")"; return os.str();
    case K::bary: os << "bary(" << e.param << ", " << expr_to_string(e.args[0]) << ")"; return os.str();
  }
  return "?";
}

namespace {

SimplicialSet eval_inner(const SpaceExpr& e, const RunConfig& cfg) {
  using K = SpaceExpr::Kind;
  switch (e.kind) {
    case K::point: return point();
    case K::sphere: return minimal_sphere(static_cast<int>(e.param));
    case K::rp2: return rp2();
    case K::torus: return torus();
    case K::surface: return surface(static_cast<int>(e.param));
    case K::wedge: return wedge(eval_inner(e.args[0], cfg), eval_inner(e.args[1], cfg));
    case K::prod:
      return product(eval_inner(e.args[0], cfg), eval_inner(e.args[1], cfg),
                     cfg.cell_budget).space;
    case K::smash:
      return smash(eval_inner(e.args[0], cfg), eval_inner(e.args[1], cfg),
                   cfg.cell_budget);
    case K::susp: return suspension(eval_inner(e.args[0], cfg), cfg.cell_budget);
    case K::symjoin2:
      return symjoin2_cylinder_model(eval_inner(e.args[0], cfg), cfg.cell_budget);
    case K::sp:
      return symmetric_product(static_cast<int>(e.param), eval_inner(e.args[0], cfg),
                               cfg.cell_budget);
    case K::rsp:
      return reduced_symmetric_product(static_cast<int>(e.param),
                                       eval_inner(e.args[0], cfg), cfg.cell_budget);
    case K::bary: {
      // nested barycenter constructions need a shift-free model
      BarycenterModel B = barycenter_direct_model(static_cast<int>(e.param),
                                                  eval_inner(e.args[0], cfg),
                                                  cfg.cell_budget);
      return B.space;
    }
  }
  throw std::logic_error("eval: unhandled constructor");
}

}  // namespace

EvalResult eval_space_expr(const SpaceExpr& e, const RunConfig& cfg) {
  using K = SpaceExpr::Kind;
  if (e.kind == K::bary) {
    if (cfg.model == RunConfig::Model::direct) {
      BarycenterModel B = barycenter_direct_model(static_cast<int>(e.param),
                                                  eval_inner(e.args[0], cfg),
                                                  cfg.cell_budget);
      return EvalResult{std::move(B.space), 0};
    }
    BarycenterModel B = barycenter_suspension_model(static_cast<int>(e.param),
                                                    eval_inner(e.args[0], cfg),
                                                    cfg.cell_budget);
    return EvalResult{std::move(B.space), B.degree_shift};
  }
  return EvalResult{eval_inner(e, cfg), 0};
}

}  // namespace barytop
