#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "barytop/admissible.hpp"
#include "barytop/expr.hpp"
#include "barytop/homology.hpp"
#include "barytop/models.hpp"
#include "barytop/series.hpp"
#include "barytop/spaces.hpp"
#include "barytop/sphere_series.hpp"
#include "barytop/verify.hpp"

namespace {

using namespace barytop;

std::int64_t env_budget() {
  if (const char* s = std::getenv("BARYTOP_CELL_BUDGET")) {
    try {
      return std::stoll(s);
    } catch (...) {
      std::cerr << "warning: ignoring malformed BARYTOP_CELL_BUDGET\n";
    }
  }
  return kDefaultCellBudget;
}

nlohmann::json profile_json(const HomologyProfile& H) {
  return nlohmann::json::parse(homology_to_json(H));
}

int cmd_homology(const std::string& expr_text, long long mod_p, int max_dim,
                 const std::string& model, std::int64_t budget, bool as_json) {
  RunConfig cfg;
  cfg.mod_p = mod_p;
  cfg.max_degree = max_dim;
  cfg.cell_budget = budget;
  cfg.model = (model == "direct") ? RunConfig::Model::direct
              : (model == "both") ? RunConfig::Model::both
                                  : RunConfig::Model::suspension;
  SpaceExpr e = parse_space_expr(expr_text);

  auto run_one = [&](RunConfig::Model m) {
    RunConfig c = cfg;
    c.model = m;
    EvalResult ev = eval_space_expr(e, c);
    nlohmann::json out;
    out["schema"] = 1;
    out["expr"] = expr_to_string(e);
    out["model"] = (m == RunConfig::Model::direct) ? "direct" : "suspension";
    int want = (max_dim >= 0) ? max_dim : ev.space.dim() - ev.degree_shift;
    if (ev.degree_shift == 0 && e.kind != SpaceExpr::Kind::bary) {
      if (mod_p == 0) {
        HomologyProfile H = integral_homology(ev.space, want);
        out["homology"] = profile_json(H);
        if (!as_json) std::cout << homology_to_text(H);
      } else {
        PoincareSeries s = betti_mod_p(ev.space, mod_p, want);
        out["poincare"] = nlohmann::json::parse(series_to_json(s));
        if (!as_json) {
          std::cout << "mod-" << mod_p << " Betti numbers:";
          for (long long c2 : s.coeffs) std::cout << " " << c2;
          std::cout << "\n";
        }
      }
    } else {
      BarycenterModel B;
      B.kind = (m == RunConfig::Model::direct) ? BarycenterModel::Kind::direct
                                               : BarycenterModel::Kind::suspension;
      B.space = std::move(ev.space);
      B.degree_shift = ev.degree_shift;
      B.n = static_cast<int>(e.param);
      if (mod_p == 0) {
        HomologyProfile H = barycenter_homology(B, max_dim);
        out["homology"] = profile_json(H);
        if (!as_json) std::cout << homology_to_text(H);
      } else {
        PoincareSeries s = barycenter_betti_mod_p(B, mod_p, max_dim);
        out["poincare"] = nlohmann::json::parse(series_to_json(s));
        if (!as_json) {
          std::cout << "mod-" << mod_p << " Betti numbers:";
          for (long long c2 : s.coeffs) std::cout << " " << c2;
          std::cout << "\n";
        }
      }
    }
    if (as_json) std::cout << out.dump() << "\n";
  };

  if (cfg.model == RunConfig::Model::both && e.kind == SpaceExpr::Kind::bary) {
    run_one(RunConfig::Model::suspension);
    run_one(RunConfig::Model::direct);
  } else if (cfg.model == RunConfig::Model::both) {
    run_one(RunConfig::Model::suspension);
  } else {
    run_one(cfg.model);
  }
  return 0;
}

int cmd_euler(const std::string& expr_text, std::int64_t budget, bool as_json) {
  SpaceExpr e = parse_space_expr(expr_text);
  RunConfig cfg;
  cfg.cell_budget = budget;
  EvalResult ev = eval_space_expr(e, cfg);
  std::int64_t chi_model = euler_from_census(ev.space);
  std::int64_t chi = (ev.degree_shift == 1) ? 2 - chi_model : chi_model;
  if (as_json) {
    nlohmann::json out;
    out["schema"] = 1;
    out["expr"] = expr_to_string(e);
    out["euler"] = chi;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << chi << "\n";
  }
  return 0;
}

int cmd_poincare(int n, int k, long long p, int dmax, const std::string& source,
                 std::int64_t budget, bool as_json) {
  PoincareSeries symbolic, brute;
  bool have_symbolic = false, have_brute = false;
  if (source == "symbolic" || source == "both") {
    if (p == 2)
      symbolic = barycenter_sphere_series_mod2(n, k, dmax);
    else if (p > n && n > 1)
      symbolic = barycenter_sphere_large_p(n, k, p, dmax);
    else if (k == 2)
      symbolic = barycenter_s2_series_modp(n, p, dmax);
    else
      throw std::invalid_argument(
          "no symbolic series for this (n, k, p); use --source brute");
    have_symbolic = true;
  }
  if (source == "brute" || source == "both") {
    BarycenterModel B = barycenter_suspension_model(n, minimal_sphere(k), budget);
    brute = barycenter_betti_mod_p(B, p, dmax);
    have_brute = true;
  }
  if (have_symbolic && have_brute && !(symbolic == brute)) {
    std::cerr << "mismatch between symbolic and brute-force series\n";
    return 1;
  }
  const PoincareSeries& s = have_symbolic ? symbolic : brute;
  if (as_json) {
    nlohmann::json out;
    out["schema"] = 1;
    out["bary"] = n;
    out["sphere"] = k;
    out["source"] = source;
    out["series"] = nlohmann::json::parse(series_to_json(s));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "mod-" << p << " Betti numbers of B_" << n << "(S^" << k << "):";
    for (long long c : s.coeffs) std::cout << " " << c;
    std::cout << "\n";
  }
  return 0;
}

int cmd_admissible(int base, int dmax, bool as_json) {
  auto words = admissible_sequences(base, dmax);
  if (as_json) {
    nlohmann::json out;
    out["schema"] = 1;
    nlohmann::json arr = nlohmann::json::array();
    for (const AdmissibleWord& w : words) {
      nlohmann::json e;
      e["indices"] = w.indices;
      e["degree"] = w.degree();
      e["filtration"] = w.filtration();
      arr.push_back(e);
    }
    out["words"] = arr;
    std::cout << out.dump() << "\n";
  } else {
    for (const AdmissibleWord& w : words)
      std::cout << admissible_to_string(w) << "  degree " << w.degree()
                << "  filtration " << w.filtration() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::int64_t budget, bool as_json) {
  VerifyOptions opt;
  opt.cell_budget = budget;
  std::vector<CheckResult> results = run_verify_suite(suite, opt);
  if (as_json) {
    nlohmann::json out;
    out["schema"] = 1;
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& r : results) {
      nlohmann::json e;
      e["suite"] = r.suite;
      e["name"] = r.name;
      e["pass"] = r.pass;
      e["skipped"] = r.skipped;
      e["detail"] = r.detail;
      e["seconds"] = r.seconds;
      arr.push_back(e);
    }
    out["checks"] = arr;
    out["ok"] = all_passed(results);
    std::cout << out.dump() << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::cout << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << " [" << r.suite
                << "] " << r.name;
      if (!r.detail.empty()) std::cout << "  -- " << r.detail;
      std::cout << "\n";
    }
    std::size_t failed = 0;
    for (const CheckResult& r : results)
      if (!r.pass) ++failed;
    std::cout << results.size() << " checks, " << failed << " failures\n";
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite models of barycenter spaces, symmetric products and their homology"};
  app.require_subcommand(1);
  std::int64_t budget = env_budget();

  std::string expr_text, model = "suspension", source = "symbolic", suite = "all";
  long long mod_p = 0, p = 2;
  int max_dim = -1, n = 2, k = 1, dmax = 12, base = 2;
  bool as_json = false;

  CLI::App* hom = app.add_subcommand("homology", "homology of a space expression");
  hom->add_option("expr", expr_text, "space expression")->required();
  hom->add_option("--mod", mod_p, "prime field coefficients (default integral)");
  hom->add_option("--max-dim", max_dim, "top degree to report");
  hom->add_option("--model", model, "barycenter model: suspension|direct|both")
      ->check(CLI::IsMember({"suspension", "direct", "both"}));
  hom->add_option("--budget", budget, "cell budget");
  hom->add_flag("--json", as_json, "JSON output");

  CLI::App* eul = app.add_subcommand("euler", "Euler characteristic of a space expression");
  eul->add_option("expr", expr_text, "space expression")->required();
  eul->add_option("--budget", budget, "cell budget");
  eul->add_flag("--json", as_json, "JSON output");

  CLI::App* poi = app.add_subcommand("poincare", "mod-p Betti series of B_n(S^k)");
  poi->add_option("--bary", n, "barycenter weight n")->required();
  poi->add_option("--sphere", k, "sphere dimension k")->required();
  poi->add_option("--mod", p, "prime p")->required();
  poi->add_option("--dmax", dmax, "truncation degree");
  poi->add_option("--source", source, "symbolic|brute|both")
      ->check(CLI::IsMember({"symbolic", "brute", "both"}));
  poi->add_option("--budget", budget, "cell budget");
  poi->add_flag("--json", as_json, "JSON output");

  CLI::App* adm = app.add_subcommand("admissible", "admissible words on a base class");
  adm->add_option("--base", base, "dimension of the fundamental class")->required();
  adm->add_option("--dmax", dmax, "maximum total degree")->required();
  adm->add_flag("--json", as_json, "JSON output");

  CLI::App* ver = app.add_subcommand("verify", "run a cross-validation suite");
  ver->add_option("suite", suite, "suite name or 'all'");
  ver->add_option("--budget", budget, "cell budget");
  ver->add_flag("--json", as_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hom->parsed())
      return cmd_homology(expr_text, mod_p, max_dim, model, budget, as_json);
    if (eul->parsed()) return cmd_euler(expr_text, budget, as_json);
    if (poi->parsed()) return cmd_poincare(n, k, p, dmax, source, budget, as_json);
    if (adm->parsed()) return cmd_admissible(base, dmax, as_json);
    if (ver->parsed()) return cmd_verify(suite, budget, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "cell budget exceeded: " << e.what() << "; census so far:";
    for (std::int64_t c : e.partial_census()) std::cerr << " " << c;
    std::cerr << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
