#include "barytop/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "barytop/snf.hpp"

namespace barytop {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

HomologyProfile integral_homology(const SimplicialSet& X, int max_degree) {
  int want = (max_degree < 0) ? X.dim() : max_degree;
  int top = std::min(want, X.dim());
  ChainComplex C = normalized_chains(X, std::min(top + 1, X.dim()));
  std::vector<SNFResult> snf(C.top() + 1);
  for (int d = 1; d <= C.top(); ++d) snf[d] = smith_normal_form(C.boundary[d]);
  auto rank_of = [&](int d) -> std::int64_t {
    return (d >= 1 && d <= C.top()) ? snf[d].rank() : 0;
  };
  HomologyProfile H;
  H.truncated = want > X.dim();
  H.groups.resize(want + 1);
  for (int d = 0; d <= std::min(top, X.dim()); ++d) {
    HomologyGroup& g = H.groups[d];
    g.free_rank = X.cell_count(d) - rank_of(d) - rank_of(d + 1);
    if (d + 1 <= C.top()) {
      for (const BigInt& q : snf[d + 1].nontrivial_factors()) {
        if (q > std::numeric_limits<long long>::max())
          throw std::overflow_error("torsion coefficient exceeds 64 bits");
        g.torsion.push_back(static_cast<long long>(q));
      }
    }
  }
  return H;
}

PoincareSeries betti_mod_p(const SimplicialSet& X, long long p, int max_degree) {
  if (!is_prime(p)) throw std::invalid_argument("betti_mod_p: p must be prime");
  int want = (max_degree < 0) ? X.dim() : max_degree;
  int top = std::min(want, X.dim());
  ChainComplex C = normalized_chains(X, std::min(top + 1, X.dim()));
  std::vector<std::int64_t> rk(C.top() + 2, 0);
  for (int d = 1; d <= C.top(); ++d) rk[d] = rank_mod_p(C.boundary[d], p);
  PoincareSeries out = PoincareSeries::zero(p, want);
  for (int d = 0; d <= top; ++d) {
    std::int64_t r_up = (d + 1 <= C.top()) ? rk[d + 1] : 0;
    out.coeffs[d] = X.cell_count(d) - rk[d] - r_up;
  }
  return out;
}

std::int64_t euler_from_homology(const HomologyProfile& H) {
  std::int64_t chi = 0;
  for (int d = 0; d <= H.top_degree(); ++d)
    chi += (d % 2 == 0) ? H.groups[d].free_rank : -H.groups[d].free_rank;
  return chi;
}

PoincareSeries betti_mod_p_from_integral(const HomologyProfile& H, long long p) {
  PoincareSeries out = PoincareSeries::zero(p, H.top_degree());
  auto p_torsion = [&](int d) -> long long {
    if (d < 0 || d > H.top_degree()) return 0;
    long long n = 0;
    for (long long q : H.groups[d].torsion)
      if (q % p == 0) ++n;
    return n;
  };
  for (int d = 0; d <= H.top_degree(); ++d)
    out.coeffs[d] = H.groups[d].free_rank + p_torsion(d) + p_torsion(d - 1);
  return out;
}

std::string homology_to_json(const HomologyProfile& H) {
  nlohmann::json arr = nlohmann::json::array();
  for (int d = 0; d <= H.top_degree(); ++d) {
    nlohmann::json g;
    g["degree"] = d;
    g["rank"] = H.groups[d].free_rank;
    g["torsion"] = H.groups[d].torsion;
    arr.push_back(g);
  }
  return arr.dump();
}

std::string homology_to_text(const HomologyProfile& H) {
  std::ostringstream os;
  for (int d = 0; d <= H.top_degree(); ++d) {
    const HomologyGroup& g = H.groups[d];
    os << "H_" << d << " = ";
    bool first = true;
    if (g.free_rank == 1) {
      os << "Z";
      first = false;
    } else if (g.free_rank > 1) {
      os << "Z^" << g.free_rank;
      first = false;
    }
    for (long long q : g.torsion) {
      if (!first) os << " + ";
      os << "Z/" << q;
      first = false;
    }
    if (first) os << "0";
    os << "\n";
  }
  if (H.truncated) os << "(truncated at model dimension)\n";
  return os.str();
}

}  // namespace barytop
