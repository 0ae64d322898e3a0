#include "barytop/sphere_series.hpp"

#include <stdexcept>

#include "barytop/homology.hpp"

namespace barytop {

namespace {

// Count monomials by (filtration, degree) knapsack over the generator list.
// dp[f][d] = number of monomials of total filtration f and degree d.
std::vector<std::vector<long long>> monomial_counts(
    const std::vector<BigradedGenerator>& gens, int fmax, int dmax) {
  std::vector<std::vector<long long>> dp(fmax + 1, std::vector<long long>(dmax + 1, 0));
  dp[0][0] = 1;
  for (const BigradedGenerator& g : gens) {
    if (g.filtration > fmax || g.degree > dmax) continue;
    if (g.exterior) {
      for (int f = fmax; f >= g.filtration; --f)
        for (int d = dmax; d >= g.degree; --d)
          dp[f][d] += dp[f - g.filtration][d - g.degree];
    } else {
      for (int f = g.filtration; f <= fmax; ++f)
        for (int d = g.degree; d <= dmax; ++d)
          dp[f][d] += dp[f - g.filtration][d - g.degree];
    }
  }
  return dp;
}

}  // namespace

std::vector<BigradedGenerator> mod2_sphere_generators(int k, int dmax) {
  if (k < 1) throw std::invalid_argument("mod2_sphere_generators: k must be >= 1");
  std::vector<BigradedGenerator> gens;
  if (k == 1) {
    gens.push_back(BigradedGenerator{1, 1, true, "iota_1"});
    return gens;
  }
  if (dmax < k) return gens;
  for (const AdmissibleWord& w : admissible_sequences(k, dmax))
    gens.push_back(BigradedGenerator{w.degree(), w.filtration(), false,
                                     admissible_to_string(w)});
  return gens;
}

PoincareSeries rsp_sphere_series_mod2(int n, int k, int dmax) {
  if (n < 1) throw std::invalid_argument("rsp_sphere_series_mod2: n must be >= 1");
  auto dp = monomial_counts(mod2_sphere_generators(k, dmax), n, dmax);
  PoincareSeries out = PoincareSeries::zero(2, dmax);
  for (int d = 0; d <= dmax; ++d) out.coeffs[d] = dp[n][d];
  return out;
}

PoincareSeries sp_sphere_series_mod2(int n, int k, int dmax) {
  if (n < 0) throw std::invalid_argument("sp_sphere_series_mod2: n must be >= 0");
  auto dp = monomial_counts(mod2_sphere_generators(k, dmax), n, dmax);
  PoincareSeries out = PoincareSeries::zero(2, dmax);
  for (int f = 0; f <= n; ++f)
    for (int d = 0; d <= dmax; ++d) out.coeffs[d] += dp[f][d];
  return out;
}

PoincareSeries barycenter_sphere_series_mod2(int n, int k, int dmax) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("barycenter_sphere_series_mod2: need n >= 1, k >= 1");
  PoincareSeries up = rsp_sphere_series_mod2(n, k + 1, dmax + 1);
  PoincareSeries out = series_shift(up, -1);
  out.coeffs.resize(dmax + 1, 0);
  out.coeffs[0] = 1;
  return out;
}

PoincareSeries barycenter_s2_series_modp(int n, long long p, int dmax) {
  if (p == 2) throw std::invalid_argument("barycenter_s2_series_modp: use the mod-2 series");
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("barycenter_s2_series_modp: p must be an odd prime");
  if (n < 1) throw std::invalid_argument("barycenter_s2_series_modp: n must be >= 1");
  // Generators of the bigraded algebra for the 3-sphere at odd p:
  // exterior iota_(3,1) and h_(2p^i+1, p^i), polynomial b_(2p^i+2, p^i).
  std::vector<BigradedGenerator> gens;
  gens.push_back(BigradedGenerator{3, 1, true, "iota_3"});
  for (long long q = p; 2 * q + 1 <= dmax + 1; q *= p) {
    gens.push_back(BigradedGenerator{static_cast<int>(2 * q + 1), static_cast<int>(q),
                                     true, "h"});
    if (2 * q + 2 <= dmax + 1)
      gens.push_back(BigradedGenerator{static_cast<int>(2 * q + 2), static_cast<int>(q),
                                       false, "b"});
  }
  auto dp = monomial_counts(gens, n, dmax + 1);
  PoincareSeries up = PoincareSeries::zero(p, dmax + 1);
  for (int d = 0; d <= dmax + 1; ++d) up.coeffs[d] = dp[n][d];
  PoincareSeries out = series_shift(up, -1);
  out.coeffs.resize(dmax + 1, 0);
  out.coeffs[0] = 1;
  return out;
}

PoincareSeries barycenter_sphere_large_p(int n, int k, long long p, int dmax) {
  if (!is_prime(p)) throw std::invalid_argument("barycenter_sphere_large_p: p must be prime");
  if (!(p > n && n > 1))
    throw std::invalid_argument("barycenter_sphere_large_p: requires p > n > 1");
  int top = n * (k + 1) - 1;
  if (dmax < 0) dmax = top;
  PoincareSeries out = PoincareSeries::zero(p, dmax);
  out.coeffs[0] = 1;
  if (k % 2 == 1 && top <= dmax) out.coeffs[top] = 1;
  return out;
}

}  // namespace barytop
