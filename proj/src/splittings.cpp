#include "barytop/splittings.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "barytop/homology.hpp"

namespace barytop {

PoincareSeries rsp_wedge_series(int n,
                                const std::vector<std::vector<PoincareSeries>>& parts) {
  if (n < 1) throw std::invalid_argument("rsp_wedge_series: n must be >= 1");
  if (parts.empty()) throw std::invalid_argument("rsp_wedge_series: no wedge parts");
  long long p = parts[0][0].p;
  int dmax = parts[0][0].dmax();
  for (const auto& family : parts) {
    if (static_cast<int>(family.size()) != n + 1)
      throw std::invalid_argument("rsp_wedge_series: each part needs series for r = 0..n");
    for (const PoincareSeries& s : family)
      if (s.p != p) throw std::invalid_argument("rsp_wedge_series: mixed fields");
  }
  PoincareSeries acc = PoincareSeries::zero(p, dmax);
  std::vector<int> comp(parts.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == parts.size()) {
      comp[i] = left;
      PoincareSeries term = parts[0][comp[0]];
      for (std::size_t j = 1; j < parts.size(); ++j)
        term = series_product(term, parts[j][comp[j]]);
      acc = series_sum(acc, term);
      return;
    }
    for (int r = 0; r <= left; ++r) {
      comp[i] = r;
      self(self, i + 1, left - r);
    }
  };
  rec(rec, 0, n);
  return series_with_unit(acc);
}

PoincareSeries sphere_reduced_series(int m, long long p, int dmax) {
  PoincareSeries s = PoincareSeries::zero(p, dmax);
  if (m <= dmax) s.coeffs[m] = 1;
  return s;
}

PoincareSeries suspended_rp2_reduced_series(int shift, long long p, int dmax) {
  PoincareSeries s = PoincareSeries::zero(p, dmax);
  // reduced homology of the projective plane: one class in degrees 1 and 2
  // with mod-2 coefficients, nothing at odd primes, torsion only integrally
  if (p == 2) {
    if (shift + 1 <= dmax) s.coeffs[shift + 1] = 1;
    if (shift + 2 <= dmax) s.coeffs[shift + 2] = 1;
  }
  return s;
}

namespace {

PoincareSeries report_total(const std::vector<SplittingSummand>& summands, long long p,
                            int dmax) {
  PoincareSeries acc = PoincareSeries::zero(p, dmax);
  for (const SplittingSummand& s : summands)
    for (long long m = 0; m < s.multiplicity; ++m) acc = series_sum(acc, s.reduced);
  return series_with_unit(acc);
}

}  // namespace

SplittingReport b2_surface_splitting(int g, long long p, int dmax) {
  if (g < 0) throw std::invalid_argument("b2_surface_splitting: genus must be >= 0");
  if (!is_prime(p)) throw std::invalid_argument("b2_surface_splitting: p must be prime");
  SplittingReport r;
  r.summands.push_back(
      SplittingSummand{"S^3", 2ll * g * g + g, sphere_reduced_series(3, p, dmax)});
  r.summands.push_back(SplittingSummand{"S^4", 2ll * g, sphere_reduced_series(4, p, dmax)});
  r.summands.push_back(
      SplittingSummand{"Sigma^3 RP^2", 1, suspended_rp2_reduced_series(3, p, dmax)});
  r.total = report_total(r.summands, p, dmax);
  return r;
}

SplittingReport b2_product_splitting(const PoincareSeries& red_x, const PoincareSeries& red_y,
                                     const PoincareSeries& red_b2x,
                                     const PoincareSeries& red_b2y,
                                     const PoincareSeries& red_b2_smash, int dmax) {
  long long p = red_x.p;
  for (const PoincareSeries* s : {&red_y, &red_b2x, &red_b2y, &red_b2_smash})
    if (s->p != p) throw std::invalid_argument("b2_product_splitting: mixed fields");
  auto shift1 = [&](const PoincareSeries& s) { return series_shift(s, 1); };
  SplittingReport r;
  r.summands.push_back(SplittingSummand{"B_2(X)", 1, red_b2x});
  r.summands.push_back(SplittingSummand{"B_2(Y)", 1, red_b2y});
  r.summands.push_back(SplittingSummand{"B_2(X^Y)", 1, red_b2_smash});
  // join X*Y ~ suspension of the smash
  r.summands.push_back(SplittingSummand{"X*Y", 1, shift1(series_product(red_x, red_y))});
  r.summands.push_back(SplittingSummand{
      "(X*X)^Y", 1, shift1(series_product(series_product(red_x, red_x), red_y))});
  r.summands.push_back(SplittingSummand{
      "(Y*Y)^X", 1, shift1(series_product(series_product(red_y, red_y), red_x))});
  int dd = dmax;
  for (SplittingSummand& s : r.summands) s.reduced.coeffs.resize(dd + 1, 0);
  r.total = report_total(r.summands, p, dd);
  return r;
}

std::string splitting_to_json(const SplittingReport& r) {
  nlohmann::json j;
  nlohmann::json arr = nlohmann::json::array();
  for (const SplittingSummand& s : r.summands) {
    nlohmann::json e;
    e["name"] = s.name;
    e["multiplicity"] = s.multiplicity;
    e["coeffs"] = s.reduced.coeffs;
    arr.push_back(e);
  }
  j["summands"] = arr;
  j["p"] = r.total.p;
  j["total"] = r.total.coeffs;
  return j.dump();
}

std::string splitting_to_text(const SplittingReport& r) {
  std::ostringstream os;
  for (const SplittingSummand& s : r.summands)
    os << s.multiplicity << " x " << s.name << "\n";
  os << "total mod-" << r.total.p << " series:";
  for (long long c : r.total.coeffs) os << " " << c;
  os << "\n";
  return os.str();
}

}  // namespace barytop
