#include "barytop/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace barytop {

namespace {
void check_same_field(const PoincareSeries& a, const PoincareSeries& b) {
  if (a.p != b.p) throw std::invalid_argument("series over different fields");
}
}  // namespace

PoincareSeries series_sum(const PoincareSeries& a, const PoincareSeries& b) {
  check_same_field(a, b);
  PoincareSeries out{a.p, std::vector<long long>(
                              std::max(a.coeffs.size(), b.coeffs.size()), 0)};
  for (int d = 0; d <= out.dmax(); ++d) out.coeffs[d] = a.at(d) + b.at(d);
  return out;
}

PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b) {
  check_same_field(a, b);
  int dmax = std::max(a.dmax(), b.dmax());
  PoincareSeries out = PoincareSeries::zero(a.p, dmax);
  for (int i = 0; i <= a.dmax(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j <= b.dmax() && i + j <= dmax; ++j)
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

PoincareSeries series_shift(const PoincareSeries& a, int k) {
  PoincareSeries out = PoincareSeries::zero(a.p, std::max(a.dmax() + k, 0));
  for (int d = 0; d <= a.dmax(); ++d) {
    int t = d + k;
    if (t >= 0 && t <= out.dmax()) out.coeffs[t] = a.coeffs[d];
  }
  return out;
}

PoincareSeries series_reduced(const PoincareSeries& a) {
  PoincareSeries out = a;
  if (!out.coeffs.empty()) out.coeffs[0] -= 1;
  return out;
}

PoincareSeries series_with_unit(const PoincareSeries& reduced) {
  PoincareSeries out = reduced;
  if (out.coeffs.empty()) out.coeffs.push_back(0);
  out.coeffs[0] += 1;
  return out;
}

std::int64_t series_euler(const PoincareSeries& a) {
  std::int64_t chi = 0;
  for (int d = 0; d <= a.dmax(); ++d) chi += (d % 2 == 0) ? a.coeffs[d] : -a.coeffs[d];
  return chi;
}

std::string series_to_json(const PoincareSeries& s) {
  nlohmann::json j;
  j["p"] = s.p;
  j["coeffs"] = s.coeffs;
  return j.dump();
}

PoincareSeries series_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PoincareSeries s;
  s.p = j.at("p").get<long long>();
  s.coeffs = j.at("coeffs").get<std::vector<long long>>();
  return s;
}

std::int64_t euler_sp(int n, std::int64_t chi) {
  if (n < 0) throw std::invalid_argument("euler_sp: n must be >= 0");
  // C(chi + n - 1, n) as an exact falling product
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (int j = 0; j < n; ++j) {
    num *= chi + j;
    den *= j + 1;
  }
  boost::multiprecision::cpp_int q = num / den;
  if (q * den != num) throw std::logic_error("euler_sp: non-integral binomial");
  if (q > std::numeric_limits<std::int64_t>::max() ||
      q < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("euler_sp: result exceeds 64 bits");
  return static_cast<std::int64_t>(q);
}

std::int64_t euler_rsp(int n, std::int64_t chi) {
  if (n < 1) throw std::invalid_argument("euler_rsp: n must be >= 1");
  return 1 + euler_sp(n, chi) - euler_sp(n - 1, chi);
}

std::int64_t euler_barycenter(int n, std::int64_t chi) {
  if (n < 1) throw std::invalid_argument("euler_barycenter: n must be >= 1");
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (int j = 1; j <= n; ++j) {
    num *= j - chi;
    den *= j;
  }
  boost::multiprecision::cpp_int q = num / den;
  if (q * den != num) throw std::logic_error("euler_barycenter: non-integral value");
  boost::multiprecision::cpp_int res = 1 - q;
  if (res > std::numeric_limits<std::int64_t>::max() ||
      res < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("euler_barycenter: result exceeds 64 bits");
  return static_cast<std::int64_t>(res);
}

}  // namespace barytop
