#ifndef BARYTOP_SERIES_HPP
#define BARYTOP_SERIES_HPP

#include <string>
#include <vector>

namespace barytop {

// Truncated Poincare series: coeffs[d] is the mod-p Betti number in degree d
// (p = 0 for integral free ranks).  All arithmetic is exact and truncates
// hard at dmax.
struct PoincareSeries {
  long long p = 0;
  std::vector<long long> coeffs;

  int dmax() const { return static_cast<int>(coeffs.size()) - 1; }
  long long at(int d) const {
    return (d >= 0 && d < static_cast<int>(coeffs.size())) ? coeffs[d] : 0;
  }
  bool operator==(const PoincareSeries&) const = default;

  static PoincareSeries zero(long long p, int dmax) {
    return PoincareSeries{p, std::vector<long long>(dmax + 1, 0)};
  }
};

PoincareSeries series_sum(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b);
// Shift degrees by k (k < 0 drops the low part).
PoincareSeries series_shift(const PoincareSeries& a, int k);
// Drop or add the degree-0 class (reduced vs full series of a connected space).
PoincareSeries series_reduced(const PoincareSeries& a);
PoincareSeries series_with_unit(const PoincareSeries& reduced);

std::int64_t series_euler(const PoincareSeries& a);

std::string series_to_json(const PoincareSeries& s);
PoincareSeries series_from_json(const std::string& text);

// Euler characteristics by exact coefficient extraction, valid for every
// integer chi (the binomial forms implicitly assume chi >= 1).
// euler_sp(n, chi): coefficient of t^n in (1-t)^{-chi}.
std::int64_t euler_sp(int n, std::int64_t chi);
// chi of the n-th reduced symmetric product: 1 + euler_sp(n) - euler_sp(n-1).
std::int64_t euler_rsp(int n, std::int64_t chi);
// chi of the n-th barycenter space: 1 - (1-chi)(2-chi)...(n-chi)/n!,
// always integral; also equals 2 - euler_rsp(n, 2-chi).
std::int64_t euler_barycenter(int n, std::int64_t chi);

}  // namespace barytop

#endif
