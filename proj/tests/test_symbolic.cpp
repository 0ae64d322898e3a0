#include <doctest.h>

#include <stdexcept>

#include "barytop/admissible.hpp"
#include "barytop/series.hpp"
#include "barytop/sphere_series.hpp"
#include "barytop/splittings.hpp"

using namespace barytop;

TEST_CASE("series arithmetic respects truncation") {
  PoincareSeries a{2, {1, 0, 2}}, b{2, {0, 1}};
  CHECK(series_sum(a, b).coeffs == std::vector<long long>({1, 1, 2}));
  PoincareSeries p = series_product(a, b);
  CHECK(p.coeffs == std::vector<long long>({0, 1, 0}));
  CHECK(series_shift(a, 2).coeffs == std::vector<long long>({0, 0, 1, 0, 2}));
  CHECK(series_shift(a, -1).coeffs == std::vector<long long>({0, 2}));
  CHECK(series_euler(a) == 3);
  CHECK_THROWS_AS(series_sum(a, PoincareSeries{3, {1}}), std::invalid_argument);
}

TEST_CASE("series json") {
  PoincareSeries s{5, {1, 0, 0, 2}};
  CHECK(series_from_json(series_to_json(s)) == s);
  CHECK(series_to_json(s).find("\"p\"") != std::string::npos);
  CHECK(series_to_json(s).find("\"coeffs\"") != std::string::npos);
}

TEST_CASE("euler closed forms") {
  CHECK(euler_sp(0, 17) == 1);
  CHECK(euler_sp(2, 2) == 3);
  for (int n = 1; n <= 5; ++n) CHECK(euler_sp(n, 0) == 0);
  CHECK(euler_rsp(1, -7) == -7);
  CHECK(euler_rsp(2, 2) == 2);
  CHECK(euler_rsp(2, 0) == 1);
  CHECK(euler_barycenter(2, 0) == 0);
  CHECK(euler_barycenter(2, 2) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(euler_barycenter(n, 1) == 1);
  for (int n = 1; n <= 6; ++n)
    for (std::int64_t chi = -6; chi <= 6; ++chi)
      CHECK(euler_barycenter(n, chi) == 2 - euler_rsp(n, 2 - chi));
}

TEST_CASE("admissible words") {
  auto w = admissible_sequences(3, 10);
  REQUIRE(w.size() == 3);
  CHECK(w[0].indices.empty());
  CHECK(w[1].indices == std::vector<int>({2}));
  CHECK(w[2].indices == std::vector<int>({4, 2}));
  CHECK(w[2].degree() == 9);
  CHECK(w[2].filtration() == 4);
  CHECK(w[2].excess() == 2);
  auto w2 = admissible_sequences(2, 12);
  CHECK(w2.size() == 1);
  auto w3 = admissible_sequences(3, 20);
  bool has842 = false;
  for (const auto& x : w3) has842 = has842 || x.indices == std::vector<int>({8, 4, 2});
  CHECK(has842);
  CHECK_THROWS_AS(admissible_sequences(1, 10), std::invalid_argument);
}

TEST_CASE("mod-2 sphere series") {
  // SPbar^2(S^3): classes in degrees 5 and 6
  CHECK(rsp_sphere_series_mod2(2, 3, 8).coeffs ==
        std::vector<long long>({0, 0, 0, 0, 0, 1, 1, 0, 0}));
  // SPbar^1(S^k) is the sphere itself
  for (int k = 1; k <= 4; ++k) {
    PoincareSeries s = rsp_sphere_series_mod2(1, k, k + 2);
    for (int d = 0; d <= s.dmax(); ++d) CHECK(s.at(d) == (d == k ? 1 : 0));
  }
  // SP^n(S^2) is complex projective n-space
  PoincareSeries cp3 = sp_sphere_series_mod2(3, 2, 8);
  CHECK(cp3.coeffs == std::vector<long long>({1, 0, 1, 0, 1, 0, 1, 0, 0}));
  // filtration-exactly-4 monomials for the 3-sphere up to degree 12
  CHECK(rsp_sphere_series_mod2(4, 3, 12).coeffs ==
        std::vector<long long>({0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST_CASE("barycenter sphere series") {
  CHECK(barycenter_sphere_series_mod2(2, 2, 6).coeffs ==
        std::vector<long long>({1, 0, 0, 0, 1, 1, 0}));
  CHECK(barycenter_sphere_series_mod2(2, 1, 4).coeffs ==
        std::vector<long long>({1, 0, 0, 1, 0}));
  CHECK(barycenter_sphere_series_mod2(3, 1, 6).coeffs ==
        std::vector<long long>({1, 0, 0, 0, 0, 1, 0}));
  CHECK(barycenter_sphere_series_mod2(3, 2, 8).coeffs ==
        std::vector<long long>({1, 0, 0, 0, 0, 0, 0, 1, 1}));
}

TEST_CASE("odd prime and large prime series") {
  CHECK(barycenter_s2_series_modp(2, 3, 8).coeffs ==
        std::vector<long long>({1, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(barycenter_s2_series_modp(1, 7, 3).coeffs ==
        std::vector<long long>({1, 0, 1, 0}));
  CHECK(barycenter_s2_series_modp(3, 3, 8).coeffs ==
        std::vector<long long>({1, 0, 0, 0, 0, 0, 1, 1, 0}));
  CHECK_THROWS_AS(barycenter_s2_series_modp(2, 2, 8), std::invalid_argument);
  CHECK_THROWS_AS(barycenter_s2_series_modp(2, 9, 8), std::invalid_argument);
  CHECK(barycenter_sphere_large_p(2, 1, 3).coeffs ==
        std::vector<long long>({1, 0, 0, 1}));
  CHECK(barycenter_sphere_large_p(2, 2, 5).coeffs ==
        std::vector<long long>({1, 0, 0, 0, 0, 0}));
  CHECK(barycenter_sphere_large_p(3, 3, 5).coeffs ==
        std::vector<long long>({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(barycenter_sphere_large_p(3, 2, 3), std::invalid_argument);
}

TEST_CASE("surface splitting reports") {
  SplittingReport g1 = b2_surface_splitting(1, 2, 6);
  REQUIRE(g1.summands.size() == 3);
  CHECK(g1.summands[0].multiplicity == 3);
  CHECK(g1.summands[1].multiplicity == 2);
  CHECK(g1.total.coeffs == std::vector<long long>({1, 0, 0, 3, 3, 1, 0}));
  SplittingReport g1p3 = b2_surface_splitting(1, 3, 6);
  CHECK(g1p3.total.coeffs == std::vector<long long>({1, 0, 0, 3, 2, 0, 0}));
  SplittingReport g0 = b2_surface_splitting(0, 2, 6);
  CHECK(g0.total.coeffs == std::vector<long long>({1, 0, 0, 0, 1, 1, 0}));
  SplittingReport g2 = b2_surface_splitting(2, 2, 6);
  CHECK(g2.summands[0].multiplicity == 10);
  CHECK(g2.summands[1].multiplicity == 4);
  CHECK(splitting_to_json(g1).find("\"summands\"") != std::string::npos);
}

TEST_CASE("wedge series calculus") {
  int dmax = 6;
  auto unit = PoincareSeries::zero(2, dmax);
  unit.coeffs[0] = 1;
  auto circle_family = [&](int n) {
    std::vector<PoincareSeries> fam{unit};
    for (int r = 1; r <= n; ++r) fam.push_back(rsp_sphere_series_mod2(r, 1, dmax));
    return fam;
  };
  PoincareSeries two = rsp_wedge_series(2, {circle_family(2), circle_family(2)});
  CHECK(two.coeffs == std::vector<long long>({1, 0, 1, 0, 0, 0, 0}));
  PoincareSeries one = rsp_wedge_series(1, {circle_family(1), circle_family(1)});
  CHECK(one.coeffs == std::vector<long long>({1, 2, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(rsp_wedge_series(2, {circle_family(1)}), std::invalid_argument);
}
