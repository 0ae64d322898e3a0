#include <doctest.h>

#include <stdexcept>

#include "barytop/homology.hpp"
#include "barytop/spaces.hpp"

using namespace barytop;

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
  return r;
}

HomologyGroup zz(std::int64_t r, std::vector<long long> t = {}) {
  return HomologyGroup{r, std::move(t)};
}

}  // namespace

TEST_CASE("standard simplex census is binomial") {
  for (int k = 0; k <= 6; ++k) {
    SimplicialSet X = standard_simplex(k);
    for (int d = 0; d <= k; ++d) CHECK(X.counts[d] == binom(k + 1, d + 1));
  }
  CHECK_THROWS_AS(standard_simplex(-1), std::invalid_argument);
}

TEST_CASE("minimal spheres") {
  CHECK(minimal_sphere(1).counts == std::vector<std::int64_t>({1, 1}));
  for (int k = 2; k <= 6; ++k) {
    HomologyProfile H = integral_homology(minimal_sphere(k));
    CHECK(H.groups[0] == zz(1));
    CHECK(H.groups[k] == zz(1));
    for (int d = 1; d < k; ++d) CHECK(H.groups[d].trivial());
  }
  CHECK_THROWS_AS(minimal_sphere(0), std::invalid_argument);
}

TEST_CASE("surface homology") {
  CHECK(integral_homology(surface(0)).same_groups(
      integral_homology(minimal_sphere(2))));
  HomologyProfile T = integral_homology(torus());
  CHECK(T.groups[1] == zz(2));
  CHECK(T.groups[2] == zz(1));
  HomologyProfile R = integral_homology(rp2());
  CHECK(R.groups[1] == zz(0, {2}));
  CHECK(R.groups[2] == zz(0));
  for (int g = 1; g <= 3; ++g) {
    HomologyProfile H = integral_homology(surface(g));
    CHECK(H.groups[1] == zz(2 * g));
    CHECK(H.groups[2] == zz(1));
    CHECK(euler_from_census(surface(g)) == 2 - 2 * g);
  }
}

TEST_CASE("polygon word validation and the bigon sphere") {
  CHECK_THROWS_AS(polygon_surface({{0, true}}), std::invalid_argument);
  CHECK_THROWS_AS(polygon_surface({{0, true}, {0, true}, {1, true}}),
                  std::invalid_argument);
  // a a^{-1} glues two triangles along their whole boundary: a 2-sphere
  SimplicialSet bigon = polygon_surface({{0, true}, {0, false}});
  std::string why;
  CHECK_MESSAGE(bigon.validate(&why), why);
  CHECK(integral_homology(bigon).same_groups(integral_homology(minimal_sphere(2))));
}

TEST_CASE("facet models agree with the polygon models") {
  // 7-vertex torus: the two cyclic facet families {i,i+1,i+3} and {i,i+2,i+3}
  std::vector<std::vector<int>> csaszar;
  for (int i = 0; i < 7; ++i) {
    csaszar.push_back({i, (i + 1) % 7, (i + 3) % 7});
    csaszar.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  SimplicialSet T7 = from_facets(7, csaszar);
  CHECK(T7.counts == std::vector<std::int64_t>({7, 21, 14}));
  CHECK(integral_homology(T7).same_groups(integral_homology(torus())));
}
