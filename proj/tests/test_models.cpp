#include <doctest.h>

#include <stdexcept>

#include "barytop/homology.hpp"
#include "barytop/models.hpp"
#include "barytop/spaces.hpp"

using namespace barytop;

namespace {

HomologyGroup zz(std::int64_t r, std::vector<long long> t = {}) {
  return HomologyGroup{r, std::move(t)};
}

}  // namespace

TEST_CASE("symmetric products of spheres") {
  HomologyProfile cp2 = integral_homology(symmetric_product(2, minimal_sphere(2)));
  CHECK(cp2.groups[0] == zz(1));
  CHECK(cp2.groups[2] == zz(1));
  CHECK(cp2.groups[4] == zz(1));
  CHECK(cp2.groups[1].trivial());
  CHECK(cp2.groups[3].trivial());
  HomologyProfile sp2s1 = integral_homology(symmetric_product(2, minimal_sphere(1)));
  CHECK(sp2s1.groups[1] == zz(1));
}

TEST_CASE("reduced symmetric products: fused equals composed") {
  for (int n : {2, 3}) {
    for (const SimplicialSet& X : {minimal_sphere(1), minimal_sphere(2)}) {
      SimplicialSet A = reduced_symmetric_product(n, X);
      SimplicialSet B = reduced_symmetric_product_composed(n, X);
      CHECK(census(A) == census(B));
      CHECK(integral_homology(A).same_groups(integral_homology(B)));
      std::string why;
      CHECK_MESSAGE(A.validate(&why), why);
    }
  }
  SimplicialSet T = torus();
  CHECK(census(reduced_symmetric_product(2, T)) ==
        census(reduced_symmetric_product_composed(2, T)));
}

TEST_CASE("census-only enumeration matches the full construction") {
  for (int n : {2, 3}) {
    for (const SimplicialSet& X : {minimal_sphere(2), rp2()}) {
      CHECK(reduced_symmetric_product_census(n, X) ==
            census(reduced_symmetric_product(n, X)));
    }
  }
}

TEST_CASE("barycenter models agree") {
  for (int n : {2, 3}) {
    BarycenterModel A = barycenter_suspension_model(n, minimal_sphere(1));
    BarycenterModel B = barycenter_direct_model(n, minimal_sphere(1));
    CHECK(A.degree_shift == 1);
    CHECK(B.degree_shift == 0);
    HomologyProfile HA = barycenter_homology(A), HB = barycenter_homology(B);
    CHECK(HA.same_groups(HB));
    // spheres from the circle
    CHECK(HA.groups[2 * n - 1] == zz(1));
    for (int d = 1; d < 2 * n - 1; ++d) CHECK(HA.groups[d].trivial());
  }
}

TEST_CASE("weight-one models are the space itself") {
  SimplicialSet X = rp2();
  BarycenterModel A = barycenter_suspension_model(1, X);
  BarycenterModel B = barycenter_direct_model(1, X);
  CHECK(barycenter_homology(A).same_groups(integral_homology(X)));
  CHECK(barycenter_homology(B).same_groups(integral_homology(X)));
}

TEST_CASE("cylinder model of the symmetric join") {
  CHECK(integral_homology(symjoin2_cylinder_model(point())).groups[0] == zz(1));
  SimplicialSet M = symjoin2_cylinder_model(minimal_sphere(1));
  HomologyProfile H = integral_homology(M);
  CHECK(H.groups[0] == zz(1));
  CHECK(H.groups[1].trivial());
  CHECK(H.groups[2].trivial());
  CHECK(H.groups[3] == zz(1));
}

TEST_CASE("q-space homology inference") {
  QProfile q = infer_Q_homology(2, 2, 2);
  CHECK(q.profile.groups[1] == zz(0, {2}));
  CHECK(q.profile.groups[2].trivial());
  CHECK_FALSE(q.profile.truncated);
  CHECK(infer_Q_homology(2, 2, 4).profile.truncated);
  CHECK_THROWS_AS(infer_Q_homology(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(infer_Q_homology(2, 0, 2), std::invalid_argument);
}

TEST_CASE("barycenter euler against the closed form") {
  for (int n : {1, 2, 3}) {
    for (const auto& [X, chi] :
         std::vector<std::pair<SimplicialSet, std::int64_t>>{
             {minimal_sphere(1), 0}, {minimal_sphere(2), 2}, {rp2(), 1}}) {
      BarycenterModel B = barycenter_suspension_model(n, X);
      CHECK(barycenter_euler(B) == euler_barycenter(n, chi));
    }
  }
}
