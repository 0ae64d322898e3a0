#include <doctest.h>

#include <stdexcept>

#include "barytop/homology.hpp"
#include "barytop/models.hpp"
#include "barytop/ops.hpp"
#include "barytop/spaces.hpp"

using namespace barytop;

namespace {

HomologyGroup zz(std::int64_t r, std::vector<long long> t = {}) {
  return HomologyGroup{r, std::move(t)};
}

bool valid(const SimplicialSet& X) {
  std::string why;
  bool ok = X.validate(&why);
  if (!ok) MESSAGE(why);
  return ok;
}

}  // namespace

TEST_CASE("binary product structure") {
  SimplicialSet D1 = standard_simplex(1);
  ProductResult P = product(D1, D1);
  CHECK(valid(P.space));
  CHECK(P.space.counts == std::vector<std::int64_t>({4, 5, 2}));
  std::string why;
  CHECK_MESSAGE(verify_simplicial_map(P.space, P.proj1, D1, &why), why);
  CHECK_MESSAGE(verify_simplicial_map(P.space, P.proj2, D1, &why), why);
}

TEST_CASE("triple product of circles") {
  SimplicialSet s1 = minimal_sphere(1);
  MultiProduct P = multi_product({&s1, &s1, &s1});
  CHECK(valid(P.space));
  CHECK(P.space.cell_count(3) == 6);
  HomologyProfile H = integral_homology(P.space);
  CHECK(H.groups[1] == zz(3));
  CHECK(H.groups[2] == zz(3));
  CHECK(H.groups[3] == zz(1));
}

TEST_CASE("wedge and smash") {
  SimplicialSet s1 = minimal_sphere(1), s2 = minimal_sphere(2);
  SimplicialSet W = wedge(s1, s2);
  CHECK(valid(W));
  CHECK(W.counts == std::vector<std::int64_t>({1, 1, 1}));
  SimplicialSet S = smash(s1, s2);
  CHECK(valid(S));
  HomologyProfile H = integral_homology(S);
  CHECK(H.groups[3] == zz(1));
  // smashing with a point is trivial
  SimplicialSet T = smash(point(), s2);
  CHECK(integral_homology(T).groups[0] == zz(1));
  CHECK(euler_from_census(T) == 1);
}

TEST_CASE("smash power carries a valid symmetric action") {
  SmashPower S = smash_power(minimal_sphere(1), 2);
  CHECK(valid(S.space));
  std::string why;
  CHECK_MESSAGE(validate_action(S.space, S.action, &why), why);
  CHECK(S.action.order() == 2);
  HomologyProfile H = integral_homology(S.space);
  CHECK(H.groups[2] == zz(1));
}

TEST_CASE("collapse of a subcomplex") {
  // collapsing the boundary of the 2-simplex gives the 2-sphere
  SimplicialSet D2 = standard_simplex(2);
  std::vector<std::vector<char>> in_A = {{1, 1, 1}, {1, 1, 1}, {0}};
  QuotientResult q = collapse_subcomplex(D2, in_A);
  CHECK(valid(q.space));
  CHECK(integral_homology(q.space).same_groups(integral_homology(minimal_sphere(2))));
  // marks that are not closed under faces are rejected
  std::vector<std::vector<char>> bad = {{0, 0, 0}, {1, 0, 0}, {0}};
  CHECK_THROWS_AS(collapse_subcomplex(D2, bad), std::invalid_argument);
  std::vector<std::vector<char>> empty = {{0, 0, 0}, {0, 0, 0}, {0}};
  CHECK_THROWS_AS(collapse_subcomplex(D2, empty), std::invalid_argument);
}

TEST_CASE("glue interval ends onto a point gives a circle") {
  SimplicialSet I = standard_simplex(1), P = point();
  std::vector<std::vector<char>> ends = {{1, 1}, {0}};
  SimplicialMap f;
  f.image = {{SimplexRef{0, 0}, SimplexRef{0, 0}}, {SimplexRef{0, -1}}};
  GlueResult g = glue(I, ends, f, P);
  CHECK(valid(g.space));
  CHECK(integral_homology(g.space).same_groups(integral_homology(minimal_sphere(1))));
}

TEST_CASE("orbit quotient rejects inconsistent actions") {
  SimplicialSet T = torus();
  GroupAction bad = trivial_action(T);
  bad.perm.push_back(bad.perm[0]);
  bad.perm[1][1] = {1, 0, 2, 3, 4, 5};  // swaps two edges without matching faces
  CHECK_THROWS_AS(orbit_quotient(T, bad), std::invalid_argument);
}

TEST_CASE("congruence quotient merges vertices") {
  QuotientResult q = quotient_identify(standard_simplex(1), {CellPair{0, 0, 1}});
  CHECK(q.space.counts == std::vector<std::int64_t>({1, 1}));
  CHECK(integral_homology(q.space).groups[1] == zz(1));
  // identifying the two long edges of the square gives a cylinder
  SimplicialSet D1 = standard_simplex(1);
  MultiProduct P = multi_product({&D1, &D1});
  // cells with the first factor a vertex and the second the whole edge
  std::vector<std::int64_t> side_edges;
  for (std::int64_t c = 0; c < P.space.counts[1]; ++c) {
    const ProductComponent* k = P.key(1, c);
    if (k[0].dim == 0 && k[1].dim == 1) side_edges.push_back(c);
  }
  REQUIRE(side_edges.size() == 2);
  QuotientResult cyl =
      quotient_identify(P.space, {CellPair{1, side_edges[0], side_edges[1]}});
  CHECK(valid(cyl.space));
  HomologyProfile H = integral_homology(cyl.space);
  CHECK(H.groups[0] == zz(1));
  CHECK(H.groups[1] == zz(1));
  CHECK(H.groups[2] == zz(0));
}

TEST_CASE("barycentric subdivision preserves homology and census counts") {
  SimplicialSet sd1 = barycentric_subdivision(standard_simplex(1));
  CHECK(sd1.counts == std::vector<std::int64_t>({3, 2}));
  for (const SimplicialSet& X : {minimal_sphere(1), minimal_sphere(2), rp2()}) {
    SimplicialSet S = barycentric_subdivision(X);
    CHECK(valid(S));
    CHECK(integral_homology(S).same_groups(integral_homology(X)));
  }
  // subdividing twice still works on small input
  SimplicialSet S2 = barycentric_subdivision(barycentric_subdivision(minimal_sphere(1)));
  CHECK(integral_homology(S2).same_groups(integral_homology(minimal_sphere(1))));
}

TEST_CASE("subdivided simplex action") {
  SdSimplex s = sd_simplex_with_action(2);
  CHECK(s.space.counts == std::vector<std::int64_t>({7, 12, 6}));
  std::string why;
  CHECK_MESSAGE(validate_action(s.space, s.action, &why), why);
  CHECK(s.action.order() == 6);
}

TEST_CASE("suspension is one-connected") {
  SimplicialSet S = suspension(torus());
  CHECK(valid(S));
  HomologyProfile H = integral_homology(S);
  CHECK(H.groups[1].trivial());
  CHECK(H.groups[2] == zz(2));
  CHECK(H.groups[3] == zz(1));
}

TEST_CASE("budget errors carry census data") {
  SimplicialSet s2 = minimal_sphere(2);
  try {
    multi_product({&s2, &s2, &s2, &s2}, 3);
    FAIL("budget not enforced");
  } catch (const BudgetError& e) {
    CHECK(!e.partial_census().empty());
  }
}
