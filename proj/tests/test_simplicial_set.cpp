#include <doctest.h>

#include <stdexcept>

#include "barytop/homology.hpp"
#include "barytop/simplicial_set.hpp"
#include "barytop/spaces.hpp"

using namespace barytop;

TEST_CASE("validate accepts the canonical spaces") {
  std::string why;
  for (const SimplicialSet& X :
       {point(), standard_simplex(3), minimal_sphere(4), torus(), rp2(), surface(2)}) {
    CHECK_MESSAGE(X.validate(&why), why);
    CHECK(X.connected());
  }
}

TEST_CASE("validate rejects broken face data") {
  SimplicialSet X = minimal_sphere(2);
  X.faces[2][0].cell = 7;  // dangling target
  CHECK_FALSE(X.validate());

  SimplicialSet Y = torus();
  Y.basepoint = 99;
  CHECK_FALSE(Y.validate());
}

TEST_CASE("simplex_face pushes through degeneracy words") {
  SimplicialSet X = minimal_sphere(1);
  // d_0 s_1 = s_0 d_0, while d_1 and d_2 absorb into s_1
  SimplexRef s1e{word_from_letters({1}), 0};
  CHECK(X.simplex_face(2, s1e, 0) == SimplexRef{word_from_letters({0}), 0});
  CHECK(X.simplex_face(2, s1e, 1) == SimplexRef{0, 0});
  CHECK(X.simplex_face(2, s1e, 2) == SimplexRef{0, 0});
}

TEST_CASE("census and euler") {
  CHECK(census(standard_simplex(2)).counts == std::vector<std::int64_t>({3, 3, 1}));
  CHECK(census(point()).counts == std::vector<std::int64_t>({1}));
  CHECK(census(minimal_sphere(2)).counts == std::vector<std::int64_t>({1, 0, 1}));
  CHECK(euler_from_census(point()) == 1);
  CHECK(euler_from_census(minimal_sphere(2)) == 2);
  CHECK(euler_from_census(minimal_sphere(3)) == 0);
  CHECK(euler_from_census(torus()) == 0);
}

TEST_CASE("json round trip is byte-exact") {
  for (const SimplicialSet& X : {torus(), rp2(), minimal_sphere(3)}) {
    std::string s = simplicial_set_to_json(X);
    SimplicialSet Y = simplicial_set_from_json(s);
    CHECK(simplicial_set_to_json(Y) == s);
    CHECK(Y.counts == X.counts);
    CHECK(Y.basepoint == X.basepoint);
    CHECK(integral_homology(Y).same_groups(integral_homology(X)));
  }
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(simplicial_set_from_json("{\"dims\": 1, \"cells\": [1], "
                                           "\"basepoint\": 0, \"faces\": []}"),
                  std::invalid_argument);
}
