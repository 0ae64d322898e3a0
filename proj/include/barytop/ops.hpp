#ifndef BARYTOP_OPS_HPP
#define BARYTOP_OPS_HPP

#include <cstdint>
#include <vector>

#include "barytop/budget.hpp"
#include "barytop/group_action.hpp"
#include "barytop/simplicial_set.hpp"

namespace barytop {

// A simplicial map, recorded on nondegenerate cells; the image may be
// degenerate.  Extends to all simplices by composing degeneracy words.
struct SimplicialMap {
  std::vector<std::vector<SimplexRef>> image;  // [dim][cell]

  SimplexRef apply(int dim, const SimplexRef& s) const {
    const SimplexRef& im = image[dim - word_size(s.letters)][s.cell];
    return {compose_words(s.letters, im.letters), im.cell};
  }
};

bool verify_simplicial_map(const SimplicialSet& X, const SimplicialMap& f,
                           const SimplicialSet& Y, std::string* why = nullptr);

// One factor of a product cell: the nondegenerate cell together with the set
// of "active" positions (the complement of its degeneracy letters in the
// ambient dimension).  |active| equals the cell's dimension; a tuple is
// jointly nondegenerate exactly when the active sets cover the ambient set.
struct ProductComponent {
  std::int32_t cell = -1;
  std::int8_t dim = 0;
  Mask active = 0;
  bool operator==(const ProductComponent&) const = default;
};

struct MultiProduct {
  SimplicialSet space;
  int arity = 0;
  std::vector<std::vector<ProductComponent>> keys;  // [dim], stride = arity

  const ProductComponent* key(int dim, std::int64_t cell) const {
    return keys[dim].data() + cell * arity;
  }
  std::int64_t find_cell(int dim, const ProductComponent* comps) const;
  // Image of a product cell in factor j, as a simplex of that factor.
  SimplexRef project(int dim, std::int64_t cell, int j) const;
};

MultiProduct multi_product(const std::vector<const SimplicialSet*>& factors,
                           std::int64_t budget = kDefaultCellBudget);

struct ProductResult {
  SimplicialSet space;
  SimplicialMap proj1, proj2;
};

ProductResult product(const SimplicialSet& X, const SimplicialSet& Y,
                      std::int64_t budget = kDefaultCellBudget);

SimplicialSet wedge(const SimplicialSet& X, const SimplicialSet& Y);

struct QuotientResult {
  SimplicialSet space;
  SimplicialMap projection;
};

// X/A for a subcomplex A (marked cells, closed under faces, nonempty).  The
// collapse point becomes the basepoint with id 0.
QuotientResult collapse_subcomplex(const SimplicialSet& X,
                                   const std::vector<std::vector<char>>& in_A);

QuotientResult orbit_quotient_with_map(const SimplicialSet& X, const GroupAction& act);
SimplicialSet orbit_quotient(const SimplicialSet& X, const GroupAction& act);

// Action induced on the target of a quotient map whose classes the action
// permutes; every target cell needs a preimage with an empty word.
GroupAction transport_action(const GroupAction& act, const SimplicialMap& projection,
                             const SimplicialSet& from, const SimplicialSet& to);

// Pushout of W <- A -> Y along a simplicial map f defined on the subcomplex
// A.  Cells of Y keep their ids; surviving cells of W follow.
struct GlueResult {
  SimplicialSet space;
  SimplicialMap from_W, from_Y;
};

GlueResult glue(const SimplicialSet& W, const std::vector<std::vector<char>>& in_A,
                const SimplicialMap& f, const SimplicialSet& Y);

SimplicialSet smash(const SimplicialSet& X, const SimplicialSet& Y,
                    std::int64_t budget = kDefaultCellBudget);

struct SmashPower {
  SimplicialSet space;
  GroupAction action;
  MultiProduct power;                      // the underlying n-fold product
  std::vector<std::vector<std::int64_t>> rep;  // smash cell -> product cell
  SimplicialMap collapse;                  // product -> smash
};

SmashPower smash_power(const SimplicialSet& X, int n,
                       std::int64_t budget = kDefaultCellBudget);

// Reduced suspension S^1 ^ X.
SimplicialSet suspension(const SimplicialSet& X,
                         std::int64_t budget = kDefaultCellBudget);

// Quotient by the congruence generated by identifying cells pairwise.
// Pairs must match in dimension.
struct CellPair {
  int dim;
  std::int64_t a, b;
};
QuotientResult quotient_identify(const SimplicialSet& X,
                                 const std::vector<CellPair>& pairs,
                                 std::int64_t budget = kDefaultCellBudget);

// Internal entry point shared by quotient_identify and the subdivision:
// quotient of X by the congruence generated by arbitrary simplex equations.
struct SimplexEquation {
  int dim;
  SimplexRef lhs, rhs;
};
QuotientResult quotient_by_congruence(const SimplicialSet& X,
                                      const std::vector<SimplexEquation>& seeds,
                                      std::int64_t budget = kDefaultCellBudget);

SimplicialSet disjoint_union(const std::vector<const SimplicialSet*>& parts);

SimplicialSet barycentric_subdivision(const SimplicialSet& X,
                                      std::int64_t budget = kDefaultCellBudget);

// Nerve of the poset of nonempty subsets of {0..k} together with the
// permutation action of S_{k+1}; basepoint is the barycenter vertex.
struct SdSimplex {
  SimplicialSet space;
  GroupAction action;
};
SdSimplex sd_simplex_with_action(int k);

}  // namespace barytop

#endif
