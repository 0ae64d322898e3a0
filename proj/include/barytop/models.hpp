#ifndef BARYTOP_MODELS_HPP
#define BARYTOP_MODELS_HPP

#include <string>

#include "barytop/homology.hpp"
#include "barytop/ops.hpp"
#include "barytop/series.hpp"

namespace barytop {

// SP^n(X): the n-fold product modulo coordinate permutation.
SimplicialSet symmetric_product(int n, const SimplicialSet& X,
                                std::int64_t budget = kDefaultCellBudget);

// The n! coordinate permutations of an n-fold product, in lexicographic
// order with the identity first.
GroupAction product_permutation_action(const MultiProduct& P);

// SP-bar^n(X) = X^(n)/S_n.  Cells are enumerated directly as sorted orbit
// representatives of basepoint-free product tuples plus the collapse point;
// the result coincides cell-for-cell with
// orbit_quotient(smash_power(X, n)) up to the cell numbering.
SimplicialSet reduced_symmetric_product(int n, const SimplicialSet& X,
                                        std::int64_t budget = kDefaultCellBudget);

// Reference route through the general operations (used for cross-checks).
SimplicialSet reduced_symmetric_product_composed(int n, const SimplicialSet& X,
                                                 std::int64_t budget = kDefaultCellBudget);

// Census of SP-bar^n(X) by pure counting, without materializing faces.
CellCensus reduced_symmetric_product_census(int n, const SimplicialSet& X,
                                            std::int64_t budget = kDefaultCellBudget);

// A model of the weighted-barycenter space B_n(X).  Reported homology of
// B_n(X) in degree d is the model's homology in degree d + degree_shift.
struct BarycenterModel {
  enum class Kind { suspension, direct };
  Kind kind;
  SimplicialSet space;
  int degree_shift = 0;
  int n = 1;
  std::string source;
};

// Suspension model: reduced symmetric product of the suspension, shift 1.
BarycenterModel barycenter_suspension_model(int n, const SimplicialSet& X,
                                            std::int64_t budget = kDefaultCellBudget);

// Direct model: the subdivided-simplex sphere smashed with the n-th smash
// power, quotiented by the diagonal permutation action, shift 0.
BarycenterModel barycenter_direct_model(int n, const SimplicialSet& X,
                                        std::int64_t budget = kDefaultCellBudget);

// Reported homology of B_n(X): degree 0 is Z, positive degrees read off the
// model with its shift.  Default range: the model dimension minus the shift.
HomologyProfile barycenter_homology(const BarycenterModel& B, int max_degree = -1);
PoincareSeries barycenter_betti_mod_p(const BarycenterModel& B, long long p,
                                      int max_degree = -1);
std::int64_t barycenter_euler(const BarycenterModel& B);

// Double mapping cylinder of X <- X^2 -> SP^2(X) (projection and quotient):
// a model of the symmetric join of weight two, agreeing with both barycenter
// models in homology.
SimplicialSet symjoin2_cylinder_model(const SimplicialSet& X,
                                      std::int64_t budget = kDefaultCellBudget);

// Homology of the sphere quotient Q_{n,k}, inferred by desuspending
// B_n(S^k) by k+1 degrees.
struct QProfile {
  int n = 0, k = 0;
  HomologyProfile profile;
};

QProfile infer_Q_homology(int n, int k, int range,
                          std::int64_t budget = kDefaultCellBudget);

}  // namespace barytop

#endif
