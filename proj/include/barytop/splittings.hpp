#ifndef BARYTOP_SPLITTINGS_HPP
#define BARYTOP_SPLITTINGS_HPP

#include <string>
#include <vector>

#include "barytop/series.hpp"

namespace barytop {

struct SplittingSummand {
  std::string name;
  long long multiplicity = 1;
  PoincareSeries reduced;  // reduced series of one copy
};

struct SplittingReport {
  std::vector<SplittingSummand> summands;
  PoincareSeries total;  // full series: unit plus all summands
};

// Reduced Betti series of the wedge decomposition of SP-bar^n of a k-fold
// wedge: parts[i][r] is the reduced series of SP-bar^r(X_i) for r = 0..n
// (r = 0 is the unit series, one class in degree 0).  Sums the reduced-series
// products over all compositions of n and restores the unit.
PoincareSeries rsp_wedge_series(int n, const std::vector<std::vector<PoincareSeries>>& parts);

// Helpers for the splitting tables.
PoincareSeries sphere_reduced_series(int m, long long p, int dmax);
// Reduced mod-p series of the (shift)-fold suspension of the projective plane.
PoincareSeries suspended_rp2_reduced_series(int shift, long long p, int dmax);

// Stable splitting of the weight-two barycenter space of a genus-g surface,
// written at the unsuspended level: (2g^2+g) copies of S^3, 2g copies of
// S^4, and one triple-suspended projective plane.
SplittingReport b2_surface_splitting(int g, long long p, int dmax);

// Six-term stable splitting of B_2(X x Y) from the reduced series of X, Y
// and of the three barycenter pieces.
SplittingReport b2_product_splitting(const PoincareSeries& red_x, const PoincareSeries& red_y,
                                     const PoincareSeries& red_b2x,
                                     const PoincareSeries& red_b2y,
                                     const PoincareSeries& red_b2_smash, int dmax);

std::string splitting_to_json(const SplittingReport& r);
std::string splitting_to_text(const SplittingReport& r);

}  // namespace barytop

#endif
