#ifndef BARYTOP_SPHERE_SERIES_HPP
#define BARYTOP_SPHERE_SERIES_HPP

#include <string>
#include <vector>

#include "barytop/admissible.hpp"
#include "barytop/series.hpp"

namespace barytop {

// A generator of the bigraded homology algebra of SP^infinity of a sphere:
// total degree, filtration weight, and whether it is an exterior generator.
struct BigradedGenerator {
  int degree = 0;
  int filtration = 1;
  bool exterior = false;
  std::string provenance;
};

// Mod-2 generators for the k-sphere up to degree dmax.  For k >= 2 these are
// the admissible words (degree k + |I|, filtration 2^r); k = 1 is the
// exterior-algebra special case with the single class of degree 1.
std::vector<BigradedGenerator> mod2_sphere_generators(int k, int dmax);

// Mod-2 Betti series of SP-bar^n(S^k): monomials of total filtration exactly
// n.  sp_sphere_series_mod2 counts filtration at most n.
PoincareSeries rsp_sphere_series_mod2(int n, int k, int dmax);
PoincareSeries sp_sphere_series_mod2(int n, int k, int dmax);

// Mod-2 Betti series of B_n(S^k): the reduced symmetric product series of
// S^{k+1} shifted down one degree, with the unit restored in degree 0.
PoincareSeries barycenter_sphere_series_mod2(int n, int k, int dmax);

// Mod-p Betti series of B_n(S^2) for odd p, from the exterior/polynomial
// generator families with filtrations p^i.
PoincareSeries barycenter_s2_series_modp(int n, long long p, int dmax);

// For p > n > 1: a single class in degree n(k+1)-1 when k is odd, nothing
// in positive degrees when k is even.
PoincareSeries barycenter_sphere_large_p(int n, int k, long long p, int dmax = -1);

}  // namespace barytop

#endif
