#ifndef BARYTOP_HOMOLOGY_HPP
#define BARYTOP_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "barytop/chains.hpp"
#include "barytop/series.hpp"
#include "barytop/simplicial_set.hpp"

namespace barytop {

struct HomologyGroup {
  std::int64_t free_rank = 0;
  std::vector<long long> torsion;  // invariant factors >= 2, each dividing the next
  bool operator==(const HomologyGroup&) const = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Integral homology per degree.  truncated is set when the requested range
// exceeds the dimension of the underlying model (higher groups are zero).
struct HomologyProfile {
  std::vector<HomologyGroup> groups;
  bool truncated = false;

  int top_degree() const { return static_cast<int>(groups.size()) - 1; }
  const HomologyGroup& at(int d) const { return groups[d]; }
  bool same_groups(const HomologyProfile& o) const { return groups == o.groups; }
};

bool is_prime(long long p);

HomologyProfile integral_homology(const SimplicialSet& X, int max_degree = -1);

// Mod-p Betti numbers by rank computations over F_p, independent of the
// integer pipeline.
PoincareSeries betti_mod_p(const SimplicialSet& X, long long p, int max_degree = -1);

std::int64_t euler_from_homology(const HomologyProfile& H);

// Universal-coefficients prediction of mod-p dimensions from integral data.
PoincareSeries betti_mod_p_from_integral(const HomologyProfile& H, long long p);

std::string homology_to_json(const HomologyProfile& H);
std::string homology_to_text(const HomologyProfile& H);

}  // namespace barytop

#endif
