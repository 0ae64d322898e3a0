#ifndef BARYTOP_GROUP_ACTION_HPP
#define BARYTOP_GROUP_ACTION_HPP

#include <string>
#include <vector>

#include "barytop/simplicial_set.hpp"

namespace barytop {

// A finite group acting by simplicial automorphisms, given by the cell
// permutation of every group element in every dimension.  Element 0 is the
// identity and the element list is closed under composition.
struct GroupAction {
  std::vector<std::vector<std::vector<std::int32_t>>> perm;  // [g][dim][cell]

  int order() const { return static_cast<int>(perm.size()); }
  std::int32_t apply(int g, int dim, std::int32_t cell) const {
    return perm[g][dim][cell];
  }
};

GroupAction trivial_action(const SimplicialSet& X);

// Checks: element 0 is the identity, every element is a dimension-wise
// permutation commuting with all faces (degeneracy words are preserved
// automatically), and the element set is closed under composition.
bool validate_action(const SimplicialSet& X, const GroupAction& act,
                     std::string* why = nullptr);

}  // namespace barytop

#endif
