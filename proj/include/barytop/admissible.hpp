#ifndef BARYTOP_ADMISSIBLE_HPP
#define BARYTOP_ADMISSIBLE_HPP

#include <string>
#include <vector>

namespace barytop {

// An admissible iterated-square index I = (i1,...,ir) on a fundamental class
// of dimension `base`:
//   (i)   excess i1 - i2 - ... - ir < base
//   (ii)  i_k >= 2 * i_{k+1}
//   (iii) i_r > 1
// The empty word is the fundamental class itself.
struct AdmissibleWord {
  std::vector<int> indices;
  int base = 0;

  int degree() const {
    int s = base;
    for (int i : indices) s += i;
    return s;
  }
  int filtration() const { return 1 << indices.size(); }
  int excess() const {
    if (indices.empty()) return 0;
    int e = indices[0];
    for (std::size_t j = 1; j < indices.size(); ++j) e -= indices[j];
    return e;
  }
  bool operator==(const AdmissibleWord&) const = default;
};

// All admissible words with degree <= dmax, empty word included, ordered by
// degree then lexicographically.  base must be >= 2.
std::vector<AdmissibleWord> admissible_sequences(int base, int dmax);

std::string admissible_to_string(const AdmissibleWord& w);

}  // namespace barytop

#endif
