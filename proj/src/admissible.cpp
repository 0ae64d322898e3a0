#include "barytop/admissible.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace barytop {

std::vector<AdmissibleWord> admissible_sequences(int base, int dmax) {
  if (base < 2) throw std::invalid_argument("admissible_sequences: base must be >= 2");
  if (dmax < base) throw std::invalid_argument("admissible_sequences: dmax must be >= base");
  std::vector<AdmissibleWord> out;
  out.push_back(AdmissibleWord{{}, base});
  // grow words from the right; the leftmost entry at least doubles
  std::vector<int> cur;
  auto rec = [&](auto&& self, int sum) -> void {
    if (!cur.empty()) {
      AdmissibleWord w{std::vector<int>(cur.rbegin(), cur.rend()), base};
      if (w.excess() < base) out.push_back(w);
    }
    int lo = cur.empty() ? 2 : 2 * cur.back();
    for (int i = lo; base + sum + i <= dmax; ++i) {
      cur.push_back(i);
      self(self, sum + i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const AdmissibleWord& a, const AdmissibleWord& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.indices < b.indices;
  });
  return out;
}

std::string admissible_to_string(const AdmissibleWord& w) {
  std::ostringstream os;
  if (w.indices.empty()) {
    os << "iota_" << w.base;
    return os.str();
  }
  for (int i : w.indices) os << "Sq^" << i << " ";
  os << "iota_" << w.base;
  return os.str();
}

}  // namespace barytop
