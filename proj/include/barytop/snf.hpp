#ifndef BARYTOP_SNF_HPP
#define BARYTOP_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "barytop/chains.hpp"

namespace barytop {

using BigInt = boost::multiprecision::cpp_int;

// Smith normal form of an integer matrix.  diagonal holds the full diagonal
// of length min(rows, cols): nonnegative entries, each dividing the next,
// trailing zeros.  When certificates are requested, U (rows x rows) and
// V (cols x cols) are unimodular with U * A * V = diag exactly.
struct SNFResult {
  std::vector<BigInt> diagonal;
  std::vector<std::vector<BigInt>> U;
  std::vector<std::vector<BigInt>> V;

  std::int64_t rank() const {
    std::int64_t r = 0;
    for (const BigInt& d : diagonal)
      if (d != 0) ++r;
    return r;
  }
  // Invariant factors > 1 (the torsion coefficients of a boundary map).
  std::vector<BigInt> nontrivial_factors() const {
    std::vector<BigInt> out;
    for (const BigInt& d : diagonal)
      if (d > 1) out.push_back(d);
    return out;
  }
};

SNFResult smith_normal_form(const SparseIntMatrix& M, bool with_certificates = false);

}  // namespace barytop

#endif
