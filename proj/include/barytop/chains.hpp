#ifndef BARYTOP_CHAINS_HPP
#define BARYTOP_CHAINS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "barytop/simplicial_set.hpp"

namespace barytop {

// Column-major sparse integer matrix; each column holds strictly increasing
// row indices with nonzero coefficients.
struct SparseIntMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> col;

  std::int64_t nnz() const {
    std::int64_t n = 0;
    for (const auto& c : col) n += static_cast<std::int64_t>(c.size());
    return n;
  }
};

// Normalized chain complex: boundary[d] maps degree-d cells to degree-(d-1)
// cells; faces carrying a nonempty degeneracy word contribute zero.
struct ChainComplex {
  std::vector<SparseIntMatrix> boundary;  // index 0..top; boundary[0] has 0 rows
  int top() const { return static_cast<int>(boundary.size()) - 1; }
};

// Builds boundaries up to max_degree (default: the full dimension) and
// verifies that consecutive boundaries compose to zero.
ChainComplex normalized_chains(const SimplicialSet& X, int max_degree = -1);

// Rank over the prime field F_p by sparse column reduction.
std::int64_t rank_mod_p(const SparseIntMatrix& M, long long p);

}  // namespace barytop

#endif
