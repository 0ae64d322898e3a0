#include "barytop/chains.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace barytop {

ChainComplex normalized_chains(const SimplicialSet& X, int max_degree) {
  int top = (max_degree < 0) ? X.dim() : std::min(max_degree, X.dim());
  ChainComplex C;
  C.boundary.resize(top + 1);
  C.boundary[0].rows = 0;
  C.boundary[0].cols = X.cell_count(0);
  C.boundary[0].col.resize(X.cell_count(0));
  std::map<std::int32_t, std::int64_t> acc;
  for (int d = 1; d <= top; ++d) {
    SparseIntMatrix& B = C.boundary[d];
    B.rows = X.cell_count(d - 1);
    B.cols = X.cell_count(d);
    B.col.resize(B.cols);
    for (std::int64_t c = 0; c < B.cols; ++c) {
      acc.clear();
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& f = X.face(d, c, i);
        if (f.letters != 0) continue;
        acc[f.cell] += (i % 2 == 0) ? 1 : -1;
      }
      auto& entries = B.col[c];
      for (const auto& [r, v] : acc)
        if (v != 0) entries.emplace_back(r, v);
    }
  }
  // boundary-of-boundary must vanish
  for (int d = 2; d <= top; ++d) {
    const SparseIntMatrix& B = C.boundary[d];
    const SparseIntMatrix& A = C.boundary[d - 1];
    for (std::int64_t c = 0; c < B.cols; ++c) {
      acc.clear();
      for (const auto& [r, v] : B.col[c])
        for (const auto& [r2, v2] : A.col[r]) acc[r2] += v * v2;
      for (const auto& [r2, v2] : acc)
        if (v2 != 0) throw std::logic_error("normalized_chains: boundary^2 != 0");
    }
  }
  return C;
}

namespace {

long long mod_inverse(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = a % p;
  if (newr < 0) newr += p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return t < 0 ? t + p : t;
}

using Col = std::vector<std::pair<std::int32_t, std::int32_t>>;

// out = a + lambda * b  (mod p), rows kept sorted
void axpy(const Col& a, long long lambda, const Col& b, long long p, Col& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      long long v = (lambda * b[j].second) % p;
      if (v != 0) out.emplace_back(b[j].first, static_cast<std::int32_t>(v));
      ++j;
    } else {
      long long v = (a[i].second + lambda * b[j].second) % p;
      if (v != 0) out.emplace_back(a[i].first, static_cast<std::int32_t>(v));
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::int64_t rank_mod_p(const SparseIntMatrix& M, long long p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: p must be >= 2");
  std::vector<Col> cols(M.cols);
  for (std::int64_t c = 0; c < M.cols; ++c) {
    cols[c].reserve(M.col[c].size());
    for (const auto& [r, v] : M.col[c]) {
      long long m = v % p;
      if (m < 0) m += p;
      if (m != 0) cols[c].emplace_back(r, static_cast<std::int32_t>(m));
    }
  }
  // pivot row -> column index holding that pivot
  std::unordered_map<std::int32_t, std::int64_t> pivots;
  pivots.reserve(static_cast<std::size_t>(std::min(M.rows, M.cols)) * 2 + 16);
  std::int64_t rank = 0;
  Col scratch;
  for (std::int64_t c = 0; c < M.cols; ++c) {
    Col& cur = cols[c];
    while (!cur.empty()) {
      std::int32_t low = cur.back().first;
      auto it = pivots.find(low);
      if (it == pivots.end()) {
        pivots.emplace(low, c);
        ++rank;
        break;
      }
      const Col& other = cols[it->second];
      long long lambda =
          (p - (static_cast<long long>(cur.back().second) *
                mod_inverse(other.back().second, p)) % p) % p;
      axpy(cur, lambda, other, p, scratch);
      cur.swap(scratch);
    }
  }
  return rank;
}

}  // namespace barytop
