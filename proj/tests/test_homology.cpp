#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "barytop/homology.hpp"
#include "barytop/snf.hpp"
#include "barytop/spaces.hpp"

using namespace barytop;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

// Independent textbook Smith reduction on a dense matrix: repeatedly bring
// the smallest entry to the corner by explicit row/column operations.
std::vector<BigInt> naive_snf(Dense a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = t, pc = t;
    bool any = false;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!any || abs(a[i][j]) < best)) {
          any = true;
          best = abs(a[i][j]);
          pr = i;
          pc = j;
        }
    if (!any) break;
    std::swap(a[t], a[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the block
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
              clean = false;
            }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  diag.resize(std::min(rows, cols), 0);
  return diag;
}

SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& m) {
  SparseIntMatrix M;
  M.rows = static_cast<std::int64_t>(m.size());
  M.cols = m.empty() ? 0 : static_cast<std::int64_t>(m[0].size());
  M.col.resize(M.cols);
  for (std::int64_t c = 0; c < M.cols; ++c)
    for (std::int64_t r = 0; r < M.rows; ++r)
      if (m[r][c] != 0) M.col[c].emplace_back(static_cast<std::int32_t>(r), m[r][c]);
  return M;
}

HomologyGroup zz(std::int64_t r, std::vector<long long> t = {}) {
  return HomologyGroup{r, std::move(t)};
}

}  // namespace

TEST_CASE("smith normal form pinned examples") {
  CHECK(smith_normal_form(from_dense({{2, 0}, {0, 3}})).diagonal ==
        std::vector<BigInt>({1, 6}));
  CHECK(smith_normal_form(from_dense({{0, 0}, {0, 0}})).diagonal ==
        std::vector<BigInt>({0, 0}));
  CHECK(smith_normal_form(from_dense({{2, 0}, {0, 2}})).diagonal ==
        std::vector<BigInt>({2, 2}));
  // a permuted diagonal must be re-sorted into the divisibility chain
  CHECK(smith_normal_form(from_dense({{0, 0, 12}, {6, 0, 0}, {0, 2, 0}})).diagonal ==
        std::vector<BigInt>({2, 6, 12}));
}

TEST_CASE("smith normal form agrees with the naive dense reduction") {
  std::uint64_t s = 42;
  auto rng = [&]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long long>((s >> 40) % 11) - 5;
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + trial % 6, cols = 1 + (trial / 3) % 6;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    Dense d(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = rng();
        d[i][j] = m[i][j];
      }
    CHECK(smith_normal_form(from_dense(m)).diagonal == naive_snf(d));
  }
}

TEST_CASE("boundary matrices") {
  ChainComplex C = normalized_chains(standard_simplex(1));
  REQUIRE(C.boundary[1].cols == 1);
  std::vector<std::pair<std::int32_t, std::int64_t>> want = {{0, -1}, {1, 1}};
  CHECK(C.boundary[1].col[0] == want);
  ChainComplex S = normalized_chains(minimal_sphere(3));
  for (int d = 1; d <= 3; ++d) CHECK(S.boundary[d].nnz() == 0);
}

TEST_CASE("integral homology examples") {
  HomologyProfile R = integral_homology(rp2());
  CHECK(R.groups[0] == zz(1));
  CHECK(R.groups[1] == zz(0, {2}));
  CHECK(R.groups[2] == zz(0));
  for (int k = 1; k <= 4; ++k) {
    HomologyProfile H = integral_homology(minimal_sphere(k));
    CHECK(H.groups[0] == zz(1));
    CHECK(H.groups[k] == zz(1));
  }
}

TEST_CASE("mod-p Betti numbers") {
  PoincareSeries r2 = betti_mod_p(rp2(), 2);
  CHECK(r2.coeffs == std::vector<long long>({1, 1, 1}));
  PoincareSeries r3 = betti_mod_p(rp2(), 3);
  CHECK(r3.coeffs == std::vector<long long>({1, 0, 0}));
  PoincareSeries t2 = betti_mod_p(torus(), 2);
  CHECK(t2.coeffs == std::vector<long long>({1, 2, 1}));
  CHECK_THROWS_AS(betti_mod_p(torus(), 4), std::invalid_argument);
  CHECK_THROWS_AS(betti_mod_p(torus(), 1), std::invalid_argument);
}

TEST_CASE("universal coefficients on the small corpus") {
  for (const SimplicialSet& X : {rp2(), torus(), surface(2), minimal_sphere(3)}) {
    HomologyProfile HZ = integral_homology(X);
    for (long long p : {2ll, 3ll, 5ll}) {
      PoincareSeries direct = betti_mod_p(X, p);
      PoincareSeries predicted = betti_mod_p_from_integral(HZ, p);
      for (int d = 0; d <= direct.dmax(); ++d) CHECK(direct.at(d) == predicted.at(d));
    }
  }
}

TEST_CASE("truncation flag") {
  HomologyProfile H = integral_homology(torus(), 4);
  CHECK(H.truncated);
  CHECK(H.top_degree() == 4);
  CHECK(H.groups[3].trivial());
  CHECK_FALSE(integral_homology(torus(), 2).truncated);
}

TEST_CASE("homology json fields are stable") {
  std::string j = homology_to_json(integral_homology(rp2()));
  CHECK(j.find("\"degree\"") != std::string::npos);
  CHECK(j.find("\"rank\"") != std::string::npos);
  CHECK(j.find("\"torsion\"") != std::string::npos);
}
