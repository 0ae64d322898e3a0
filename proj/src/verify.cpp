#include "barytop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "barytop/admissible.hpp"
#include "barytop/homology.hpp"
#include "barytop/models.hpp"
#include "barytop/ops.hpp"
#include "barytop/series.hpp"
#include "barytop/snf.hpp"
#include "barytop/spaces.hpp"
#include "barytop/sphere_series.hpp"
#include "barytop/splittings.hpp"

namespace barytop {

namespace {

struct Harness {
  std::vector<CheckResult> out;
  std::string suite;
  VerifyOptions opt;

  template <typename F>
  void run(const std::string& name, F&& f) {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      f(r);
      r.pass = true;
    } catch (const BudgetError& e) {
      r.pass = true;
      r.skipped = true;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

std::string group_str(const HomologyGroup& g) {
  std::ostringstream os;
  os << "(" << g.free_rank;
  for (long long t : g.torsion) os << ",Z/" << t;
  os << ")";
  return os.str();
}

std::string profile_str(const HomologyProfile& H) {
  std::ostringstream os;
  for (int d = 0; d <= H.top_degree(); ++d) os << group_str(H.groups[d]);
  return os.str();
}

// Degreewise comparison; degrees beyond either list are trivial.
void expect_profile(const HomologyProfile& got, const std::vector<HomologyGroup>& want,
                    const std::string& what) {
  int top = std::max<int>(got.top_degree(), static_cast<int>(want.size()) - 1);
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g = (d <= got.top_degree()) ? got.groups[d] : HomologyGroup{};
    HomologyGroup w =
        (d < static_cast<int>(want.size())) ? want[d] : HomologyGroup{};
    if (!(g == w))
      throw std::runtime_error(what + ": degree " + std::to_string(d) + " got " +
                               group_str(g) + " want " + group_str(w) +
                               " [full: " + profile_str(got) + "]");
  }
}

void expect_series(const PoincareSeries& got, const std::vector<long long>& want,
                   const std::string& what) {
  int top = std::max<int>(got.dmax(), static_cast<int>(want.size()) - 1);
  for (int d = 0; d <= top; ++d) {
    long long g = got.at(d);
    long long w = (d < static_cast<int>(want.size())) ? want[d] : 0;
    if (g != w)
      throw std::runtime_error(what + ": degree " + std::to_string(d) + " got " +
                               std::to_string(g) + " want " + std::to_string(w));
  }
}

void expect_series_eq(const PoincareSeries& a, const PoincareSeries& b,
                      const std::string& what) {
  expect_series(a, b.coeffs, what);
}

HomologyGroup zz(std::int64_t rank, std::vector<long long> torsion = {}) {
  return HomologyGroup{rank, std::move(torsion)};
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
  return r;
}

struct CorpusSpace {
  std::string name;
  SimplicialSet space;
  int connectivity;  // largest r with the space r-connected (0 = just connected)
  std::int64_t chi;
};

std::vector<CorpusSpace> corpus() {
  std::vector<CorpusSpace> v;
  v.push_back({"S1", minimal_sphere(1), 0, 0});
  v.push_back({"S2", minimal_sphere(2), 1, 2});
  v.push_back({"S3", minimal_sphere(3), 2, 0});
  v.push_back({"torus", torus(), 0, 0});
  v.push_back({"RP2", rp2(), 0, 1});
  v.push_back({"C2", surface(2), 0, -2});
  return v;
}

void expect_valid(const SimplicialSet& X, const std::string& what) {
  std::string why;
  expect(X.validate(&why), what + ": invalid simplicial set: " + why);
}

// Deterministic cell relabeling (basepoint tracked).
SimplicialSet permute_cells(const SimplicialSet& X, std::uint64_t seed) {
  std::vector<std::vector<std::int32_t>> to_new(X.dim() + 1);
  std::uint64_t s = seed;
  auto rng = [&]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  };
  for (int d = 0; d <= X.dim(); ++d) {
    std::vector<std::int32_t> order(X.cell_count(d));
    for (std::int64_t c = 0; c < X.cell_count(d); ++c) order[c] = static_cast<std::int32_t>(c);
    for (std::int64_t c = X.cell_count(d) - 1; c > 0; --c)
      std::swap(order[c], order[rng() % (c + 1)]);
    to_new[d].resize(X.cell_count(d));
    for (std::int64_t c = 0; c < X.cell_count(d); ++c) to_new[d][order[c]] = static_cast<std::int32_t>(c);
  }
  SimplicialSet Y;
  Y.counts = X.counts;
  Y.faces.resize(X.dim() + 1);
  for (int d = 1; d <= X.dim(); ++d) {
    Y.faces[d].resize(X.counts[d] * (d + 1));
    for (std::int64_t c = 0; c < X.counts[d]; ++c) {
      for (int i = 0; i <= d; ++i) {
        SimplexRef f = X.face(d, c, i);
        int p = d - 1 - word_size(f.letters);
        f.cell = to_new[p][f.cell];
        Y.faces[d][to_new[d][c] * (d + 1) + i] = f;
      }
    }
  }
  Y.basepoint = to_new[0][X.basepoint];
  return Y;
}

SparseIntMatrix dense_to_sparse(const std::vector<std::vector<long long>>& m) {
  SparseIntMatrix M;
  M.rows = static_cast<std::int64_t>(m.size());
  M.cols = m.empty() ? 0 : static_cast<std::int64_t>(m[0].size());
  M.col.resize(M.cols);
  for (std::int64_t c = 0; c < M.cols; ++c)
    for (std::int64_t r = 0; r < M.rows; ++r)
      if (m[r][c] != 0) M.col[c].emplace_back(static_cast<std::int32_t>(r), m[r][c]);
  return M;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  BigInt prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? BigInt(1) : sign * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------

void suite_sset_core(Harness& H) {
  H.run("simplex-census", [&](CheckResult&) {
    for (int k = 0; k <= 5; ++k) {
      SimplicialSet X = standard_simplex(k);
      expect_valid(X, "simplex");
      for (int d = 0; d <= k; ++d)
        expect(X.counts[d] == binom(k + 1, d + 1), "simplex census mismatch");
    }
  });
  H.run("minimal-spheres", [&](CheckResult&) {
    for (int k = 1; k <= 5; ++k) {
      SimplicialSet X = minimal_sphere(k);
      expect_valid(X, "sphere");
      expect(X.total_cells() == 2, "sphere census");
      expect(euler_from_census(X) == 1 + ((k % 2 == 0) ? 1 : -1), "sphere chi");
    }
    bool rejected = false;
    try {
      minimal_sphere(0);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(rejected, "minimal_sphere(0) must be rejected");
  });
  H.run("surfaces", [&](CheckResult&) {
    SimplicialSet T = torus(), R = rp2(), C = surface(2), S = surface(0);
    for (const SimplicialSet* X : {&T, &R, &C, &S}) {
      expect_valid(*X, "surface");
      expect(X->connected(), "surface connected");
    }
    expect(T.counts == std::vector<std::int64_t>({1, 3, 2}), "torus census");
    expect(surface(1).counts == std::vector<std::int64_t>({2, 6, 4}), "polygon torus census");
    expect(integral_homology(surface(1)).same_groups(integral_homology(T)),
           "torus models disagree");
    expect(R.counts == std::vector<std::int64_t>({2, 3, 2}), "rp2 census");
    expect(C.counts == std::vector<std::int64_t>({2, 12, 8}), "genus-2 census");
    expect(euler_from_census(T) == 0 && euler_from_census(R) == 1 &&
               euler_from_census(C) == -2 && euler_from_census(S) == 2,
           "surface chi");
  });
  H.run("product-top-cells", [&](CheckResult&) {
    SimplicialSet D1 = standard_simplex(1);
    SimplicialSet P = product(D1, D1).space;
    expect_valid(P, "product");
    expect(P.counts == std::vector<std::int64_t>({4, 5, 2}), "square census");
  });
  H.run("product-census-formula", [&](CheckResult&) {
    SimplicialSet s1 = minimal_sphere(1);
    std::vector<std::pair<SimplicialSet, SimplicialSet>> pairs;
    pairs.emplace_back(standard_simplex(1), standard_simplex(1));
    pairs.emplace_back(s1, s1);
    pairs.emplace_back(minimal_sphere(2), torus());
    pairs.emplace_back(standard_simplex(2), s1);
    for (const auto& [X, Y] : pairs) {
      SimplicialSet P = product(X, Y).space;
      int D = X.dim() + Y.dim();
      // complete census: pairs of cells with jointly covering active sets
      for (int d = 0; d <= D; ++d) {
        std::int64_t predicted = 0;
        for (int i = 0; i <= X.dim(); ++i)
          for (int j = 0; j <= Y.dim(); ++j)
            if (i + j >= d && i <= d && j <= d)
              predicted += X.counts[i] * Y.counts[j] * binom(d, d - i) * binom(i, d - j);
        expect(P.cell_count(d) == predicted, "complete product census formula");
      }
      // in the top dimension this reduces to the shuffle count
      std::int64_t shuffles = 0;
      for (int i = 0; i <= X.dim(); ++i) {
        int j = D - i;
        if (j >= 0 && j <= Y.dim())
          shuffles += X.counts[i] * Y.counts[j] * binom(D, i);
      }
      expect(P.cell_count(D) == shuffles, "top-degree shuffle count");
    }
  });
  H.run("product-identity", [&](CheckResult&) {
    for (const SimplicialSet& X : {minimal_sphere(2), torus()}) {
      SimplicialSet P = product(point(), X).space;
      expect(census(P) == census(X), "product with a point changes the census");
    }
  });
  H.run("product-homology-torus", [&](CheckResult&) {
    SimplicialSet P = product(minimal_sphere(1), minimal_sphere(1)).space;
    expect_profile(integral_homology(P), {zz(1), zz(2), zz(1)}, "S1 x S1");
    expect_profile(integral_homology(torus()), {zz(1), zz(2), zz(1)}, "torus model");
  });
  H.run("wedge-smash", [&](CheckResult&) {
    SimplicialSet s1 = minimal_sphere(1), s2 = minimal_sphere(2);
    expect_profile(integral_homology(smash(s1, s1)), {zz(1), zz(0), zz(1)}, "S1^S1");
    expect_profile(integral_homology(wedge(s1, s2)), {zz(1), zz(1), zz(1)}, "S1vS2");
    expect_valid(smash(s1, s2), "smash");
    expect_valid(wedge(rp2(), torus()), "wedge");
  });
  H.run("smash-power", [&](CheckResult&) {
    SmashPower S = smash_power(minimal_sphere(1), 3);
    expect_valid(S.space, "smash power");
    expect(S.space.cell_count(3) == 6, "3! shuffle top cells");
    std::string why;
    expect(validate_action(S.space, S.action, &why), "action invalid: " + why);
    expect_profile(integral_homology(S.space), {zz(1), zz(0), zz(0), zz(1)}, "S1^^3");
  });
  H.run("suspension-shift", [&](CheckResult&) {
    for (const CorpusSpace& c : corpus()) {
      if (c.space.dim() > 2) continue;
      SimplicialSet SX = suspension(c.space);
      HomologyProfile HX = integral_homology(c.space), HS = integral_homology(SX);
      for (int d = 1; d <= HX.top_degree() + 1; ++d) {
        HomologyGroup below = (d - 1 >= 1 && d - 1 <= HX.top_degree())
                                  ? HX.groups[d - 1]
                                  : HomologyGroup{};
        HomologyGroup up = (d <= HS.top_degree()) ? HS.groups[d] : HomologyGroup{};
        expect(below == up, c.name + ": suspension does not shift degree " +
                                std::to_string(d - 1));
      }
      expect(HS.groups[0] == zz(1), "suspension connected");
    }
  });
  H.run("suspension-examples", [&](CheckResult&) {
    expect_profile(integral_homology(suspension(minimal_sphere(1))),
                   {zz(1), zz(0), zz(1)}, "susp S1");
    expect_profile(integral_homology(suspension(torus())),
                   {zz(1), zz(0), zz(2), zz(1)}, "susp torus");
    expect_profile(integral_homology(suspension(rp2())),
                   {zz(1), zz(0), zz(0, {2})}, "susp RP2");
  });
  H.run("quotient-endpoints", [&](CheckResult&) {
    QuotientResult q = quotient_identify(standard_simplex(1), {CellPair{0, 0, 1}});
    expect(q.space.counts == std::vector<std::int64_t>({1, 1}), "circle census");
    expect_profile(integral_homology(q.space), {zz(1), zz(1)}, "Delta1/endpoints");
  });
  H.run("quotient-trivial", [&](CheckResult&) {
    SimplicialSet T = torus();
    QuotientResult q = quotient_identify(T, {});
    expect(census(q.space) == census(T), "trivial quotient census");
    expect(integral_homology(q.space).same_groups(integral_homology(T)),
           "trivial quotient homology");
    bool rejected = false;
    try {
      quotient_identify(T, {CellPair{0, 0, 0}, CellPair{3, 0, 0}});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(rejected, "dimension-mismatched identification must be rejected");
  });
  H.run("quotient-unreduced-suspension", [&](CheckResult&) {
    SimplicialSet I = standard_simplex(1), S1 = minimal_sphere(1);
    MultiProduct P = multi_product({&I, &S1});
    auto end_marks = [&](std::int32_t v) {
      std::vector<std::vector<char>> marks(P.space.dim() + 1);
      for (int d = 0; d <= P.space.dim(); ++d) {
        marks[d].assign(P.space.counts[d], 0);
        for (std::int64_t c = 0; c < P.space.counts[d]; ++c)
          if (P.key(d, c)[0].dim == 0 && P.key(d, c)[0].cell == v) marks[d][c] = 1;
      }
      return marks;
    };
    QuotientResult q1 = collapse_subcomplex(P.space, end_marks(0));
    // transport the other end circle through the first collapse
    auto m2 = end_marks(1);
    std::vector<std::vector<char>> marks2(q1.space.dim() + 1);
    for (int d = 0; d <= q1.space.dim(); ++d) marks2[d].assign(q1.space.counts[d], 0);
    for (int d = 0; d <= P.space.dim(); ++d)
      for (std::int64_t c = 0; c < P.space.counts[d]; ++c)
        if (m2[d][c]) marks2[d][q1.projection.image[d][c].cell] = 1;
    QuotientResult q2 = collapse_subcomplex(q1.space, marks2);
    expect_valid(q2.space, "double collapse");
    expect_profile(integral_homology(q2.space), {zz(1), zz(0), zz(1)},
                   "unreduced suspension of the circle");
  });
  H.run("orbit-reduced-square-s2", [&](CheckResult&) {
    SmashPower S = smash_power(minimal_sphere(2), 2);
    SimplicialSet Q = orbit_quotient(S.space, S.action);
    expect_profile(integral_homology(Q), {zz(1), zz(0), zz(0), zz(0), zz(1)},
                   "SPbar2(S2) = S4");
  });
  H.run("orbit-trivial", [&](CheckResult&) {
    SimplicialSet T = torus();
    SimplicialSet Q = orbit_quotient(T, trivial_action(T));
    expect(census(Q) == census(T), "trivial orbit census");
    expect(integral_homology(Q).same_groups(integral_homology(T)), "trivial orbit homology");
  });
  H.run("orbit-sp2-circle", [&](CheckResult&) {
    SimplicialSet s1 = minimal_sphere(1);
    MultiProduct P = multi_product({&s1, &s1});
    GroupAction act = product_permutation_action(P);
    SimplicialSet Q = orbit_quotient(P.space, act);
    expect_profile(integral_homology(Q), {zz(1), zz(1)}, "SP2(S1) ~ S1");
  });
  H.run("orbit-commuting", [&](CheckResult&) {
    SimplicialSet A = wedge(minimal_sphere(1), minimal_sphere(1));
    MultiProduct P = multi_product({&A, &A});
    GroupAction swap_factors = product_permutation_action(P);
    // the wedge involution exchanging the two loops, applied diagonally
    GroupAction loop_swap;
    loop_swap.perm = {{{0}, {0, 1}}, {{0}, {1, 0}}};
    GroupAction diag;
    diag.perm.resize(2);
    for (int g = 0; g < 2; ++g) {
      diag.perm[g].resize(P.space.dim() + 1);
      for (int d = 0; d <= P.space.dim(); ++d) {
        diag.perm[g][d].resize(P.space.counts[d]);
        for (std::int64_t c = 0; c < P.space.counts[d]; ++c) {
          ProductComponent k[2] = {P.key(d, c)[0], P.key(d, c)[1]};
          for (int j = 0; j < 2; ++j)
            k[j].cell = loop_swap.perm[g][k[j].dim][k[j].cell];
          diag.perm[g][d][c] = static_cast<std::int32_t>(P.find_cell(d, k));
        }
      }
    }
    QuotientResult q1 = orbit_quotient_with_map(P.space, swap_factors);
    GroupAction diag1 = transport_action(diag, q1.projection, P.space, q1.space);
    SimplicialSet r1 = orbit_quotient(q1.space, diag1);
    QuotientResult q2 = orbit_quotient_with_map(P.space, diag);
    GroupAction swap2 = transport_action(swap_factors, q2.projection, P.space, q2.space);
    SimplicialSet r2 = orbit_quotient(q2.space, swap2);
    expect(census(r1) == census(r2), "commuting orbit quotients: census order-dependent");
    expect(integral_homology(r1).same_groups(integral_homology(r2)),
           "commuting orbit quotients: homology order-dependent");
  });
  H.run("sd-simplex", [&](CheckResult&) {
    SdSimplex s1 = sd_simplex_with_action(1);
    expect(s1.space.counts == std::vector<std::int64_t>({3, 2}), "sd Delta1 census");
    // swap exchanges the two outer vertices and fixes the barycenter
    expect(s1.action.perm.size() == 2, "S2 order");
    expect(s1.action.perm[1][0] == std::vector<std::int32_t>({1, 0, 2}),
           "swap on sd Delta1 vertices");
    for (int k = 1; k <= 3; ++k) {
      SdSimplex s = sd_simplex_with_action(k);
      expect_valid(s.space, "sd simplex");
      std::string why;
      expect(validate_action(s.space, s.action, &why), "sd action invalid: " + why);
      expect_profile(integral_homology(s.space), {zz(1)}, "sd simplex contractible");
    }
  });
  H.run("sd-homology-invariance", [&](CheckResult&) {
    for (const SimplicialSet& X :
         {minimal_sphere(2), rp2(), torus(), standard_simplex(2)}) {
      SimplicialSet S = barycentric_subdivision(X);
      expect_valid(S, "sd");
      expect(integral_homology(S).same_groups(integral_homology(X)),
             "subdivision changes homology");
    }
    SimplicialSet sd1 = barycentric_subdivision(standard_simplex(1));
    expect(sd1.counts == std::vector<std::int64_t>({3, 2}), "sd Delta1 census");
  });
  H.run("json-round-trip", [&](CheckResult&) {
    for (const SimplicialSet& X :
         {torus(), rp2(), smash(minimal_sphere(1), minimal_sphere(1))}) {
      std::string s = simplicial_set_to_json(X);
      SimplicialSet Y = simplicial_set_from_json(s);
      expect(simplicial_set_to_json(Y) == s, "round trip not byte-exact");
      expect(census(Y) == census(X) && Y.basepoint == X.basepoint, "round trip census");
    }
  });
  H.run("census-chi", [&](CheckResult&) {
    for (const CorpusSpace& c : corpus())
      expect(euler_from_census(c.space) == euler_from_homology(integral_homology(c.space)),
             c.name + ": census chi != homology chi");
  });
}

void suite_homology(Harness& H) {
  H.run("boundary-squared", [&](CheckResult&) {
    for (const CorpusSpace& c : corpus()) normalized_chains(c.space);
    normalized_chains(smash(minimal_sphere(1), rp2()));
  });
  H.run("chains-examples", [&](CheckResult&) {
    ChainComplex C = normalized_chains(standard_simplex(1));
    expect(C.boundary[1].cols == 1 && C.boundary[1].col[0].size() == 2,
           "interval boundary");
    expect(smith_normal_form(C.boundary[1]).rank() == 1, "interval boundary rank");
    ChainComplex S = normalized_chains(minimal_sphere(2));
    expect(S.boundary[1].nnz() == 0 && S.boundary[2].nnz() == 0,
           "minimal sphere boundaries vanish");
    ChainComplex T = normalized_chains(torus());
    std::int64_t chi = T.boundary[0].cols - T.boundary[1].cols + T.boundary[2].cols;
    expect(chi == 0, "torus chi from chain ranks");
  });
  H.run("snf-examples", [&](CheckResult&) {
    SNFResult d23 = smith_normal_form(dense_to_sparse({{2, 0}, {0, 3}}));
    expect(d23.diagonal == std::vector<BigInt>({1, 6}), "diag(2,3) -> (1,6)");
    SNFResult z = smith_normal_form(dense_to_sparse({{0, 0}, {0, 0}, {0, 0}}));
    expect(z.diagonal == std::vector<BigInt>({0, 0}) && z.rank() == 0, "zero matrix");
    SNFResult d22 = smith_normal_form(dense_to_sparse({{2, 0}, {0, 2}}));
    expect(d22.diagonal == std::vector<BigInt>({2, 2}), "diag(2,2)");
  });
  H.run("snf-certificates", [&](CheckResult&) {
    std::uint64_t s = 12345;
    auto rng = [&]() {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<long long>((s >> 40) % 9) - 4;
    };
    for (int trial = 0; trial < 12; ++trial) {
      int rows = 2 + trial % 5, cols = 2 + (trial / 2) % 5;
      std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
      for (auto& row : m)
        for (auto& v : row) v = rng();
      SparseIntMatrix M = dense_to_sparse(m);
      SNFResult snf = smith_normal_form(M, true);
      // U * A * V must equal the diagonal exactly
      std::vector<std::vector<BigInt>> ua(rows, std::vector<BigInt>(cols, 0));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          for (int k = 0; k < rows; ++k) ua[i][j] += snf.U[i][k] * m[k][j];
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
          BigInt v = 0;
          for (int k = 0; k < cols; ++k) v += ua[i][k] * snf.V[k][j];
          BigInt want = (i == j && i < static_cast<int>(snf.diagonal.size()))
                            ? snf.diagonal[i]
                            : BigInt(0);
          expect(v == want, "U*A*V is not the diagonal");
        }
      }
      expect(abs(bareiss_det(snf.U)) == 1, "U not unimodular");
      expect(abs(bareiss_det(snf.V)) == 1, "V not unimodular");
      for (std::size_t k = 1; k < snf.diagonal.size(); ++k)
        if (snf.diagonal[k - 1] != 0)
          expect(snf.diagonal[k] % snf.diagonal[k - 1] == 0, "divisibility chain");
    }
  });
  H.run("homology-examples", [&](CheckResult&) {
    expect_profile(integral_homology(rp2()), {zz(1), zz(0, {2}), zz(0)}, "RP2");
    for (int k = 1; k <= 4; ++k) {
      std::vector<HomologyGroup> want(k + 1, zz(0));
      want[0] = zz(1);
      want[k] = zz(1);
      expect_profile(integral_homology(minimal_sphere(k)), want, "sphere");
    }
    expect_profile(integral_homology(surface(2)), {zz(1), zz(4), zz(1)}, "genus 2");
  });
  H.run("rp2-standard-triangulation", [&](CheckResult&) {
    // antipodal quotient of the icosahedron, vertices 0..5
    SimplicialSet R6 = from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                       {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1},
                                       {4, 5, 2}, {5, 1, 3}});
    expect_valid(R6, "RP2_6");
    expect(R6.counts == std::vector<std::int64_t>({6, 15, 10}), "RP2_6 census");
    expect(integral_homology(R6).same_groups(integral_homology(rp2())),
           "RP2 models disagree");
  });
  H.run("universal-coefficients", [&](CheckResult&) {
    for (const CorpusSpace& c : corpus()) {
      HomologyProfile HZ = integral_homology(c.space);
      for (long long p : {2ll, 3ll, 5ll})
        expect_series_eq(betti_mod_p(c.space, p), betti_mod_p_from_integral(HZ, p),
                         c.name + " mod " + std::to_string(p));
    }
  });
  H.run("chi-consistency", [&](CheckResult&) {
    for (const CorpusSpace& c : corpus()) {
      std::int64_t chi = euler_from_census(c.space);
      expect(chi == c.chi, c.name + ": unexpected chi");
      for (long long p : {2ll, 3ll, 5ll})
        expect(series_euler(betti_mod_p(c.space, p)) == chi,
               c.name + ": mod-p chi mismatch");
    }
  });
  H.run("relabel-invariance", [&](CheckResult&) {
    for (const SimplicialSet& X : {torus(), rp2(), smash(minimal_sphere(1), rp2())}) {
      SimplicialSet Y = permute_cells(X, 99);
      expect_valid(Y, "permuted");
      expect(integral_homology(Y).same_groups(integral_homology(X)),
             "homology depends on cell numbering");
    }
  });
  H.run("mod-p-validation", [&](CheckResult&) {
    bool rejected = false;
    try {
      betti_mod_p(torus(), 6);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(rejected, "composite p must be rejected");
    HomologyProfile Hp = integral_homology(torus(), 5);
    expect(Hp.truncated && Hp.top_degree() == 5 && Hp.groups[4].trivial(),
           "truncation flag");
  });
}

void suite_models(Harness& H) {
  H.run("model-agreement", [&](CheckResult&) {
    std::vector<std::pair<int, CorpusSpace>> cases;
    for (const CorpusSpace& c : corpus()) {
      if (c.name == "S3" || c.name == "C2") continue;
      cases.push_back({2, c});
    }
    cases.push_back({3, {"S1", minimal_sphere(1), 0, 0}});
    cases.push_back({3, {"S2", minimal_sphere(2), 1, 2}});
    for (const auto& [n, c] : cases) {
      BarycenterModel A = barycenter_suspension_model(n, c.space, H.opt.cell_budget);
      BarycenterModel B = barycenter_direct_model(n, c.space, H.opt.cell_budget);
      HomologyProfile HA = barycenter_homology(A), HB = barycenter_homology(B);
      expect_profile(HB, HA.groups,
                     "models disagree on B_" + std::to_string(n) + "(" + c.name + ")");
    }
  });
  H.run("cylinder-model", [&](CheckResult&) {
    expect_profile(integral_homology(symjoin2_cylinder_model(point())), {zz(1)},
                   "SJ2(pt) contractible");
    for (const CorpusSpace& c : corpus()) {
      if (c.name == "S3" || c.name == "C2") continue;
      SimplicialSet M = symjoin2_cylinder_model(c.space, H.opt.cell_budget);
      expect(M.connected(), "cylinder model connected");
      BarycenterModel A = barycenter_suspension_model(2, c.space, H.opt.cell_budget);
      expect_profile(integral_homology(M), barycenter_homology(A).groups,
                     "cylinder model vs suspension model on " + c.name);
    }
  });
  H.run("simple-connectivity-proxy", [&](CheckResult&) {
    for (const CorpusSpace& c : corpus()) {
      if (c.name == "S3" || c.name == "C2") continue;
      for (int n : {2, 3}) {
        BarycenterModel B = barycenter_suspension_model(n, c.space, H.opt.cell_budget);
        expect(barycenter_homology(B, 1).groups[1].trivial(),
               "H1(B_" + std::to_string(n) + "(" + c.name + ")) != 0");
      }
    }
  });
  H.run("connectivity-bound", [&](CheckResult&) {
    struct Case { int n; const char* name; SimplicialSet X; int r; };
    std::vector<Case> cases;
    cases.push_back({2, "S2", minimal_sphere(2), 1});
    cases.push_back({3, "S2", minimal_sphere(2), 1});
    cases.push_back({2, "S3", minimal_sphere(3), 2});
    for (const Case& c : cases) {
      BarycenterModel B = barycenter_suspension_model(c.n, c.X, H.opt.cell_budget);
      int bound = 2 * c.n + c.r - 2;
      HomologyProfile HB = barycenter_homology(B, bound);
      for (int i = 1; i <= bound; ++i)
        expect(HB.groups[i].trivial(), std::string("B_") + std::to_string(c.n) + "(" +
                                           c.name + ") not " + std::to_string(bound) +
                                           "-connected");
    }
    BarycenterModel B22 = barycenter_suspension_model(2, minimal_sphere(2));
    expect(barycenter_homology(B22, 4).groups[4] == zz(0, {2}),
           "connectivity bound not attained at B_2(S^2)");
  });
  H.run("top-class", [&](CheckResult&) {
    BarycenterModel B1 = barycenter_suspension_model(2, minimal_sphere(1));
    expect(barycenter_homology(B1, 3).groups[3] == zz(1), "H3(B2 S1) = Z");
    BarycenterModel B2 = barycenter_suspension_model(2, minimal_sphere(2));
    expect(barycenter_homology(B2, 5).groups[5].trivial(), "H5(B2 S2) = 0");
    BarycenterModel BT = barycenter_suspension_model(2, torus());
    expect(barycenter_homology(BT, 5).groups[5].trivial(), "H5(B2 T) = 0");
    expect(barycenter_betti_mod_p(B1, 2, 3).at(3) == 1, "mod-2 top class B2 S1");
    expect(barycenter_betti_mod_p(B2, 2, 5).at(5) == 1, "mod-2 top class B2 S2");
    expect(barycenter_betti_mod_p(BT, 2, 5).at(5) == 1, "mod-2 top class B2 T");
  });
  H.run("wedge-decomposition", [&](CheckResult&) {
    SimplicialSet W = wedge(minimal_sphere(1), minimal_sphere(1));
    expect_profile(integral_homology(reduced_symmetric_product(2, W)),
                   {zz(1), zz(0), zz(1)}, "SPbar2(S1 v S1) = S2");
    SimplicialSet W23 = wedge(minimal_sphere(2), minimal_sphere(3));
    expect_series(betti_mod_p(reduced_symmetric_product(2, W23), 2),
                  {1, 0, 0, 0, 1, 2, 1}, "SPbar2(S2 v S3) mod 2");
  });
  H.run("dimension-bound", [&](CheckResult&) {
    for (const CorpusSpace& c : corpus()) {
      if (c.name == "S3" || c.name == "C2") continue;
      int d = c.space.dim();
      BarycenterModel B = barycenter_suspension_model(2, c.space, H.opt.cell_budget);
      HomologyProfile HB = barycenter_homology(B, 2 * (d + 1) + 1);
      for (int i = 2 * (d + 1); i <= HB.top_degree(); ++i)
        expect(HB.groups[i].trivial(), c.name + ": class above the dimension bound");
    }
  });
  H.run("symmetric-product-examples", [&](CheckResult&) {
    expect_profile(integral_homology(symmetric_product(2, minimal_sphere(2))),
                   {zz(1), zz(0), zz(1), zz(0), zz(1)}, "SP2(S2) = CP2");
    expect_profile(integral_homology(symmetric_product(2, minimal_sphere(1))),
                   {zz(1), zz(1)}, "SP2(S1) ~ S1");
    SimplicialSet X = torus();
    expect(census(symmetric_product(1, X)) == census(X), "SP1 = X");
  });
  H.run("reduced-symmetric-product-examples", [&](CheckResult&) {
    expect_profile(integral_homology(reduced_symmetric_product(2, minimal_sphere(2))),
                   {zz(1), zz(0), zz(0), zz(0), zz(1)}, "SPbar2(S2) = S4");
    HomologyProfile h23 = integral_homology(reduced_symmetric_product(2, minimal_sphere(3)));
    expect_profile(h23, {zz(1), zz(0), zz(0), zz(0), zz(0), zz(0, {2}), zz(0)},
                   "SPbar2(S3)");
    expect_series(betti_mod_p(reduced_symmetric_product(2, minimal_sphere(3)), 2),
                  {1, 0, 0, 0, 0, 1, 1}, "SPbar2(S3) mod 2");
    SimplicialSet X = rp2();
    expect(census(reduced_symmetric_product(1, X)) == census(X), "SPbar1 = X");
  });
  H.run("fused-vs-composed", [&](CheckResult&) {
    struct Case { int n; SimplicialSet X; std::string name; };
    std::vector<Case> cases;
    cases.push_back({2, minimal_sphere(1), "S1"});
    cases.push_back({3, minimal_sphere(1), "S1"});
    cases.push_back({2, minimal_sphere(2), "S2"});
    cases.push_back({2, torus(), "torus"});
    cases.push_back({2, rp2(), "RP2"});
    cases.push_back({3, minimal_sphere(2), "S2"});
    for (const Case& c : cases) {
      SimplicialSet A = reduced_symmetric_product(c.n, c.X);
      SimplicialSet B = reduced_symmetric_product_composed(c.n, c.X);
      expect(census(A) == census(B),
             "fused and composed SPbar census differ on " + c.name);
      expect(integral_homology(A).same_groups(integral_homology(B)),
             "fused and composed SPbar homology differ on " + c.name);
      expect_valid(A, "fused SPbar");
    }
  });
  H.run("rsp-vs-sp-quotient", [&](CheckResult&) {
    for (const SimplicialSet& X : {minimal_sphere(1), minimal_sphere(2), torus()}) {
      // SPbar^2 as SP^2 / SP^1: collapse the orbits of basepoint-bearing tuples
      std::vector<const SimplicialSet*> factors = {&X, &X};
      MultiProduct P = multi_product(factors);
      GroupAction act = product_permutation_action(P);
      QuotientResult SP = orbit_quotient_with_map(P.space, act);
      std::vector<std::vector<char>> marks(SP.space.dim() + 1);
      for (int d = 0; d <= SP.space.dim(); ++d) marks[d].assign(SP.space.counts[d], 0);
      for (int d = 0; d <= P.space.dim(); ++d) {
        for (std::int64_t c = 0; c < P.space.counts[d]; ++c) {
          const ProductComponent* k = P.key(d, c);
          bool has_bp = (k[0].dim == 0 && k[0].cell == X.basepoint) ||
                        (k[1].dim == 0 && k[1].cell == X.basepoint);
          if (has_bp) marks[d][SP.projection.image[d][c].cell] = 1;
        }
      }
      SimplicialSet Q = collapse_subcomplex(SP.space, marks).space;
      expect(integral_homology(Q).same_groups(
                 integral_homology(reduced_symmetric_product(2, X))),
             "SP2/SP1 disagrees with SPbar2");
    }
  });
  H.run("q-profiles", [&](CheckResult&) {
    QProfile q1 = infer_Q_homology(2, 1, 1);
    expect_profile(q1.profile, {zz(1), zz(1)}, "Q_{2,1} = S1");
    QProfile q2 = infer_Q_homology(2, 2, 2);
    expect_profile(q2.profile, {zz(1), zz(0, {2}), zz(0)}, "Q_{2,2} = RP2");
    QProfile q3 = infer_Q_homology(2, 3, 3);
    expect_profile(q3.profile, {zz(1), zz(0, {2}), zz(0), zz(1)}, "Q_{2,3} = RP3");
    expect(infer_Q_homology(2, 1, 5).profile.truncated, "Q truncation flag");
  });
  H.run("budget-guardrail", [&](CheckResult&) {
    bool hit = false;
    try {
      reduced_symmetric_product(3, minimal_sphere(2), 10);
    } catch (const BudgetError& e) {
      hit = true;
      expect(!e.partial_census().empty(), "budget error carries a census");
    }
    expect(hit, "budget guardrail did not trigger");
  });
}

void suite_sphere_mod2(Harness& H) {
  H.run("admissible-examples", [&](CheckResult&) {
    auto w310 = admissible_sequences(3, 10);
    std::vector<std::vector<int>> idx;
    for (const auto& w : w310) idx.push_back(w.indices);
    expect(idx == std::vector<std::vector<int>>({{}, {2}, {4, 2}}), "base 3, dmax 10");
    expect(w310[0].degree() == 3 && w310[1].degree() == 5 && w310[2].degree() == 9,
           "degrees 3, 5, 9");
    expect(w310[2].filtration() == 4, "filtration 2^r");
    auto w26 = admissible_sequences(2, 6);
    expect(w26.size() == 1 && w26[0].indices.empty(), "base 2 has only the empty word");
    auto w320 = admissible_sequences(3, 20);
    bool found = false;
    for (const auto& w : w320) found = found || (w.indices == std::vector<int>{8, 4, 2});
    expect(found && w320.back().degree() <= 20, "(8,4,2) at degree 17");
    bool rejected = false;
    try {
      admissible_sequences(1, 5);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(rejected, "base < 2 must be rejected");
  });
  H.run("admissible-exhaustive", [&](CheckResult&) {
    // independent generator: all raw tuples, filtered by the three conditions
    auto naive = [](int base, int dmax) {
      std::set<std::vector<int>> out;
      out.insert(std::vector<int>{});
      std::vector<std::vector<int>> frontier = {{}};
      while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
          int sum = 0;
          for (int i : w) sum += i;
          for (int i = 1; base + sum + i <= dmax; ++i) {
            std::vector<int> v = w;
            v.push_back(i);
            next.push_back(v);
            bool ok = v.back() > 1;
            for (std::size_t j = 0; j + 1 < v.size() && ok; ++j)
              ok = v[j] >= 2 * v[j + 1];
            int excess = v[0];
            for (std::size_t j = 1; j < v.size(); ++j) excess -= v[j];
            if (ok && excess < base) out.insert(v);
          }
        }
        frontier = std::move(next);
      }
      return out;
    };
    for (int base : {2, 3, 4, 5}) {
      for (int dmax : {base, 10, 16}) {
        std::set<std::vector<int>> got;
        for (const auto& w : admissible_sequences(base, dmax)) got.insert(w.indices);
        expect(got == naive(base, dmax), "enumeration differs from the naive oracle");
      }
    }
  });
  H.run("grid-n3-k2", [&](CheckResult&) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 2; ++k) {
        SimplicialSet R = reduced_symmetric_product(n, minimal_sphere(k), H.opt.cell_budget);
        PoincareSeries brute = betti_mod_p(R, 2, 12);
        brute.coeffs.resize(13, 0);
        PoincareSeries sym = rsp_sphere_series_mod2(n, k, 12);
        sym.coeffs[0] += 1;  // the model keeps its basepoint class
        expect_series_eq(sym, brute,
                         "rsp mod-2 grid (" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  });
  H.run("sp-series-projective", [&](CheckResult&) {
    for (int n = 1; n <= 4; ++n) {
      PoincareSeries s = sp_sphere_series_mod2(n, 2, 2 * n + 2);
      std::vector<long long> want(2 * n + 3, 0);
      for (int d = 0; d <= 2 * n; d += 2) want[d] = 1;
      expect_series(s, want, "SP^n(S^2) is complex projective space");
    }
    PoincareSeries brute = betti_mod_p(symmetric_product(2, minimal_sphere(2)), 2, 6);
    expect_series(brute, {1, 0, 1, 0, 1}, "brute SP2(S2)");
  });
  H.run("sigma-shift-consistency", [&](CheckResult&) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
      int dmax = n * (k + 1);
      PoincareSeries bary = barycenter_sphere_series_mod2(n, k, dmax);
      PoincareSeries shifted = series_shift(rsp_sphere_series_mod2(n, k + 1, dmax + 1), -1);
      shifted.coeffs.resize(dmax + 1, 0);
      shifted.coeffs[0] = 1;
      expect_series_eq(bary, shifted, "sigma shift identity");
      BarycenterModel A = barycenter_suspension_model(n, minimal_sphere(k));
      expect_series_eq(bary, barycenter_betti_mod_p(A, 2, dmax), "series vs suspension model");
      BarycenterModel B = barycenter_direct_model(n, minimal_sphere(k));
      expect_series_eq(bary, barycenter_betti_mod_p(B, 2, dmax), "series vs direct model");
    }
  });
  H.run("circle-exterior-case", [&](CheckResult&) {
    for (int n = 2; n <= 4; ++n)
      expect_series(rsp_sphere_series_mod2(n, 1, 8), {}, "SPbar^n(S1) reduced homology");
    expect_series(rsp_sphere_series_mod2(1, 1, 4), {0, 1}, "SPbar^1(S1) = S1");
    expect_profile(integral_homology(reduced_symmetric_product(2, minimal_sphere(1))),
                   {zz(1)}, "SPbar2(S1) acyclic");
  });
  H.run("barycenter-series-examples", [&](CheckResult&) {
    expect_series(barycenter_sphere_series_mod2(2, 2, 6), {1, 0, 0, 0, 1, 1, 0},
                  "B_2(S^2) mod 2");
    expect_series(barycenter_sphere_series_mod2(3, 2, 9), {1, 0, 0, 0, 0, 0, 0, 1, 1, 0},
                  "B_3(S^2) mod 2");
    for (int k = 1; k <= 3; ++k)
      expect_series(barycenter_sphere_series_mod2(1, k, k + 1),
                    [&] {
                      std::vector<long long> w(k + 2, 0);
                      w[0] = 1;
                      w[k] = 1;
                      return w;
                    }(),
                    "B_1(S^k) = S^k");
  });
  H.run("odd-prime-series", [&](CheckResult&) {
    expect_series(barycenter_s2_series_modp(2, 3, 8), {1}, "B_2(S^2) mod 3 trivial");
    expect_series(barycenter_s2_series_modp(1, 5, 4), {1, 0, 1}, "B_1(S^2) = S^2");
    expect_series(barycenter_s2_series_modp(3, 3, 8), {1, 0, 0, 0, 0, 0, 1, 1, 0},
                  "B_3(S^2) mod 3");
    BarycenterModel B3 = barycenter_suspension_model(3, minimal_sphere(2), H.opt.cell_budget);
    expect_series_eq(barycenter_s2_series_modp(3, 3, 8), barycenter_betti_mod_p(B3, 3, 8),
                     "odd-prime series vs brute force");
    bool rejected = false;
    try {
      barycenter_s2_series_modp(2, 2, 6);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(rejected, "p = 2 must be routed to the mod-2 series");
  });
  H.run("large-prime-series", [&](CheckResult&) {
    expect_series(barycenter_sphere_large_p(2, 1, 3), {1, 0, 0, 1}, "B_2(S^1) at p=3");
    expect_series(barycenter_sphere_large_p(2, 2, 5), {1, 0, 0, 0, 0, 0}, "B_2(S^2) at p=5");
    expect_series(barycenter_sphere_large_p(3, 3, 5),
                  {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, "B_3(S^3) at p=5");
    struct Case { int n, k; long long p; };
    for (Case c : {Case{2, 1, 3}, Case{2, 2, 5}, Case{2, 3, 3}}) {
      BarycenterModel B = barycenter_suspension_model(c.n, minimal_sphere(c.k),
                                                      H.opt.cell_budget);
      expect_series_eq(barycenter_sphere_large_p(c.n, c.k, c.p),
                       barycenter_betti_mod_p(B, c.p), "large-prime vs brute force");
    }
  });
}

void suite_euler(Harness& H) {
  H.run("euler-sp", [&](CheckResult&) {
    for (int n = 1; n <= 6; ++n) expect(euler_sp(n, 0) == 0, "chi = 0 gives zero");
    expect(euler_sp(2, 2) == 3, "SP2 of a chi-2 space");
    expect(euler_sp(0, 7) == 1 && euler_sp(0, -3) == 1, "n = 0 coefficient");
    expect(euler_sp(2, -2) == 1 && euler_sp(3, -2) == 0, "negative chi series");
  });
  H.run("euler-rsp", [&](CheckResult&) {
    for (std::int64_t chi : {-3ll, 0ll, 1ll, 2ll, 5ll})
      expect(euler_rsp(1, chi) == chi, "SPbar1 = X");
    expect(euler_rsp(2, 2) == 2, "SPbar2 of S2");
    expect(euler_rsp(2, 0) == 1, "SPbar2 of S1 contractible");
  });
  H.run("euler-barycenter", [&](CheckResult&) {
    expect(euler_barycenter(2, 0) == 0, "B_2(S^1) = S^3");
    for (int n = 1; n <= 5; ++n) expect(euler_barycenter(n, 1) == 1, "chi = 1 fixed point");
    expect(euler_barycenter(2, 2) == 1, "B_2(S^2) has chi 1");
    expect(euler_barycenter(2, -2) == -5, "1 - (3)(4)/2");
  });
  H.run("suspension-identity", [&](CheckResult&) {
    for (int n = 1; n <= 6; ++n)
      for (std::int64_t chi = -5; chi <= 5; ++chi)
        expect(euler_barycenter(n, chi) == 2 - euler_rsp(n, 2 - chi),
               "suspension identity fails");
  });
  H.run("census-agreement", [&](CheckResult& r) {
    std::ostringstream skipped;
    for (const CorpusSpace& c : corpus()) {
      if (c.name == "S3") continue;
      for (int n = 1; n <= 3; ++n) {
        try {
          CellCensus cc = reduced_symmetric_product_census(
              n, suspension(c.space, H.opt.cell_budget), H.opt.cell_budget);
          std::int64_t chi_model = 0;
          for (std::size_t d = 0; d < cc.counts.size(); ++d)
            chi_model += (d % 2 == 0) ? cc.counts[d] : -cc.counts[d];
          expect(euler_barycenter(n, c.chi) == 2 - chi_model,
                 "chi formula vs census for B_" + std::to_string(n) + "(" + c.name + ")");
        } catch (const BudgetError&) {
          skipped << " B_" << n << "(" << c.name << ")";
        }
      }
    }
    if (!skipped.str().empty()) r.detail = "over budget:" + skipped.str();
  });
}

void suite_splittings(Harness& H) {
  H.run("torus-splitting", [&](CheckResult&) {
    BarycenterModel B = barycenter_suspension_model(2, torus(), H.opt.cell_budget);
    for (long long p : {2ll, 3ll}) {
      SplittingReport r = b2_surface_splitting(1, p, 6);
      expect_series_eq(r.total, barycenter_betti_mod_p(B, p, 6),
                       "torus splitting mod " + std::to_string(p));
    }
    SplittingReport r2 = b2_surface_splitting(1, 2, 6);
    expect(r2.summands.size() == 3 && r2.summands[0].multiplicity == 3 &&
               r2.summands[1].multiplicity == 2 && r2.summands[2].multiplicity == 1,
           "3 x S^3 + 2 x S^4 + suspended projective plane");
  });
  H.run("sphere-splitting", [&](CheckResult&) {
    SplittingReport r = b2_surface_splitting(0, 2, 6);
    expect_series(r.total, {1, 0, 0, 0, 1, 1}, "g = 0 total is B_2(S^2)");
    expect_series_eq(r.total, barycenter_sphere_series_mod2(2, 2, 6), "g = 0 vs series");
  });
  H.run("genus-2-splitting", [&](CheckResult&) {
    BarycenterModel B = barycenter_suspension_model(2, surface(2), H.opt.cell_budget);
    for (long long p : {2ll, 3ll}) {
      SplittingReport r = b2_surface_splitting(2, p, 6);
      expect(r.summands[0].multiplicity == 10 && r.summands[1].multiplicity == 4,
             "genus-2 multiplicities");
      expect_series_eq(r.total, barycenter_betti_mod_p(B, p, 6),
                       "genus-2 splitting mod " + std::to_string(p));
    }
  });
  H.run("product-splitting-torus", [&](CheckResult&) {
    for (long long p : {2ll, 3ll}) {
      int dmax = 6;
      PoincareSeries red_s1 = sphere_reduced_series(1, p, dmax);
      PoincareSeries red_b2s1 = sphere_reduced_series(3, p, dmax);  // B_2(S^1) = S^3
      PoincareSeries red_b2s2 =
          (p == 2) ? series_reduced(barycenter_sphere_series_mod2(2, 2, dmax))
                   : series_reduced(barycenter_s2_series_modp(2, p, dmax));
      SplittingReport r =
          b2_product_splitting(red_s1, red_s1, red_b2s1, red_b2s1, red_b2s2, dmax);
      expect(r.summands.size() == 6, "six terms");
      expect_series_eq(r.total, b2_surface_splitting(1, p, dmax).total,
                       "product splitting matches the torus splitting");
    }
  });
  H.run("wedge-series", [&](CheckResult&) {
    int dmax = 8;
    auto rsp_family = [&](int k, int n) {
      std::vector<PoincareSeries> fam;
      for (int r = 0; r <= n; ++r) {
        if (r == 0) {
          PoincareSeries unit = PoincareSeries::zero(2, dmax);
          unit.coeffs[0] = 1;
          fam.push_back(unit);
        } else {
          PoincareSeries s = rsp_sphere_series_mod2(r, k, dmax);
          fam.push_back(s);
        }
      }
      return fam;
    };
    PoincareSeries circles = rsp_wedge_series(2, {rsp_family(1, 2), rsp_family(1, 2)});
    expect_series(circles, {1, 0, 1}, "SPbar2(S1 v S1) = S2");
    PoincareSeries one = rsp_wedge_series(1, {rsp_family(2, 1), rsp_family(3, 1)});
    expect_series(one, {1, 0, 1, 1}, "n = 1 sums the parts");
    PoincareSeries s23 = rsp_wedge_series(2, {rsp_family(2, 2), rsp_family(3, 2)});
    expect_series(s23, {1, 0, 0, 0, 1, 2, 1}, "SPbar2(S2 v S3) mod 2");
    SimplicialSet W = wedge(minimal_sphere(2), minimal_sphere(3));
    PoincareSeries brute = betti_mod_p(reduced_symmetric_product(2, W), 2, dmax);
    brute.coeffs.resize(dmax + 1, 0);
    expect_series_eq(s23, brute, "wedge series vs brute force");
    bool rejected = false;
    try {
      rsp_wedge_series(2, {rsp_family(1, 1), rsp_family(1, 2)});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    expect(rejected, "missing component series must be rejected");
  });
}

void suite_acceptance(Harness& H);

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"sset-core", "homology", "models", "sphere-mod2", "euler", "splittings",
          "acceptance"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& opt) {
  Harness H;
  H.opt = opt;
  auto dispatch = [&](const std::string& s) {
    H.suite = s;
    if (s == "sset-core")
      suite_sset_core(H);
    else if (s == "homology")
      suite_homology(H);
    else if (s == "models")
      suite_models(H);
    else if (s == "sphere-mod2")
      suite_sphere_mod2(H);
    else if (s == "euler")
      suite_euler(H);
    else if (s == "splittings")
      suite_splittings(H);
    else if (s == "acceptance")
      suite_acceptance(H);
    else
      throw std::invalid_argument("unknown verify suite: " + s);
  };
  if (suite == "all") {
    for (const std::string& s : verify_suite_names()) dispatch(s);
  } else {
    dispatch(suite);
  }
  return std::move(H.out);
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

void suite_acceptance(Harness& H) {
  const std::int64_t budget = H.opt.cell_budget;
  H.run("A01-circle-spheres", [&](CheckResult& r) {
    for (int n : {2, 3}) {
      auto t0 = std::chrono::steady_clock::now();
      BarycenterModel A = barycenter_suspension_model(n, minimal_sphere(1), budget);
      std::vector<HomologyGroup> want(2 * n, zz(0));
      want[0] = zz(1);
      want.push_back(zz(1));
      expect_profile(barycenter_homology(A), want,
                     "B_" + std::to_string(n) + "(S^1) is not S^" + std::to_string(2 * n - 1));
      if (n == 2) {
        BarycenterModel B = barycenter_direct_model(n, minimal_sphere(1), budget);
        expect_profile(barycenter_homology(B), want, "direct model of B_2(S^1)");
      }
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      expect(dt < 10.0, "over the 10 s bound");
      r.detail += "n=" + std::to_string(n) + ": " + std::to_string(dt).substr(0, 5) + "s ";
    }
  });
  H.run("A02-suspended-projective", [&](CheckResult& r) {
    auto t0 = std::chrono::steady_clock::now();
    // B_2(S^k) = Sigma^{k+1} RP^k for k = 1, 2, 3
    BarycenterModel B1 = barycenter_suspension_model(2, minimal_sphere(1), budget);
    expect_profile(barycenter_homology(B1), {zz(1), zz(0), zz(0), zz(1)}, "k=1: S^3");
    BarycenterModel B2 = barycenter_suspension_model(2, minimal_sphere(2), budget);
    expect_profile(barycenter_homology(B2),
                   {zz(1), zz(0), zz(0), zz(0), zz(0, {2}), zz(0)}, "k=2: Sigma^3 RP^2");
    BarycenterModel B3 = barycenter_suspension_model(2, minimal_sphere(3), budget);
    expect_profile(barycenter_homology(B3),
                   {zz(1), zz(0), zz(0), zz(0), zz(0), zz(0, {2}), zz(0), zz(1)},
                   "k=3: Sigma^4 RP^3");
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(dt < 60.0, "over the 60 s bound");
    r.detail = std::to_string(dt).substr(0, 5) + "s";
  });
  H.run("A03-appendix-mod2-table", [&](CheckResult&) {
    PoincareSeries s = barycenter_sphere_series_mod2(2, 2, 6);
    expect_series(s, {1, 0, 0, 0, 1, 1, 0}, "symbolic table");
    BarycenterModel A = barycenter_suspension_model(2, minimal_sphere(2), budget);
    BarycenterModel B = barycenter_direct_model(2, minimal_sphere(2), budget);
    expect_series_eq(s, barycenter_betti_mod_p(A, 2, 6), "suspension model mod 2");
    expect_series_eq(s, barycenter_betti_mod_p(B, 2, 6), "direct model mod 2");
  });
  H.run("A04-nakaoka-grid", [&](CheckResult& r) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream note;
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= 3; ++k) {
        try {
          SimplicialSet R = reduced_symmetric_product(n, minimal_sphere(k), budget);
          PoincareSeries brute = betti_mod_p(R, 2, 12);
          brute.coeffs.resize(13, 0);
          PoincareSeries sym = rsp_sphere_series_mod2(n, k, 12);
          sym.coeffs[0] += 1;
          expect_series_eq(sym, brute,
                           "grid (" + std::to_string(n) + "," + std::to_string(k) + ")");
        } catch (const BudgetError&) {
          note << " (" << n << "," << k << ") over budget;";
        }
      }
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(dt < 600.0, "over the 10 min bound");
    r.detail = note.str() + " " + std::to_string(dt).substr(0, 6) + "s";
  });
  H.run("A05-euler-characteristic", [&](CheckResult& r) {
    std::ostringstream note;
    for (const CorpusSpace& c : corpus()) {
      if (c.name == "S3") continue;
      for (int n = 1; n <= 3; ++n) {
        try {
          CellCensus cc = reduced_symmetric_product_census(n, suspension(c.space, budget),
                                                           budget);
          std::int64_t chi_model = 0;
          for (std::size_t d = 0; d < cc.counts.size(); ++d)
            chi_model += (d % 2 == 0) ? cc.counts[d] : -cc.counts[d];
          expect(euler_barycenter(n, c.chi) == 2 - chi_model,
                 "B_" + std::to_string(n) + "(" + c.name + ")");
        } catch (const BudgetError&) {
          note << " B_" << n << "(" << c.name << ") over budget;";
        }
      }
    }
    r.detail = note.str();
  });
  H.run("A06-connectivity-sharp", [&](CheckResult&) {
    struct Case { int n; const char* name; int k; int r; };
    for (Case c : {Case{2, "S2", 2, 1}, Case{3, "S2", 2, 1}, Case{2, "S3", 3, 2}}) {
      BarycenterModel B = barycenter_suspension_model(c.n, minimal_sphere(c.k), budget);
      int bound = 2 * c.n + c.r - 2;
      HomologyProfile HB = barycenter_homology(B, bound);
      for (int i = 1; i <= bound; ++i)
        expect(HB.groups[i].trivial(),
               std::string(c.name) + ": nonzero below the connectivity bound");
    }
    BarycenterModel B22 = barycenter_suspension_model(2, minimal_sphere(2), budget);
    expect(barycenter_homology(B22, 4).groups[4] == zz(0, {2}),
           "bound not attained at B_2(S^2)");
  });
  H.run("A07-top-class", [&](CheckResult&) {
    BarycenterModel B1 = barycenter_suspension_model(2, minimal_sphere(1), budget);
    BarycenterModel B2 = barycenter_suspension_model(2, minimal_sphere(2), budget);
    BarycenterModel BT = barycenter_suspension_model(2, torus(), budget);
    expect(barycenter_homology(B1, 3).groups[3] == zz(1), "H3(B2 S1)");
    expect(barycenter_homology(B2, 5).groups[5].trivial(), "H5(B2 S2)");
    expect(barycenter_homology(BT, 5).groups[5].trivial(), "H5(B2 torus)");
    expect(barycenter_betti_mod_p(B1, 2, 3).at(3) == 1, "mod-2 top class S1");
    expect(barycenter_betti_mod_p(B2, 2, 5).at(5) == 1, "mod-2 top class S2");
    expect(barycenter_betti_mod_p(BT, 2, 5).at(5) == 1, "mod-2 top class torus");
  });
  H.run("A08-torus-splitting", [&](CheckResult& r) {
    auto t0 = std::chrono::steady_clock::now();
    BarycenterModel B = barycenter_suspension_model(2, torus(), budget);
    for (long long p : {2ll, 3ll})
      expect_series_eq(b2_surface_splitting(1, p, 6).total,
                       barycenter_betti_mod_p(B, p, 6),
                       "splitting mod " + std::to_string(p));
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(dt < 300.0, "over the 5 min bound");
    r.detail = std::to_string(dt).substr(0, 5) + "s";
  });
  H.run("A09-wedge-formula", [&](CheckResult&) {
    SimplicialSet W = wedge(minimal_sphere(1), minimal_sphere(1));
    expect_profile(integral_homology(reduced_symmetric_product(2, W, budget)),
                   {zz(1), zz(0), zz(1)}, "SPbar2(S1 v S1) = S2");
  });
  H.run("A10-simple-connectivity", [&](CheckResult& r) {
    std::ostringstream note;
    for (const CorpusSpace& c : corpus()) {
      if (c.name == "S3") continue;
      for (int n : {2, 3}) {
        try {
          BarycenterModel B = barycenter_suspension_model(n, c.space, budget);
          expect(barycenter_homology(B, 1).groups[1].trivial(),
                 "H1(B_" + std::to_string(n) + "(" + c.name + ")) != 0");
        } catch (const BudgetError&) {
          note << " B_" << n << "(" << c.name << ") over budget;";
        }
      }
    }
    r.detail = note.str();
  });
  H.run("A11-q-inference", [&](CheckResult&) {
    expect_profile(infer_Q_homology(2, 1, 1, budget).profile, {zz(1), zz(1)}, "Q_{2,1}");
    expect_profile(infer_Q_homology(2, 2, 2, budget).profile,
                   {zz(1), zz(0, {2}), zz(0)}, "Q_{2,2}");
    expect_profile(infer_Q_homology(2, 3, 3, budget).profile,
                   {zz(1), zz(0, {2}), zz(0), zz(1)}, "Q_{2,3}");
  });
  H.run("A12-large-prime-vanishing", [&](CheckResult&) {
    BarycenterModel B2 = barycenter_suspension_model(2, minimal_sphere(2), budget);
    PoincareSeries s5 = barycenter_betti_mod_p(B2, 5);
    expect(s5.coeffs[0] == 1, "connected");
    for (int d = 1; d <= s5.dmax(); ++d)
      expect(s5.coeffs[d] == 0, "B_2(S^2) has mod-5 classes in positive degrees");
    BarycenterModel B1 = barycenter_suspension_model(2, minimal_sphere(1), budget);
    expect_series(barycenter_betti_mod_p(B1, 3), {1, 0, 0, 1}, "B_2(S^1) mod 3");
  });
}

}  // namespace

}  // namespace barytop
