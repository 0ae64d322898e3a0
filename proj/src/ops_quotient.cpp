#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "barytop/ops.hpp"

namespace barytop {

namespace {

void check_subcomplex(const SimplicialSet& X, const std::vector<std::vector<char>>& in_A) {
  if (static_cast<int>(in_A.size()) != X.dim() + 1)
    throw std::invalid_argument("subcomplex marks: wrong number of dimensions");
  for (int d = 0; d <= X.dim(); ++d)
    if (static_cast<std::int64_t>(in_A[d].size()) != X.cell_count(d))
      throw std::invalid_argument("subcomplex marks: wrong size");
  for (int d = 1; d <= X.dim(); ++d) {
    for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
      if (!in_A[d][c]) continue;
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& f = X.face(d, c, i);
        int p = d - 1 - word_size(f.letters);
        if (!in_A[p][f.cell])
          throw std::invalid_argument("marked cells are not closed under faces");
      }
    }
  }
}

void trim_trailing_empty(SimplicialSet& X) {
  while (X.dim() > 0 && X.counts.back() == 0) {
    X.counts.pop_back();
    X.faces.pop_back();
  }
}

}  // namespace

QuotientResult collapse_subcomplex(const SimplicialSet& X,
                                   const std::vector<std::vector<char>>& in_A) {
  check_subcomplex(X, in_A);
  bool any = false;
  for (const auto& dim_marks : in_A)
    for (char m : dim_marks) any = any || m;
  if (!any) throw std::invalid_argument("collapse_subcomplex: empty subcomplex");

  QuotientResult out;
  SimplicialSet& Q = out.space;
  Q.counts.assign(X.dim() + 1, 0);
  Q.faces.resize(X.dim() + 1);
  out.projection.image.resize(X.dim() + 1);

  std::vector<std::vector<std::int32_t>> newid(X.dim() + 1);
  Q.counts[0] = 1;  // the collapse point
  for (int d = 0; d <= X.dim(); ++d) {
    newid[d].assign(X.cell_count(d), -1);
    for (std::int64_t c = 0; c < X.cell_count(d); ++c)
      if (!in_A[d][c]) newid[d][c] = static_cast<std::int32_t>(Q.counts[d]++);
  }
  for (int d = 1; d <= X.dim(); ++d) {
    Q.faces[d].reserve(Q.counts[d] * (d + 1));
    for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
      if (in_A[d][c]) continue;
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& f = X.face(d, c, i);
        int p = d - 1 - word_size(f.letters);
        if (in_A[p][f.cell])
          Q.faces[d].push_back(SimplexRef{full_word(d - 1), 0});
        else
          Q.faces[d].push_back(SimplexRef{f.letters, newid[p][f.cell]});
      }
    }
  }
  for (int d = 0; d <= X.dim(); ++d) {
    out.projection.image[d].resize(X.cell_count(d));
    for (std::int64_t c = 0; c < X.cell_count(d); ++c)
      out.projection.image[d][c] =
          in_A[d][c] ? SimplexRef{full_word(d), 0} : SimplexRef{0, newid[d][c]};
  }
  Q.basepoint = 0;
  trim_trailing_empty(Q);
  return out;
}

QuotientResult orbit_quotient_with_map(const SimplicialSet& X, const GroupAction& act) {
  std::string why;
  if (!validate_action(X, act, &why))
    throw std::invalid_argument("orbit_quotient: inconsistent action: " + why);

  QuotientResult out;
  SimplicialSet& Q = out.space;
  Q.counts.assign(X.dim() + 1, 0);
  Q.faces.resize(X.dim() + 1);
  out.projection.image.resize(X.dim() + 1);

  std::vector<std::vector<std::int32_t>> parent(X.dim() + 1), newid(X.dim() + 1);
  for (int d = 0; d <= X.dim(); ++d) {
    parent[d].resize(X.cell_count(d));
    std::iota(parent[d].begin(), parent[d].end(), 0);
  }
  auto find = [&](int d, std::int32_t a) {
    while (parent[d][a] != a) a = parent[d][a] = parent[d][parent[d][a]];
    return a;
  };
  for (int g = 1; g < act.order(); ++g) {
    for (int d = 0; d <= X.dim(); ++d) {
      for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
        std::int32_t a = find(d, static_cast<std::int32_t>(c));
        std::int32_t b = find(d, act.perm[g][d][c]);
        if (a != b) parent[d][std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<std::int32_t>> reps(X.dim() + 1);
  for (int d = 0; d <= X.dim(); ++d) {
    newid[d].assign(X.cell_count(d), -1);
    for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
      if (find(d, static_cast<std::int32_t>(c)) == c) {
        newid[d][c] = static_cast<std::int32_t>(Q.counts[d]++);
        reps[d].push_back(static_cast<std::int32_t>(c));
      }
    }
  }
  for (int d = 1; d <= X.dim(); ++d) {
    Q.faces[d].reserve(Q.counts[d] * (d + 1));
    for (std::int32_t c : reps[d]) {
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& f = X.face(d, c, i);
        int p = d - 1 - word_size(f.letters);
        Q.faces[d].push_back(SimplexRef{f.letters, newid[p][find(p, f.cell)]});
      }
    }
  }
  for (int d = 0; d <= X.dim(); ++d) {
    out.projection.image[d].resize(X.cell_count(d));
    for (std::int64_t c = 0; c < X.cell_count(d); ++c)
      out.projection.image[d][c] =
          SimplexRef{0, newid[d][find(d, static_cast<std::int32_t>(c))]};
  }
  Q.basepoint = newid[0][find(0, X.basepoint)];
  return out;
}

SimplicialSet orbit_quotient(const SimplicialSet& X, const GroupAction& act) {
  return orbit_quotient_with_map(X, act).space;
}

GlueResult glue(const SimplicialSet& W, const std::vector<std::vector<char>>& in_A,
                const SimplicialMap& f, const SimplicialSet& Y) {
  check_subcomplex(W, in_A);
  // f must be simplicial on the subcomplex
  for (int d = 1; d <= W.dim(); ++d) {
    for (std::int64_t c = 0; c < W.cell_count(d); ++c) {
      if (!in_A[d][c]) continue;
      for (int i = 0; i <= d; ++i) {
        SimplexRef lhs = f.apply(d - 1, W.face(d, c, i));
        SimplexRef rhs = Y.simplex_face(d, f.image[d][c], i);
        if (!(lhs == rhs))
          throw std::invalid_argument("glue: attaching map is not simplicial");
      }
    }
  }
  GlueResult out;
  SimplicialSet& Q = out.space;
  int D = std::max(W.dim(), Y.dim());
  Q.counts.assign(D + 1, 0);
  Q.faces.resize(D + 1);
  std::vector<std::vector<std::int32_t>> newid(W.dim() + 1);
  for (int d = 0; d <= D; ++d) {
    Q.counts[d] = Y.cell_count(d);
    if (d <= W.dim()) {
      newid[d].assign(W.cell_count(d), -1);
      for (std::int64_t c = 0; c < W.cell_count(d); ++c)
        if (!in_A[d][c]) newid[d][c] = static_cast<std::int32_t>(Q.counts[d]++);
    }
  }
  for (int d = 1; d <= D; ++d) {
    Q.faces[d].reserve(Q.counts[d] * (d + 1));
    if (d <= Y.dim()) Q.faces[d] = Y.faces[d];
    Q.faces[d].reserve(Q.counts[d] * (d + 1));
    if (d > W.dim()) continue;
    for (std::int64_t c = 0; c < W.cell_count(d); ++c) {
      if (in_A[d][c]) continue;
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& fc = W.face(d, c, i);
        int p = d - 1 - word_size(fc.letters);
        if (in_A[p][fc.cell]) {
          const SimplexRef& im = f.image[p][fc.cell];
          Q.faces[d].push_back(SimplexRef{compose_words(fc.letters, im.letters), im.cell});
        } else {
          Q.faces[d].push_back(SimplexRef{fc.letters, newid[p][fc.cell]});
        }
      }
    }
  }
  out.from_W.image.resize(W.dim() + 1);
  for (int d = 0; d <= W.dim(); ++d) {
    out.from_W.image[d].resize(W.cell_count(d));
    for (std::int64_t c = 0; c < W.cell_count(d); ++c)
      out.from_W.image[d][c] =
          in_A[d][c] ? f.image[d][c] : SimplexRef{0, newid[d][c]};
  }
  out.from_Y.image.resize(Y.dim() + 1);
  for (int d = 0; d <= Y.dim(); ++d) {
    out.from_Y.image[d].resize(Y.cell_count(d));
    for (std::int64_t c = 0; c < Y.cell_count(d); ++c)
      out.from_Y.image[d][c] = SimplexRef{0, static_cast<std::int32_t>(c)};
  }
  Q.basepoint = Y.basepoint;
  trim_trailing_empty(Q);
  return out;
}

SimplicialSet disjoint_union(const std::vector<const SimplicialSet*>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
  SimplicialSet U;
  int D = 0;
  for (const SimplicialSet* p : parts) D = std::max(D, p->dim());
  U.counts.assign(D + 1, 0);
  U.faces.resize(D + 1);
  std::vector<std::vector<std::int64_t>> offset(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    offset[k].assign(D + 1, 0);
    for (int d = 0; d <= D; ++d) {
      offset[k][d] = U.counts[d];
      U.counts[d] += parts[k]->cell_count(d);
    }
  }
  for (int d = 1; d <= D; ++d) {
    U.faces[d].reserve(U.counts[d] * (d + 1));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const SimplicialSet* p = parts[k];
      for (std::int64_t c = 0; c < p->cell_count(d); ++c) {
        for (int i = 0; i <= d; ++i) {
          SimplexRef f = p->face(d, c, i);
          int q = d - 1 - word_size(f.letters);
          f.cell += static_cast<std::int32_t>(offset[k][q]);
          U.faces[d].push_back(f);
        }
      }
    }
  }
  U.basepoint = parts[0]->basepoint;
  return U;
}

// ---------------------------------------------------------------------------
// Quotient by a generated congruence.  All simplices (degenerate ones
// included) are enumerated per dimension; seed equations are closed under
// faces by a worklist, and the quotient presentation is then read off level
// by level.

namespace {

struct SimplexDirectory {
  const SimplicialSet& X;
  int D;
  // id(m, letters, cell) = off[m][p] + cell * |masks(m, m-p)| + rank(letters)
  std::vector<std::vector<std::int64_t>> off;
  std::vector<std::vector<std::int32_t>> mask_rank;        // [m][mask]
  std::vector<std::vector<std::vector<Mask>>> mask_list;   // [m][k]
  std::vector<std::int64_t> total;

  explicit SimplexDirectory(const SimplicialSet& x) : X(x), D(x.dim()) {
    if (D > 20)
      throw std::invalid_argument("congruence quotient: dimension too large");
    off.resize(D + 1);
    mask_rank.resize(D + 1);
    mask_list.resize(D + 1);
    total.assign(D + 1, 0);
    for (int m = 0; m <= D; ++m) {
      mask_list[m].resize(m + 1);
      mask_rank[m].assign(std::size_t{1} << m, -1);
      for (Mask msk = 0; msk < (Mask{1} << m); ++msk) {
        int k = __builtin_popcount(msk);
        mask_rank[m][msk] = static_cast<std::int32_t>(mask_list[m][k].size());
        mask_list[m][k].push_back(msk);
      }
      off[m].assign(m + 1, 0);
      std::int64_t acc = 0;
      for (int p = 0; p <= m; ++p) {
        off[m][p] = acc;
        acc += X.cell_count(p) * static_cast<std::int64_t>(mask_list[m][m - p].size());
      }
      total[m] = acc;
    }
  }

  std::int64_t id(int m, const SimplexRef& s) const {
    int p = m - word_size(s.letters);
    return off[m][p] +
           static_cast<std::int64_t>(s.cell) * static_cast<std::int64_t>(mask_list[m][m - p].size()) +
           mask_rank[m][s.letters];
  }
  SimplexRef unid(int m, std::int64_t id) const {
    int p = m;
    while (p > 0 && id < off[m][p]) --p;
    std::int64_t rel = id - off[m][p];
    std::int64_t block = static_cast<std::int64_t>(mask_list[m][m - p].size());
    return SimplexRef{mask_list[m][m - p][rel % block],
                      static_cast<std::int32_t>(rel / block)};
  }
};

}  // namespace

QuotientResult quotient_by_congruence(const SimplicialSet& X,
                                      const std::vector<SimplexEquation>& seeds,
                                      std::int64_t budget) {
  SimplexDirectory dir(X);
  std::int64_t grand = 0;
  for (int m = 0; m <= dir.D; ++m) grand += dir.total[m];
  if (grand > budget)
    throw BudgetError("quotient_by_congruence: simplex directory exceeds budget", X.counts);

  std::vector<std::vector<std::int64_t>> parent(dir.D + 1);
  for (int m = 0; m <= dir.D; ++m) {
    parent[m].resize(dir.total[m]);
    std::iota(parent[m].begin(), parent[m].end(), 0);
  }
  auto find = [&](int m, std::int64_t a) {
    while (parent[m][a] != a) a = parent[m][a] = parent[m][parent[m][a]];
    return a;
  };

  std::deque<std::pair<int, std::pair<std::int64_t, std::int64_t>>> work;
  for (const SimplexEquation& eq : seeds) {
    if (eq.dim < 0 || eq.dim > dir.D) throw std::invalid_argument("seed dimension out of range");
    work.push_back({eq.dim, {dir.id(eq.dim, eq.lhs), dir.id(eq.dim, eq.rhs)}});
  }
  while (!work.empty()) {
    auto [m, pr] = work.front();
    work.pop_front();
    std::int64_t a = find(m, pr.first), b = find(m, pr.second);
    if (a == b) continue;
    parent[m][std::max(a, b)] = std::min(a, b);
    if (m == 0) continue;
    SimplexRef sa = dir.unid(m, pr.first), sb = dir.unid(m, pr.second);
    for (int i = 0; i <= m; ++i) {
      SimplexRef fa = X.simplex_face(m, sa, i), fb = X.simplex_face(m, sb, i);
      std::int64_t ia = dir.id(m - 1, fa), ib = dir.id(m - 1, fb);
      if (find(m - 1, ia) != find(m - 1, ib)) work.push_back({m - 1, {ia, ib}});
    }
  }

  QuotientResult out;
  SimplicialSet& Q = out.space;
  Q.counts.assign(dir.D + 1, 0);
  Q.faces.resize(dir.D + 1);
  // resolved[m][root id] = simplex of the quotient
  std::vector<std::vector<SimplexRef>> resolved(dir.D + 1);
  std::vector<std::vector<std::int32_t>> rep_cells(dir.D + 1);

  auto resolve_simplex = [&](int m, const SimplexRef& s) -> SimplexRef {
    int p = m - word_size(s.letters);
    const SimplexRef& r = resolved[p][find(p, dir.id(p, SimplexRef{0, s.cell}))];
    return {compose_words(s.letters, r.letters), r.cell};
  };

  for (int m = 0; m <= dir.D; ++m) {
    resolved[m].assign(dir.total[m], SimplexRef{0, -1});
    // collect class members in ascending id order
    std::vector<std::vector<std::int64_t>> members;
    std::vector<std::int64_t> class_of(dir.total[m], -1);
    for (std::int64_t idx = 0; idx < dir.total[m]; ++idx) {
      std::int64_t r = find(m, idx);
      if (class_of[r] < 0) {
        class_of[r] = static_cast<std::int64_t>(members.size());
        members.emplace_back();
      }
      members[class_of[r]].push_back(idx);
    }
    for (const auto& cls : members) {
      std::int64_t root = find(m, cls.front());
      bool has_degenerate = false;
      SimplexRef degen_res{0, -1};
      std::int32_t nondeg_cell = -1;
      for (std::int64_t idx : cls) {
        SimplexRef s = dir.unid(m, idx);
        if (s.letters == 0) {
          if (nondeg_cell < 0) nondeg_cell = s.cell;
        } else {
          SimplexRef r = resolve_simplex(m, s);
          if (!has_degenerate) {
            has_degenerate = true;
            degen_res = r;
          } else if (!(r == degen_res)) {
            throw std::logic_error("quotient_by_congruence: inconsistent resolution");
          }
        }
      }
      if (has_degenerate) {
        resolved[m][root] = degen_res;
      } else {
        std::int32_t q = static_cast<std::int32_t>(Q.counts[m]++);
        resolved[m][root] = SimplexRef{0, q};
        rep_cells[m].push_back(nondeg_cell);
      }
    }
    if (m >= 1) {
      Q.faces[m].reserve(Q.counts[m] * (m + 1));
      for (std::int32_t c : rep_cells[m]) {
        for (int i = 0; i <= m; ++i)
          Q.faces[m].push_back(resolve_simplex(m - 1, X.face(m, c, i)));
      }
    }
  }
  out.projection.image.resize(dir.D + 1);
  for (int m = 0; m <= dir.D; ++m) {
    out.projection.image[m].resize(X.cell_count(m));
    for (std::int64_t c = 0; c < X.cell_count(m); ++c)
      out.projection.image[m][c] =
          resolved[m][find(m, dir.id(m, SimplexRef{0, static_cast<std::int32_t>(c)}))];
  }
  Q.basepoint = out.projection.image[0][X.basepoint].cell;
  trim_trailing_empty(Q);
  return out;
}

QuotientResult quotient_identify(const SimplicialSet& X, const std::vector<CellPair>& pairs,
                                 std::int64_t budget) {
  std::vector<SimplexEquation> seeds;
  seeds.reserve(pairs.size());
  for (const CellPair& pr : pairs) {
    if (pr.dim < 0 || pr.dim > X.dim())
      throw std::invalid_argument("quotient: cell dimension out of range");
    if (pr.a < 0 || pr.a >= X.cell_count(pr.dim) || pr.b < 0 || pr.b >= X.cell_count(pr.dim))
      throw std::invalid_argument("quotient: cell id out of range");
    seeds.push_back(SimplexEquation{pr.dim,
                                    SimplexRef{0, static_cast<std::int32_t>(pr.a)},
                                    SimplexRef{0, static_cast<std::int32_t>(pr.b)}});
  }
  return quotient_by_congruence(X, seeds, budget);
}

}  // namespace barytop
