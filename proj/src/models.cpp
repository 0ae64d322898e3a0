#include "barytop/models.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "barytop/spaces.hpp"

namespace barytop {

GroupAction product_permutation_action(const MultiProduct& P) {
  const int n = P.arity;
  GroupAction act;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<ProductComponent> permuted(n);
  do {
    std::vector<std::vector<std::int32_t>> perm(P.space.dim() + 1);
    for (int d = 0; d <= P.space.dim(); ++d) {
      perm[d].resize(P.space.counts[d]);
      for (std::int64_t c = 0; c < P.space.counts[d]; ++c) {
        const ProductComponent* k = P.key(d, c);
        for (int j = 0; j < n; ++j) permuted[sigma[j]] = k[j];
        std::int64_t t = P.find_cell(d, permuted.data());
        if (t < 0) throw std::logic_error("permutation image not found");
        perm[d][c] = static_cast<std::int32_t>(t);
      }
    }
    act.perm.push_back(std::move(perm));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return act;
}

SimplicialSet symmetric_product(int n, const SimplicialSet& X, std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("symmetric_product: n must be >= 1");
  if (n == 1) return X;
  std::vector<const SimplicialSet*> factors(n, &X);
  MultiProduct P = multi_product(factors, budget);
  GroupAction act = product_permutation_action(P);
  return orbit_quotient(P.space, act);
}

SimplicialSet reduced_symmetric_product_composed(int n, const SimplicialSet& X,
                                                 std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("reduced_symmetric_product: n must be >= 1");
  if (n == 1) return X;
  SmashPower S = smash_power(X, n, budget);
  return orbit_quotient(S.space, S.action);
}

// ---------------------------------------------------------------------------
// Fused enumeration of SP-bar^n(X): cells are sorted tuples of
// (cell, active positions) with no basepoint coordinate, whose active sets
// cover the ambient dimension, plus the collapse point in degree 0.

namespace {

struct RspComp {
  std::int32_t cell;
  std::int8_t dim;
  Mask active;
};

inline std::uint64_t rsp_code(const RspComp& c) {
  return (static_cast<std::uint64_t>(c.dim) << 58) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.cell)) << 30) | c.active;
}

struct RspResult {
  SimplicialSet space;
  std::vector<std::vector<RspComp>> keys;  // stride n, sorted by code tuple
};

RspResult rsp_enumerate(int n, const SimplicialSet& X, std::int64_t budget,
                        bool with_faces) {
  RspResult R;
  const int D = n * X.dim();
  if (D >= 30) throw std::invalid_argument("reduced_symmetric_product: dimension too large");
  R.space.counts.assign(D + 1, 0);
  R.space.faces.resize(D + 1);
  R.keys.resize(D + 1);
  R.space.counts[0] = 1;  // collapse point
  R.space.basepoint = 0;

  std::int64_t total = 1;
  std::vector<RspComp> cands;
  std::vector<int> chosen(n);
  for (int d = 0; d <= D; ++d) {
    // candidate components in code order: (dim, cell, active) ascending
    cands.clear();
    std::vector<std::vector<Mask>> masks(d + 1);
    for (Mask m = 0; m < (Mask{1} << d); ++m) masks[__builtin_popcount(m)].push_back(m);
    for (int p = 0; p <= std::min(d, X.dim()); ++p) {
      for (std::int32_t cell = 0; cell < X.cell_count(p); ++cell) {
        if (p == 0 && cell == X.basepoint) continue;
        for (Mask a : masks[p])
          cands.push_back(RspComp{cell, static_cast<std::int8_t>(p), a});
      }
    }
    const Mask full = full_word(d);
    auto rec = [&](auto&& self, int pos, std::size_t from, Mask covered) -> void {
      if (pos == n) {
        if (covered != full) return;
        if (++total > budget)
          throw BudgetError("reduced_symmetric_product: cell budget exceeded",
                            R.space.counts);
        ++R.space.counts[d];
        if (with_faces)
          for (int j = 0; j < n; ++j) R.keys[d].push_back(cands[chosen[j]]);
        return;
      }
      Mask needed = full & ~covered;
      if (__builtin_popcount(needed) > (n - pos) * X.dim()) return;
      for (std::size_t idx = from; idx < cands.size(); ++idx) {
        if (__builtin_popcount(needed & ~cands[idx].active) > (n - pos - 1) * X.dim())
          continue;
        chosen[pos] = static_cast<int>(idx);
        self(self, pos + 1, idx, covered | cands[idx].active);
      }
    };
    rec(rec, 0, 0, 0);
  }
  if (!with_faces) return R;

  // Faces: componentwise through the degeneracy words, collapse on any
  // basepoint coordinate, then factor out shared degeneracies and re-sort.
  std::vector<std::pair<Mask, std::int32_t>> parts(n);
  std::vector<RspComp> target(n);
  auto find_cell = [&](int dim, const RspComp* comps) -> std::int64_t {
    const auto& ks = R.keys[dim];
    std::int64_t lo = 0, hi = static_cast<std::int64_t>(ks.size()) / n;
    while (lo < hi) {
      std::int64_t mid = (lo + hi) / 2;
      const RspComp* k = ks.data() + mid * n;
      int cmp = 0;
      for (int j = 0; j < n && cmp == 0; ++j) {
        std::uint64_t a = rsp_code(k[j]), b = rsp_code(comps[j]);
        cmp = (a < b) ? -1 : (a > b) ? 1 : 0;
      }
      if (cmp < 0)
        lo = mid + 1;
      else if (cmp > 0)
        hi = mid;
      else
        return mid;
    }
    return -1;
  };
  for (int d = 1; d <= D; ++d) {
    std::int64_t ncells = static_cast<std::int64_t>(R.keys[d].size()) / n;
    R.space.faces[d].reserve(ncells * (d + 1));
    for (std::int64_t c = 0; c < ncells; ++c) {
      const RspComp* comps = R.keys[d].data() + c * n;
      for (int i = 0; i <= d; ++i) {
        bool hits_basepoint = false;
        for (int j = 0; j < n && !hits_basepoint; ++j) {
          Mask letters = full_word(d) ^ comps[j].active;
          WordFace wf = face_through_word(letters, i);
          if (wf.face_index >= 0) {
            const SimplexRef& f = X.face(comps[j].dim, comps[j].cell, wf.face_index);
            int pj = comps[j].dim - 1 - word_size(f.letters);
            if (pj == 0 && f.cell == X.basepoint) {
              hits_basepoint = true;
              break;
            }
            parts[j] = {compose_words(wf.letters, f.letters), f.cell};
          } else {
            parts[j] = {wf.letters, comps[j].cell};
          }
        }
        if (hits_basepoint) {
          R.space.faces[d].push_back(SimplexRef{full_word(d - 1), 0});
          continue;
        }
        Mask w = 0;
        int dd = d - 1;
        while (true) {
          Mask common = full_word(dd);
          for (int j = 0; j < n; ++j) common &= parts[j].first;
          if (common == 0) break;
          int l = __builtin_ctz(common);
          for (int j = 0; j < n; ++j)
            parts[j].first = face_through_word(parts[j].first, l).letters;
          w = push_degeneracy(w, l);
          --dd;
        }
        for (int j = 0; j < n; ++j) {
          int pj = dd - word_size(parts[j].first);
          target[j] = RspComp{parts[j].second, static_cast<std::int8_t>(pj),
                              full_word(dd) ^ parts[j].first};
        }
        std::sort(target.begin(), target.end(), [](const RspComp& a, const RspComp& b) {
          return rsp_code(a) < rsp_code(b);
        });
        std::int64_t t = find_cell(dd, target.data());
        if (t < 0) throw std::logic_error("reduced_symmetric_product: face target not found");
        // degree-0 tuples sit after the collapse point
        std::int32_t id = static_cast<std::int32_t>(t) + (dd == 0 ? 1 : 0);
        R.space.faces[d].push_back(SimplexRef{w, id});
      }
    }
  }
  return R;
}

}  // namespace

SimplicialSet reduced_symmetric_product(int n, const SimplicialSet& X, std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("reduced_symmetric_product: n must be >= 1");
  if (n == 1) return X;
  return rsp_enumerate(n, X, budget, true).space;
}

CellCensus reduced_symmetric_product_census(int n, const SimplicialSet& X,
                                            std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("reduced_symmetric_product: n must be >= 1");
  if (n == 1) return census(X);
  return census(rsp_enumerate(n, X, budget, false).space);
}

// ---------------------------------------------------------------------------
// Barycenter models.

namespace {

GroupAction diagonal_product_action(const MultiProduct& P,
                                    const std::vector<const GroupAction*>& acts) {
  for (const GroupAction* a : acts)
    if (a->order() != acts[0]->order())
      throw std::invalid_argument("diagonal action: mismatched group orders");
  GroupAction out;
  std::vector<ProductComponent> mapped(P.arity);
  for (int g = 0; g < acts[0]->order(); ++g) {
    std::vector<std::vector<std::int32_t>> perm(P.space.dim() + 1);
    for (int d = 0; d <= P.space.dim(); ++d) {
      perm[d].resize(P.space.counts[d]);
      for (std::int64_t c = 0; c < P.space.counts[d]; ++c) {
        const ProductComponent* k = P.key(d, c);
        for (int j = 0; j < P.arity; ++j)
          mapped[j] = ProductComponent{acts[j]->perm[g][k[j].dim][k[j].cell], k[j].dim,
                                       k[j].active};
        std::int64_t t = P.find_cell(d, mapped.data());
        if (t < 0) throw std::logic_error("diagonal action image not found");
        perm[d][c] = static_cast<std::int32_t>(t);
      }
    }
    out.perm.push_back(std::move(perm));
  }
  return out;
}

}  // namespace

BarycenterModel barycenter_suspension_model(int n, const SimplicialSet& X,
                                            std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("barycenter model: n must be >= 1");
  BarycenterModel B;
  B.kind = BarycenterModel::Kind::suspension;
  B.n = n;
  B.degree_shift = 1;
  B.space = reduced_symmetric_product(n, suspension(X, budget), budget);
  B.source = "suspension";
  return B;
}

BarycenterModel barycenter_direct_model(int n, const SimplicialSet& X,
                                        std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("barycenter model: n must be >= 1");
  BarycenterModel B;
  B.kind = BarycenterModel::Kind::direct;
  B.n = n;
  B.degree_shift = 0;
  B.source = "direct";
  if (n == 1) {
    B.space = X;
    return B;
  }
  // The permutation sphere: subdivided simplex with boundary collapsed.
  // Boundary cells are the chains of proper subsets: exactly those whose top
  // vertex is not the barycenter.
  SdSimplex sd = sd_simplex_with_action(n - 1);
  std::vector<std::vector<char>> boundary(sd.space.dim() + 1);
  for (int m = 0; m <= sd.space.dim(); ++m) {
    boundary[m].assign(sd.space.counts[m], 0);
    for (std::int64_t c = 0; c < sd.space.counts[m]; ++c) {
      std::int32_t cur = static_cast<std::int32_t>(c);
      for (int d = m; d >= 1; --d) cur = sd.space.face(d, cur, 0).cell;
      if (cur != sd.space.basepoint) boundary[m][c] = 1;
    }
  }
  QuotientResult Sq = collapse_subcomplex(sd.space, boundary);
  GroupAction actS = transport_action(sd.action, Sq.projection, sd.space, Sq.space);

  SmashPower P = smash_power(X, n, budget);
  MultiProduct Prod = multi_product({&Sq.space, &P.space}, budget);
  GroupAction actProd = diagonal_product_action(Prod, {&actS, &P.action});

  std::vector<std::vector<char>> in_wedge(Prod.space.dim() + 1);
  for (int d = 0; d <= Prod.space.dim(); ++d) {
    in_wedge[d].assign(Prod.space.counts[d], 0);
    for (std::int64_t c = 0; c < Prod.space.counts[d]; ++c) {
      const ProductComponent* k = Prod.key(d, c);
      if ((k[0].dim == 0 && k[0].cell == Sq.space.basepoint) ||
          (k[1].dim == 0 && k[1].cell == P.space.basepoint))
        in_wedge[d][c] = 1;
    }
  }
  QuotientResult M = collapse_subcomplex(Prod.space, in_wedge);
  GroupAction actM = transport_action(actProd, M.projection, Prod.space, M.space);
  B.space = orbit_quotient(M.space, actM);
  return B;
}

HomologyProfile barycenter_homology(const BarycenterModel& B, int max_degree) {
  int model_top = B.space.dim() - B.degree_shift;
  int want = (max_degree < 0) ? model_top : max_degree;
  HomologyProfile MH = integral_homology(B.space, std::min(want + B.degree_shift,
                                                           B.space.dim()));
  HomologyProfile out;
  out.truncated = want > model_top;
  out.groups.resize(want + 1);
  out.groups[0] = HomologyGroup{1, {}};
  for (int d = 1; d <= want; ++d) {
    int m = d + B.degree_shift;
    if (m <= MH.top_degree()) out.groups[d] = MH.groups[m];
  }
  return out;
}

PoincareSeries barycenter_betti_mod_p(const BarycenterModel& B, long long p,
                                      int max_degree) {
  int model_top = B.space.dim() - B.degree_shift;
  int want = (max_degree < 0) ? model_top : max_degree;
  PoincareSeries MS = betti_mod_p(B.space, p, std::min(want + B.degree_shift,
                                                       B.space.dim()));
  PoincareSeries out = PoincareSeries::zero(p, want);
  out.coeffs[0] = 1;
  for (int d = 1; d <= want; ++d) out.coeffs[d] = MS.at(d + B.degree_shift);
  return out;
}

std::int64_t barycenter_euler(const BarycenterModel& B) {
  std::int64_t chi_model = euler_from_census(B.space);
  return (B.degree_shift == 1) ? 2 - chi_model : chi_model;
}

SimplicialSet symjoin2_cylinder_model(const SimplicialSet& X, std::int64_t budget) {
  MultiProduct P2 = multi_product({&X, &X}, budget);
  GroupAction swap = product_permutation_action(P2);
  QuotientResult SP = orbit_quotient_with_map(P2.space, swap);
  SimplicialSet interval = standard_simplex(1);
  MultiProduct Cyl = multi_product({&P2.space, &interval}, budget);

  auto end_marks = [&](std::int32_t vertex) {
    std::vector<std::vector<char>> marks(Cyl.space.dim() + 1);
    for (int d = 0; d <= Cyl.space.dim(); ++d) {
      marks[d].assign(Cyl.space.counts[d], 0);
      for (std::int64_t c = 0; c < Cyl.space.counts[d]; ++c) {
        const ProductComponent* k = Cyl.key(d, c);
        if (k[1].dim == 0 && k[1].cell == vertex) marks[d][c] = 1;
      }
    }
    return marks;
  };

  // Glue the bottom end to X along the projection to the second coordinate.
  auto bottom = end_marks(0);
  SimplicialMap f_bottom;
  f_bottom.image.resize(Cyl.space.dim() + 1);
  for (int d = 0; d <= Cyl.space.dim(); ++d) {
    f_bottom.image[d].assign(Cyl.space.counts[d], SimplexRef{0, -1});
    for (std::int64_t c = 0; c < Cyl.space.counts[d]; ++c) {
      if (!bottom[d][c]) continue;
      const ProductComponent* k = Cyl.key(d, c);
      f_bottom.image[d][c] = P2.project(d, k[0].cell, 1);
    }
  }
  GlueResult M1 = glue(Cyl.space, bottom, f_bottom, X);

  // Glue the top end to SP^2(X) along the orbit projection.
  auto top = end_marks(1);
  std::vector<std::vector<char>> top_in_M1(M1.space.dim() + 1);
  SimplicialMap f_top;
  f_top.image.resize(M1.space.dim() + 1);
  for (int d = 0; d <= M1.space.dim(); ++d) {
    top_in_M1[d].assign(M1.space.counts[d], 0);
    f_top.image[d].assign(M1.space.counts[d], SimplexRef{0, -1});
  }
  for (int d = 0; d <= Cyl.space.dim(); ++d) {
    for (std::int64_t c = 0; c < Cyl.space.counts[d]; ++c) {
      if (!top[d][c]) continue;
      const SimplexRef& im = M1.from_W.image[d][c];
      top_in_M1[d][im.cell] = 1;
      f_top.image[d][im.cell] = SP.projection.image[d][Cyl.key(d, c)[0].cell];
    }
  }
  GlueResult M2 = glue(M1.space, top_in_M1, f_top, SP.space);

  std::int32_t bp_m1 = M1.from_Y.image[0][X.basepoint].cell;
  M2.space.basepoint = M2.from_W.image[0][bp_m1].cell;
  return M2.space;
}

QProfile infer_Q_homology(int n, int k, int range, std::int64_t budget) {
  if (n < 2) throw std::invalid_argument("infer_Q_homology: n must be >= 2");
  if (k < 1) throw std::invalid_argument("infer_Q_homology: k must be >= 1");
  int qdim = (k + 1) * (n - 1) - 1;
  BarycenterModel B = barycenter_suspension_model(n, minimal_sphere(k), budget);
  HomologyProfile BH = barycenter_homology(B, std::min(range, qdim) + k + 1);
  QProfile out;
  out.n = n;
  out.k = k;
  out.profile.truncated = range > qdim;
  out.profile.groups.resize(range + 1);
  out.profile.groups[0] = HomologyGroup{1, {}};
  for (int i = 1; i <= std::min(range, qdim); ++i)
    out.profile.groups[i] = BH.groups[i + k + 1];
  return out;
}

}  // namespace barytop
