#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "barytop/ops.hpp"
#include "barytop/spaces.hpp"

namespace barytop {

GroupAction trivial_action(const SimplicialSet& X) {
  GroupAction act;
  act.perm.resize(1);
  act.perm[0].resize(X.dim() + 1);
  for (int d = 0; d <= X.dim(); ++d) {
    act.perm[0][d].resize(X.cell_count(d));
    std::iota(act.perm[0][d].begin(), act.perm[0][d].end(), 0);
  }
  return act;
}

bool validate_action(const SimplicialSet& X, const GroupAction& act, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (act.order() == 0) return fail("empty group");
  for (int g = 0; g < act.order(); ++g) {
    if (static_cast<int>(act.perm[g].size()) != X.dim() + 1)
      return fail("wrong number of dimensions");
    for (int d = 0; d <= X.dim(); ++d) {
      const auto& pm = act.perm[g][d];
      if (static_cast<std::int64_t>(pm.size()) != X.cell_count(d))
        return fail("permutation size mismatch");
      std::vector<char> seen(pm.size(), 0);
      for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
        if (pm[c] < 0 || pm[c] >= X.cell_count(d) || seen[pm[c]])
          return fail("not a permutation");
        seen[pm[c]] = 1;
        if (g == 0 && pm[c] != c) return fail("element 0 is not the identity");
      }
    }
    for (int d = 1; d <= X.dim(); ++d) {
      for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
        for (int i = 0; i <= d; ++i) {
          const SimplexRef& f = X.face(d, c, i);
          const SimplexRef& fg = X.face(d, act.perm[g][d][c], i);
          int p = d - 1 - word_size(f.letters);
          if (fg.letters != f.letters || fg.cell != act.perm[g][p][f.cell])
            return fail("action does not commute with faces");
        }
      }
    }
  }
  // closure under composition
  for (int g = 0; g < act.order(); ++g) {
    for (int h = 0; h < act.order(); ++h) {
      bool found = false;
      for (int k = 0; k < act.order() && !found; ++k) {
        bool same = true;
        for (int d = 0; d <= X.dim() && same; ++d)
          for (std::int64_t c = 0; c < X.cell_count(d) && same; ++c)
            if (act.perm[k][d][c] != act.perm[g][d][act.perm[h][d][c]]) same = false;
        found = same;
      }
      if (!found) return fail("element set not closed under composition");
    }
  }
  return true;
}

bool verify_simplicial_map(const SimplicialSet& X, const SimplicialMap& f,
                           const SimplicialSet& Y, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(f.image.size()) < X.dim() + 1) return fail("map not defined in all dimensions");
  for (int d = 0; d <= X.dim(); ++d) {
    if (static_cast<std::int64_t>(f.image[d].size()) != X.cell_count(d))
      return fail("map not defined on all cells");
    for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
      const SimplexRef& im = f.image[d][c];
      int q = d - word_size(im.letters);
      if (q < 0 || q > Y.dim() || im.cell < 0 || im.cell >= Y.cell_count(q))
        return fail("image out of range");
    }
  }
  for (int d = 1; d <= X.dim(); ++d) {
    for (std::int64_t c = 0; c < X.cell_count(d); ++c) {
      for (int i = 0; i <= d; ++i) {
        SimplexRef lhs = f.apply(d - 1, X.face(d, c, i));
        SimplexRef rhs = Y.simplex_face(d, f.image[d][c], i);
        if (!(lhs == rhs)) return fail("map does not commute with faces");
      }
    }
  }
  return true;
}

namespace {

std::uint64_t pack_component(const ProductComponent& c) {
  return (static_cast<std::uint64_t>(c.dim) << 58) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.cell)) << 30) |
         c.active;
}

// Masks of fixed popcount over [d], ascending.
std::vector<std::vector<Mask>> masks_by_size(int d) {
  std::vector<std::vector<Mask>> out(d + 1);
  for (Mask m = 0; m < (Mask{1} << d); ++m) out[__builtin_popcount(m)].push_back(m);
  return out;
}

}  // namespace

std::int64_t MultiProduct::find_cell(int dim, const ProductComponent* comps) const {
  const auto& ks = keys[dim];
  std::int64_t lo = 0, hi = static_cast<std::int64_t>(ks.size()) / arity;
  while (lo < hi) {
    std::int64_t mid = (lo + hi) / 2;
    const ProductComponent* k = ks.data() + mid * arity;
    int cmp = 0;
    for (int j = 0; j < arity && cmp == 0; ++j) {
      std::uint64_t a = pack_component(k[j]), b = pack_component(comps[j]);
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
}

SimplexRef MultiProduct::project(int dim, std::int64_t cell, int j) const {
  const ProductComponent& c = key(dim, cell)[j];
  return {full_word(dim) ^ c.active, c.cell};
}

MultiProduct multi_product(const std::vector<const SimplicialSet*>& factors,
                           std::int64_t budget) {
  const int n = static_cast<int>(factors.size());
  if (n < 1) throw std::invalid_argument("multi_product: need at least one factor");
  int D = 0;
  for (const SimplicialSet* f : factors) D += f->dim();
  if (D >= 30) throw std::invalid_argument("multi_product: dimension too large");

  MultiProduct P;
  P.arity = n;
  P.space.counts.assign(D + 1, 0);
  P.space.faces.resize(D + 1);
  P.keys.resize(D + 1);

  std::vector<int> suffix_cap(n + 1, 0);
  for (int j = n - 1; j >= 0; --j) suffix_cap[j] = suffix_cap[j + 1] + factors[j]->dim();

  std::int64_t total = 0;
  for (int d = 0; d <= D; ++d) {
    auto masks = masks_by_size(d);
    const Mask full = full_word(d);
    std::vector<ProductComponent> cur(n);
    auto rec = [&](auto&& self, int j, Mask covered) -> void {
      if (j == n) {
        if (covered != full) return;
        if (++total > budget)
          throw BudgetError("multi_product: cell budget exceeded", P.space.counts);
        P.keys[d].insert(P.keys[d].end(), cur.begin(), cur.end());
        ++P.space.counts[d];
        return;
      }
      Mask needed = full & ~covered;
      if (__builtin_popcount(needed) > suffix_cap[j]) return;
      int pmax = std::min(d, factors[j]->dim());
      for (int p = 0; p <= pmax; ++p) {
        for (std::int32_t cell = 0; cell < factors[j]->cell_count(p); ++cell) {
          for (Mask active : masks[p]) {
            if (__builtin_popcount(needed & ~active) > suffix_cap[j + 1]) continue;
            cur[j] = ProductComponent{cell, static_cast<std::int8_t>(p), active};
            self(self, j + 1, covered | active);
          }
        }
      }
    };
    rec(rec, 0, 0);
  }

  // Faces.
  std::vector<std::pair<Mask, std::int32_t>> parts(n);
  std::vector<ProductComponent> target(n);
  for (int d = 1; d <= D; ++d) {
    P.space.faces[d].reserve(P.space.counts[d] * (d + 1));
    for (std::int64_t c = 0; c < P.space.counts[d]; ++c) {
      const ProductComponent* comps = P.key(d, c);
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; j < n; ++j) {
          Mask letters = full_word(d) ^ comps[j].active;
          WordFace wf = face_through_word(letters, i);
          if (wf.face_index >= 0) {
            const SimplexRef& f = factors[j]->face(comps[j].dim, comps[j].cell, wf.face_index);
            parts[j] = {compose_words(wf.letters, f.letters), f.cell};
          } else {
            parts[j] = {wf.letters, comps[j].cell};
          }
        }
        // Factor out degeneracies shared by every component.
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
          target[j] = ProductComponent{parts[j].second, static_cast<std::int8_t>(pj),
                                       full_word(dd) ^ parts[j].first};
        }
        std::int64_t t = P.find_cell(dd, target.data());
        if (t < 0) throw std::logic_error("multi_product: face target not found");
        P.space.faces[d].push_back(SimplexRef{w, static_cast<std::int32_t>(t)});
      }
    }
  }

  // Basepoint: the tuple of basepoints is the vertex found by search.
  for (int j = 0; j < n; ++j)
    target[j] = ProductComponent{factors[j]->basepoint, 0, 0};
  P.space.basepoint = static_cast<std::int32_t>(P.find_cell(0, target.data()));
  return P;
}

ProductResult product(const SimplicialSet& X, const SimplicialSet& Y, std::int64_t budget) {
  MultiProduct P = multi_product({&X, &Y}, budget);
  ProductResult out;
  out.proj1.image.resize(P.space.dim() + 1);
  out.proj2.image.resize(P.space.dim() + 1);
  for (int d = 0; d <= P.space.dim(); ++d) {
    out.proj1.image[d].resize(P.space.counts[d]);
    out.proj2.image[d].resize(P.space.counts[d]);
    for (std::int64_t c = 0; c < P.space.counts[d]; ++c) {
      out.proj1.image[d][c] = P.project(d, c, 0);
      out.proj2.image[d][c] = P.project(d, c, 1);
    }
  }
  out.space = std::move(P.space);
  return out;
}

SimplicialSet wedge(const SimplicialSet& X, const SimplicialSet& Y) {
  SimplicialSet W;
  int D = std::max(X.dim(), Y.dim());
  W.counts.assign(D + 1, 0);
  W.faces.resize(D + 1);
  for (int d = 0; d <= D; ++d) W.counts[d] = X.cell_count(d) + Y.cell_count(d);
  W.counts[0] -= 1;  // basepoints merge
  auto map_y_vertex = [&](std::int32_t v) -> std::int32_t {
    if (v == Y.basepoint) return X.basepoint;
    return static_cast<std::int32_t>(X.cell_count(0)) + (v < Y.basepoint ? v : v - 1);
  };
  for (int d = 1; d <= D; ++d) {
    if (d <= X.dim()) W.faces[d] = X.faces[d];
    W.faces[d].reserve(W.counts[d] * (d + 1));
    if (d <= Y.dim()) {
      for (std::int64_t c = 0; c < Y.cell_count(d); ++c) {
        for (int i = 0; i <= d; ++i) {
          SimplexRef f = Y.face(d, c, i);
          int p = d - 1 - word_size(f.letters);
          f.cell = (p == 0) ? map_y_vertex(f.cell)
                            : f.cell + static_cast<std::int32_t>(X.cell_count(p));
          W.faces[d].push_back(f);
        }
      }
    }
  }
  W.basepoint = X.basepoint;
  return W;
}

namespace {

std::vector<std::vector<char>> basepoint_tuple_marks(const MultiProduct& P,
                                                     const std::vector<std::int32_t>& bps) {
  std::vector<std::vector<char>> in_A(P.space.dim() + 1);
  for (int d = 0; d <= P.space.dim(); ++d) {
    in_A[d].assign(P.space.counts[d], 0);
    for (std::int64_t c = 0; c < P.space.counts[d]; ++c) {
      const ProductComponent* k = P.key(d, c);
      for (int j = 0; j < P.arity; ++j) {
        if (k[j].dim == 0 && k[j].cell == bps[j]) {
          in_A[d][c] = 1;
          break;
        }
      }
    }
  }
  return in_A;
}

}  // namespace

SimplicialSet smash(const SimplicialSet& X, const SimplicialSet& Y, std::int64_t budget) {
  MultiProduct P = multi_product({&X, &Y}, budget);
  auto in_A = basepoint_tuple_marks(P, {X.basepoint, Y.basepoint});
  return collapse_subcomplex(P.space, in_A).space;
}

SmashPower smash_power(const SimplicialSet& X, int n, std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("smash_power: n must be >= 1");
  std::vector<const SimplicialSet*> factors(n, &X);
  SmashPower S;
  S.power = multi_product(factors, budget);
  auto in_A = basepoint_tuple_marks(S.power, std::vector<std::int32_t>(n, X.basepoint));
  QuotientResult q = collapse_subcomplex(S.power.space, in_A);
  S.space = std::move(q.space);
  S.collapse = std::move(q.projection);
  S.rep.resize(S.space.dim() + 1);
  for (int d = 0; d <= S.space.dim(); ++d) {
    S.rep[d].assign(S.space.counts[d], -1);
    for (std::int64_t c = 0; c < S.power.space.counts[d]; ++c)
      if (!in_A[d][c]) S.rep[d][S.collapse.image[d][c].cell] = c;
  }
  // All n! factor permutations; identity first.
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<ProductComponent> permuted(n);
  do {
    std::vector<std::vector<std::int32_t>> perm(S.space.dim() + 1);
    for (int d = 0; d <= S.space.dim(); ++d) {
      perm[d].resize(S.space.counts[d]);
      for (std::int64_t c = 0; c < S.space.counts[d]; ++c) {
        if (d == 0 && c == 0) {
          perm[d][c] = 0;  // collapse point is fixed
          continue;
        }
        const ProductComponent* k = S.power.key(d, S.rep[d][c]);
        for (int j = 0; j < n; ++j) permuted[sigma[j]] = k[j];
        std::int64_t t = S.power.find_cell(d, permuted.data());
        const SimplexRef& im = S.collapse.image[d][t];
        perm[d][c] = im.cell;
      }
    }
    S.action.perm.push_back(std::move(perm));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return S;
}

SimplicialSet suspension(const SimplicialSet& X, std::int64_t budget) {
  return smash(minimal_sphere(1), X, budget);
}

GroupAction transport_action(const GroupAction& act, const SimplicialMap& projection,
                             const SimplicialSet& from, const SimplicialSet& to) {
  std::vector<std::vector<std::int64_t>> rep(to.dim() + 1);
  for (int d = 0; d <= to.dim(); ++d) {
    rep[d].assign(to.cell_count(d), -1);
    for (std::int64_t c = 0; c < from.cell_count(d); ++c) {
      const SimplexRef& im = projection.image[d][c];
      if (im.letters == 0) rep[d][im.cell] = c;
    }
  }
  GroupAction out;
  out.perm.resize(act.order());
  for (int g = 0; g < act.order(); ++g) {
    out.perm[g].resize(to.dim() + 1);
    for (int d = 0; d <= to.dim(); ++d) {
      out.perm[g][d].resize(to.cell_count(d));
      for (std::int64_t c = 0; c < to.cell_count(d); ++c) {
        std::int64_t r = rep[d][c];
        if (r < 0) throw std::logic_error("transport_action: no representative");
        const SimplexRef& im = projection.image[d][act.perm[g][d][r]];
        if (im.letters != 0) throw std::logic_error("transport_action: class not preserved");
        out.perm[g][d][c] = im.cell;
      }
    }
  }
  return out;
}

}  // namespace barytop
