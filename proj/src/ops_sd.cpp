#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "barytop/ops.hpp"

namespace barytop {

namespace {

// Nerve of the poset of nonempty subsets of {0..p}: vertices are subsets,
// m-cells are strictly increasing chains of length m+1, all faces delete an
// entry.  This is the barycentric subdivision of the standard p-simplex.
struct Nerve {
  SimplicialSet space;
  std::vector<std::vector<std::vector<Mask>>> chains;      // [dim][cell]
  std::vector<std::map<std::vector<Mask>, std::int32_t>> index;

  explicit Nerve(int p) {
    int D = p;
    space.counts.assign(D + 1, 0);
    space.faces.resize(D + 1);
    chains.resize(D + 1);
    index.resize(D + 1);
    Mask top = full_word(p + 1);
    // chains enumerated lexicographically by their subset sequence
    std::vector<Mask> cur;
    auto rec = [&](auto&& self, Mask last) -> void {
      if (!cur.empty()) {
        int m = static_cast<int>(cur.size()) - 1;
        if (m <= D) {
          index[m][cur] = static_cast<std::int32_t>(chains[m].size());
          chains[m].push_back(cur);
        }
      }
      for (Mask s = last + 1; s <= top; ++s) {
        if (!cur.empty() && ((cur.back() & s) != cur.back() || s == cur.back())) continue;
        if (cur.empty() && s == 0) continue;
        cur.push_back(s);
        self(self, s);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (int m = 0; m <= D; ++m) space.counts[m] = static_cast<std::int64_t>(chains[m].size());
    for (int m = 1; m <= D; ++m) {
      space.faces[m].reserve(space.counts[m] * (m + 1));
      for (const auto& ch : chains[m]) {
        for (int i = 0; i <= m; ++i) {
          std::vector<Mask> f = ch;
          f.erase(f.begin() + i);
          space.faces[m].push_back(SimplexRef{0, index[m - 1].at(f)});
        }
      }
    }
    space.basepoint = index[0].at({top});  // barycenter vertex
  }

  // Image of a chain cell under the subdivided monotone map alpha, given by
  // its value table.  Repeated consecutive images become degeneracy letters.
  SimplexRef map_chain(const std::vector<int>& alpha, int m, std::int32_t cell,
                       const Nerve& target) const {
    const std::vector<Mask>& ch = chains[m][cell];
    std::vector<Mask> images;
    Mask letters = 0;
    for (std::size_t j = 0; j < ch.size(); ++j) {
      Mask im = 0;
      Mask s = ch[j];
      while (s != 0) {
        int e = __builtin_ctz(s);
        s &= s - 1;
        im |= Mask{1} << alpha[e];
      }
      // repeats sit at the original chain positions
      if (!images.empty() && images.back() == im)
        letters |= Mask{1} << (static_cast<int>(j) - 1);
      else
        images.push_back(im);
    }
    int mm = static_cast<int>(images.size()) - 1;
    return SimplexRef{letters, target.index[mm].at(images)};
  }
};

std::vector<int> coface_table(int i, int p) {
  // delta_i: {0..p-1} -> {0..p} skipping i
  std::vector<int> t(p);
  for (int e = 0; e < p; ++e) t[e] = (e < i) ? e : e + 1;
  return t;
}

std::vector<int> surjection_table(Mask letters, int from_dim) {
  // sigma_w: {0..from_dim} ->> {0..from_dim - |w|}
  std::vector<int> t(from_dim + 1);
  for (int e = 0; e <= from_dim; ++e)
    t[e] = e - __builtin_popcount(letters & full_word(e));
  return t;
}

}  // namespace

SdSimplex sd_simplex_with_action(int k) {
  if (k < 0) throw std::invalid_argument("sd_simplex_with_action: k must be >= 0");
  Nerve N(k);
  SdSimplex out;
  out.space = N.space;
  std::vector<int> sigma(k + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<std::vector<std::int32_t>> perm(k + 1);
    for (int m = 0; m <= k; ++m) {
      perm[m].resize(N.space.counts[m]);
      for (std::int64_t c = 0; c < N.space.counts[m]; ++c) {
        std::vector<Mask> image;
        image.reserve(N.chains[m][c].size());
        for (Mask s : N.chains[m][c]) {
          Mask im = 0;
          while (s != 0) {
            int e = __builtin_ctz(s);
            s &= s - 1;
            im |= Mask{1} << sigma[e];
          }
          image.push_back(im);
        }
        perm[m][c] = N.index[m].at(image);
      }
    }
    out.action.perm.push_back(std::move(perm));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

SimplicialSet barycentric_subdivision(const SimplicialSet& X, std::int64_t budget) {
  // One nerve copy per nondegenerate cell, glued along subdivided face maps.
  std::vector<Nerve> nerves;
  for (int p = 0; p <= X.dim(); ++p) nerves.emplace_back(p);

  std::vector<const SimplicialSet*> parts;
  // component of cell (p, c) starts at comp_off[p][c] copies of nerves[p]
  std::vector<std::vector<std::size_t>> comp_index(X.dim() + 1);
  for (int p = 0; p <= X.dim(); ++p) {
    comp_index[p].resize(X.cell_count(p));
    for (std::int64_t c = 0; c < X.cell_count(p); ++c) {
      comp_index[p][c] = parts.size();
      parts.push_back(&nerves[p].space);
    }
  }
  SimplicialSet U = disjoint_union(parts);
  // offsets of each part per dimension, recomputed as in disjoint_union
  std::vector<std::vector<std::int64_t>> offset(parts.size());
  {
    std::vector<std::int64_t> acc(U.dim() + 1, 0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      offset[k].assign(U.dim() + 1, 0);
      for (int d = 0; d <= U.dim(); ++d) {
        if (d <= parts[k]->dim()) {
          offset[k][d] = acc[d];
          acc[d] += parts[k]->cell_count(d);
        }
      }
    }
  }

  std::vector<SimplexEquation> seeds;
  for (int p = 1; p <= X.dim(); ++p) {
    for (std::int64_t x = 0; x < X.cell_count(p); ++x) {
      std::size_t comp_x = comp_index[p][x];
      for (int i = 0; i <= p; ++i) {
        const SimplexRef& f = X.face(p, x, i);
        int q = p - 1 - word_size(f.letters);
        std::size_t comp_t = comp_index[q][f.cell];
        std::vector<int> delta = coface_table(i, p);
        std::vector<int> beta = surjection_table(f.letters, p - 1);
        for (int m = 0; m <= p - 1; ++m) {
          for (std::int64_t ch = 0; ch < nerves[p - 1].space.counts[m]; ++ch) {
            SimplexRef lhs = nerves[p - 1].map_chain(delta, m, static_cast<std::int32_t>(ch),
                                                     nerves[p]);
            lhs.cell += static_cast<std::int32_t>(offset[comp_x][m - word_size(lhs.letters)]);
            SimplexRef rhs = nerves[p - 1].map_chain(beta, m, static_cast<std::int32_t>(ch),
                                                     nerves[q]);
            rhs.cell += static_cast<std::int32_t>(offset[comp_t][m - word_size(rhs.letters)]);
            seeds.push_back(SimplexEquation{m, lhs, rhs});
          }
        }
      }
    }
  }
  QuotientResult q = quotient_by_congruence(U, seeds, budget);
  // Basepoint: the barycenter vertex of the basepoint's component.
  std::size_t comp_bp = comp_index[0][X.basepoint];
  q.space.basepoint =
      q.projection.image[0][offset[comp_bp][0] + nerves[0].space.basepoint].cell;
  return q.space;
}

}  // namespace barytop
