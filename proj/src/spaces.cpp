#include "barytop/spaces.hpp"

#include "barytop/ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace barytop {

SimplicialSet point() {
  SimplicialSet X;
  X.counts = {1};
  X.faces.resize(1);
  X.basepoint = 0;
  return X;
}

SimplicialSet standard_simplex(int k) {
  if (k < 0) throw std::invalid_argument("standard_simplex: k must be >= 0");
  SimplicialSet X;
  X.counts.assign(k + 1, 0);
  X.faces.resize(k + 1);
  // d-cells are the (d+1)-subsets of {0..k}, ordered by bitmask.
  std::vector<std::vector<std::uint32_t>> subsets(k + 1);
  std::vector<std::map<std::uint32_t, std::int32_t>> index(k + 1);
  for (std::uint32_t s = 1; s < (1u << (k + 1)); ++s) {
    int d = __builtin_popcount(s) - 1;
    index[d][s] = static_cast<std::int32_t>(subsets[d].size());
    subsets[d].push_back(s);
  }
  for (int d = 0; d <= k; ++d) X.counts[d] = static_cast<std::int64_t>(subsets[d].size());
  for (int d = 1; d <= k; ++d) {
    X.faces[d].reserve(X.counts[d] * (d + 1));
    for (std::uint32_t s : subsets[d]) {
      std::vector<int> verts;
      for (int v = 0; v <= k; ++v)
        if (s & (1u << v)) verts.push_back(v);
      for (int i = 0; i <= d; ++i) {
        std::uint32_t t = s & ~(1u << verts[i]);
        X.faces[d].push_back(SimplexRef{0, index[d - 1][t]});
      }
    }
  }
  X.basepoint = 0;
  return X;
}

SimplicialSet minimal_sphere(int k) {
  if (k < 1)
    throw std::invalid_argument("minimal_sphere: k must be >= 1 (use a two-point space for S^0)");
  SimplicialSet X;
  X.counts.assign(k + 1, 0);
  X.counts[0] = 1;
  X.counts[k] = 1;
  X.faces.resize(k + 1);
  X.faces[k].assign(k + 1, SimplexRef{full_word(k - 1), 0});
  X.basepoint = 0;
  return X;
}

SimplicialSet polygon_surface(const std::vector<PolygonLetter>& word) {
  const int L = static_cast<int>(word.size());
  if (L < 2) throw std::invalid_argument("polygon word too short");
  int num_gens = 0;
  for (const PolygonLetter& l : word) num_gens = std::max(num_gens, l.generator + 1);
  std::vector<std::vector<int>> occ(num_gens);
  for (int i = 0; i < L; ++i) occ[word[i].generator].push_back(i);
  for (int g = 0; g < num_gens; ++g)
    if (occ[g].size() != 2)
      throw std::invalid_argument("every generator must occur exactly twice");

  // Vertex identifications induced by the edge gluings.
  std::vector<int> parent(L);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto nxt = [&](int i) { return (i + 1) % L; };
  for (int g = 0; g < num_gens; ++g) {
    int p = occ[g][0], q = occ[g][1];
    if (word[p].forward == word[q].forward) {
      unite(p, q);
      unite(nxt(p), nxt(q));
    } else {
      unite(p, nxt(q));
      unite(nxt(p), q);
    }
  }
  // Vertex classes; the class of corner 0 is the basepoint (id 0).
  std::vector<std::int32_t> vclass(L, -1);
  std::int32_t nclasses = 0;
  {
    std::map<int, std::int32_t> root_to_id;
    root_to_id[find(0)] = nclasses++;
    for (int i = 0; i < L; ++i) {
      int r = find(i);
      auto it = root_to_id.find(r);
      if (it == root_to_id.end()) it = root_to_id.emplace(r, nclasses++).first;
      vclass[i] = it->second;
    }
  }
  const std::int32_t apex = nclasses;  // cone point of the fan

  // Generator edge g is oriented by its first occurrence; consistency of the
  // second occurrence is forced by the vertex identifications above.
  std::vector<std::pair<std::int32_t, std::int32_t>> gen_ends(num_gens);  // (d1, d0)
  for (int g = 0; g < num_gens; ++g) {
    int p = occ[g][0];
    gen_ends[g] = word[p].forward
                      ? std::make_pair(vclass[p], vclass[nxt(p)])
                      : std::make_pair(vclass[nxt(p)], vclass[p]);
    int q = occ[g][1];
    auto other = word[q].forward
                     ? std::make_pair(vclass[q], vclass[nxt(q)])
                     : std::make_pair(vclass[nxt(q)], vclass[q]);
    if (other != gen_ends[g])
      throw std::invalid_argument("polygon word is not simplicially consistent");
  }

  SimplicialSet X;
  X.counts = {nclasses + 1, num_gens + L, L};
  X.faces.resize(3);
  // Edges: generators first, then the L spokes (corner i -> apex).
  X.faces[1].reserve(X.counts[1] * 2);
  for (int g = 0; g < num_gens; ++g) {
    X.faces[1].push_back(SimplexRef{0, gen_ends[g].second});  // d0 = target
    X.faces[1].push_back(SimplexRef{0, gen_ends[g].first});   // d1 = source
  }
  for (int i = 0; i < L; ++i) {
    X.faces[1].push_back(SimplexRef{0, apex});
    X.faces[1].push_back(SimplexRef{0, vclass[i]});
  }
  auto spoke = [&](int i) { return static_cast<std::int32_t>(num_gens + i); };
  X.faces[2].reserve(X.counts[2] * 3);
  for (int i = 0; i < L; ++i) {
    std::int32_t s_here = spoke(i), s_next = spoke(nxt(i));
    std::int32_t g = word[i].generator;
    if (word[i].forward) {
      X.faces[2].push_back(SimplexRef{0, s_next});
      X.faces[2].push_back(SimplexRef{0, s_here});
    } else {
      X.faces[2].push_back(SimplexRef{0, s_here});
      X.faces[2].push_back(SimplexRef{0, s_next});
    }
    X.faces[2].push_back(SimplexRef{0, g});
  }
  X.basepoint = 0;
  return X;
}

SimplicialSet surface(int g) {
  if (g < 0) throw std::invalid_argument("surface: genus must be >= 0");
  if (g == 0) return minimal_sphere(2);
  std::vector<PolygonLetter> word;
  for (int i = 0; i < g; ++i) {
    int a = 2 * i, b = 2 * i + 1;
    word.push_back({a, true});
    word.push_back({b, true});
    word.push_back({a, false});
    word.push_back({b, false});
  }
  return polygon_surface(word);
}

SimplicialSet torus() {
  // the minimal model: the square of the one-cell circle
  SimplicialSet s1 = minimal_sphere(1);
  return multi_product({&s1, &s1}).space;
}

SimplicialSet rp2() { return polygon_surface({{0, true}, {0, true}}); }

SimplicialSet from_facets(int num_vertices, const std::vector<std::vector<int>>& facets,
                          int basepoint) {
  // Collect all faces of all facets as sorted vertex lists.
  std::vector<std::set<std::vector<int>>> cells_by_dim;
  auto add_with_faces = [&](const std::vector<int>& simplex, auto&& self) -> void {
    int d = static_cast<int>(simplex.size()) - 1;
    if (d >= static_cast<int>(cells_by_dim.size())) cells_by_dim.resize(d + 1);
    if (!cells_by_dim[d].insert(simplex).second) return;
    if (d == 0) return;
    for (int i = 0; i <= d; ++i) {
      std::vector<int> f = simplex;
      f.erase(f.begin() + i);
      self(f, self);
    }
  };
  for (const auto& f : facets) {
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("facet has repeated vertices");
    for (int v : s)
      if (v < 0 || v >= num_vertices) throw std::invalid_argument("facet vertex out of range");
    add_with_faces(s, add_with_faces);
  }
  for (int v = 0; v < num_vertices; ++v) add_with_faces({v}, add_with_faces);

  SimplicialSet X;
  int D = static_cast<int>(cells_by_dim.size()) - 1;
  X.counts.assign(D + 1, 0);
  X.faces.resize(D + 1);
  std::vector<std::map<std::vector<int>, std::int32_t>> index(D + 1);
  for (int d = 0; d <= D; ++d) {
    for (const auto& s : cells_by_dim[d]) {
      index[d][s] = static_cast<std::int32_t>(X.counts[d]);
      ++X.counts[d];
    }
  }
  for (int d = 1; d <= D; ++d) {
    X.faces[d].reserve(X.counts[d] * (d + 1));
    for (const auto& s : cells_by_dim[d]) {
      for (int i = 0; i <= d; ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + i);
        X.faces[d].push_back(SimplexRef{0, index[d - 1][f]});
      }
    }
  }
  X.basepoint = basepoint;
  return X;
}

}  // namespace barytop
