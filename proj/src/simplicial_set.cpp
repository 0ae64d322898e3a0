#include "barytop/simplicial_set.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace barytop {

std::int64_t SimplicialSet::total_cells() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

SimplexRef SimplicialSet::simplex_face(int d, const SimplexRef& s, int i) const {
  if (s.letters == 0) return face(d, s.cell, i);
  WordFace wf = face_through_word(s.letters, i);
  if (wf.face_index < 0) return {wf.letters, s.cell};
  int p = d - word_size(s.letters);
  const SimplexRef& f = face(p, s.cell, wf.face_index);
  return {compose_words(wf.letters, f.letters), f.cell};
}

bool SimplicialSet::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (counts.empty() || counts[0] <= 0) return fail("no vertices");
  if (static_cast<std::size_t>(dim()) + 1 != faces.size() && !(dim() == 0 && faces.size() <= 1))
    return fail("faces/counts size mismatch");
  if (basepoint < 0 || basepoint >= counts[0]) return fail("basepoint out of range");
  for (int d = 1; d <= dim(); ++d) {
    if (static_cast<std::int64_t>(faces[d].size()) != counts[d] * (d + 1))
      return fail("face table size mismatch in dimension " + std::to_string(d));
    for (std::int64_t c = 0; c < counts[d]; ++c) {
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& f = face(d, c, i);
        int k = word_size(f.letters);
        int p = d - 1 - k;
        if (p < 0 || f.letters >= full_word(d - 1) + 1u)
          return fail("face word out of range");
        if (f.cell < 0 || f.cell >= cell_count(p))
          return fail("face target out of range");
      }
    }
  }
  for (int d = 2; d <= dim(); ++d) {
    for (std::int64_t c = 0; c < counts[d]; ++c) {
      for (int j = 1; j <= d; ++j) {
        for (int i = 0; i < j; ++i) {
          SimplexRef lhs = simplex_face(d - 1, face(d, c, j), i);
          SimplexRef rhs = simplex_face(d - 1, face(d, c, i), j - 1);
          if (!(lhs == rhs))
            return fail("simplicial identity fails at dim " + std::to_string(d) +
                        " cell " + std::to_string(c) + " (i,j)=(" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  return true;
}

bool SimplicialSet::connected() const {
  std::int64_t nv = cell_count(0);
  if (nv <= 1) return true;
  std::vector<std::int32_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  if (dim() >= 1) {
    for (std::int64_t e = 0; e < counts[1]; ++e) {
      std::int32_t a = find(face(1, e, 0).cell), b = find(face(1, e, 1).cell);
      if (a != b) parent[a] = b;
    }
  }
  std::int32_t root = find(0);
  for (std::int32_t v = 1; v < nv; ++v)
    if (find(v) != root) return false;
  return true;
}

CellCensus census(const SimplicialSet& X) { return CellCensus{X.counts}; }

std::int64_t euler_from_census(const SimplicialSet& X) {
  std::int64_t chi = 0;
  for (int d = 0; d <= X.dim(); ++d) chi += (d % 2 == 0) ? X.counts[d] : -X.counts[d];
  return chi;
}

std::string simplicial_set_to_json(const SimplicialSet& X) {
  nlohmann::json j;
  j["dims"] = X.dim();
  j["cells"] = X.counts;
  j["basepoint"] = X.basepoint;
  nlohmann::json faces = nlohmann::json::array();
  for (int d = 1; d <= X.dim(); ++d) {
    nlohmann::json per_dim = nlohmann::json::array();
    for (std::int64_t c = 0; c < X.counts[d]; ++c) {
      nlohmann::json per_cell = nlohmann::json::array();
      for (int i = 0; i <= d; ++i) {
        const SimplexRef& f = X.face(d, c, i);
        per_cell.push_back({word_letters_desc(f.letters), f.cell});
      }
      per_dim.push_back(per_cell);
    }
    faces.push_back(per_dim);
  }
  j["faces"] = faces;
  return j.dump();
}

SimplicialSet simplicial_set_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SimplicialSet X;
  int dims = j.at("dims").get<int>();
  X.counts = j.at("cells").get<std::vector<std::int64_t>>();
  X.basepoint = j.at("basepoint").get<std::int32_t>();
  if (static_cast<int>(X.counts.size()) != dims + 1)
    throw std::invalid_argument("cells array inconsistent with dims");
  X.faces.assign(dims + 1, {});
  const nlohmann::json& faces = j.at("faces");
  if (static_cast<int>(faces.size()) != dims)
    throw std::invalid_argument("faces array inconsistent with dims");
  for (int d = 1; d <= dims; ++d) {
    const nlohmann::json& per_dim = faces[d - 1];
    if (static_cast<std::int64_t>(per_dim.size()) != X.counts[d])
      throw std::invalid_argument("face table size mismatch");
    X.faces[d].reserve(X.counts[d] * (d + 1));
    for (const auto& per_cell : per_dim) {
      if (static_cast<int>(per_cell.size()) != d + 1)
        throw std::invalid_argument("cell face list has wrong arity");
      for (const auto& entry : per_cell) {
        auto letters = entry.at(0).get<std::vector<int>>();
        X.faces[d].push_back(SimplexRef{word_from_letters(letters),
                                        entry.at(1).get<std::int32_t>()});
      }
    }
  }
  std::string why;
  if (!X.validate(&why)) throw std::invalid_argument("invalid simplicial set: " + why);
  return X;
}

}  // namespace barytop
