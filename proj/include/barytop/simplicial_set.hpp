#ifndef BARYTOP_SIMPLICIAL_SET_HPP
#define BARYTOP_SIMPLICIAL_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "barytop/words.hpp"

namespace barytop {

// Reference to a (possibly degenerate) simplex: the normal-form degeneracy
// word applied to a nondegenerate cell.  The ambient dimension is implicit;
// the target cell has dimension (ambient - word_size(letters)).
struct SimplexRef {
  Mask letters = 0;
  std::int32_t cell = -1;
  bool operator==(const SimplexRef&) const = default;
};

// A finite simplicial set presented by its nondegenerate cells.  faces[d] is
// a flat array of counts[d] * (d+1) simplex references; face i of cell c in
// dimension d sits at faces[d][c*(d+1)+i] and lives in dimension d-1.
struct SimplicialSet {
  std::vector<std::int64_t> counts;
  std::vector<std::vector<SimplexRef>> faces;
  std::int32_t basepoint = 0;

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  std::int64_t cell_count(int d) const {
    return (d >= 0 && d < static_cast<int>(counts.size())) ? counts[d] : 0;
  }
  std::int64_t total_cells() const;

  const SimplexRef& face(int d, std::int64_t cell, int i) const {
    return faces[d][cell * (d + 1) + i];
  }
  SimplexRef& face_mut(int d, std::int64_t cell, int i) {
    return faces[d][cell * (d + 1) + i];
  }

  // Face of an arbitrary simplex in ambient dimension d, computed through
  // the degeneracy word.
  SimplexRef simplex_face(int d, const SimplexRef& s, int i) const;

  // Checks structural well-formedness and all simplicial identities
  // d_i d_j = d_{j-1} d_i (i < j) on every nondegenerate cell.
  bool validate(std::string* why = nullptr) const;

  // Connectivity of the 1-skeleton (all corpus spaces are connected).
  bool connected() const;
};

struct CellCensus {
  std::vector<std::int64_t> counts;
  bool operator==(const CellCensus&) const = default;
};

CellCensus census(const SimplicialSet& X);

// Alternating sum of nondegenerate cell counts.
std::int64_t euler_from_census(const SimplicialSet& X);

// JSON exchange format:
//   {"dims": d, "cells": [counts...], "basepoint": id,
//    "faces": [ per dimension 1..d: [ per cell: [ [[letters desc], target], ... ] ] ]}
// Serialization then parsing is the identity, byte-exact.
std::string simplicial_set_to_json(const SimplicialSet& X);
SimplicialSet simplicial_set_from_json(const std::string& text);

}  // namespace barytop

#endif
