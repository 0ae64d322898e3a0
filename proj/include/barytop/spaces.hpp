#ifndef BARYTOP_SPACES_HPP
#define BARYTOP_SPACES_HPP

#include "barytop/simplicial_set.hpp"

namespace barytop {

SimplicialSet point();

// Model of the standard k-simplex: C(k+1, d+1) nondegenerate d-cells.
SimplicialSet standard_simplex(int k);

// Minimal based model of S^k (k >= 1): one vertex and one k-cell whose faces
// are all totally degenerate on the vertex.  k = 0 is rejected; use an
// explicit two-point space instead.
SimplicialSet minimal_sphere(int k);

// Closed orientable surface of genus g; surface(0) is the minimal 2-sphere,
// genus >= 1 uses a triangulated-polygon model with the standard
// [a1,b1]...[ag,bg] edge identifications.
SimplicialSet surface(int g);

SimplicialSet torus();

// Triangulated-polygon model of the projective plane (word a.a).
SimplicialSet rp2();

// One occurrence of a boundary edge of the glued polygon: generator index
// and traversal direction.
struct PolygonLetter {
  int generator;
  bool forward;
};

// Quotient of a fan-triangulated polygon by edge identifications.  Every
// generator must occur exactly twice; the induced vertex identifications
// make each generator's endpoints agree across its two occurrences.
SimplicialSet polygon_surface(const std::vector<PolygonLetter>& word);

// Ordered simplicial complex given by facets (vertex lists, strictly
// increasing): the associated simplicial set.  Test oracle for surfaces.
SimplicialSet from_facets(int num_vertices, const std::vector<std::vector<int>>& facets,
                          int basepoint = 0);

}  // namespace barytop

#endif
