#pragma once
#include "ppquad/embedded_graph.hpp"

namespace ppquad {

// Built-in instances, all constructed from their face walks.

EmbeddedGraph k4();
EmbeddedGraph octahedron();
// The unique triangular embedding of K6 in the projective plane.
EmbeddedGraph k6_projective();
EmbeddedGraph four_cycle();
EmbeddedGraph cube_graph();
// 4-cycle plus an apex joined to all rim vertices; one quadrilateral face.
EmbeddedGraph wheel4();
// K4 with one face subdivided by a new vertex joined to its corners.
EmbeddedGraph k4_subdivided_face();
EmbeddedGraph five_cycle();
// K6 on the projective plane minus one edge, the quadrilateral hole filled
// by a degree-4 vertex. Contains K6 minus an edge but no K6.
EmbeddedGraph k6_minus_edge_filled();

} // namespace ppquad
