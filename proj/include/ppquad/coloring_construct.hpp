#pragma once
#include "ppquad/coloring.hpp"
#include "ppquad/tri_ops.hpp"

namespace ppquad {

// Proper vertex coloring with at most four colors (0..3), found by exact
// backtracking; existence is guaranteed for loopless planar inputs.
struct FourColoring {
    std::vector<uint8_t> color;
};
FourColoring four_color(const EmbeddedGraph& g);
FourColoring four_color_adjacency(const std::vector<std::vector<int>>& adj);

// Plane graph whose faces are triangles except one distinguished face.
struct NearTriangulation {
    EmbeddedGraph graph;
    int outer_face = -1;
};

// -1 entries are uncolored; used to seed extensions.
using PartialColoring = std::vector<int8_t>;
PartialColoring empty_partial(int n);

// Extends a non-monochromatic coloring of one face to a weak coloring of the
// whole plane multitriangulation (guaranteed to exist).
Coloring extend_weak(const EmbeddedGraph& t, int face_id, const PartialColoring& partial);

// Weak coloring of a near-multitriangulation with outer 4-walk u1u2u3u4
// colored B,W,B,W; built by adding an apex and merging 4-coloring classes.
Coloring bwbw_coloring(const NearTriangulation& n);

// Boundary pattern B,B,B,? via identification of the nonadjacent diagonal.
// Either weak with u4 white, or near-weak with the outer face as the single
// monochromatic one. walk_offset rotates which boundary vertex plays u1.
struct BbbwResult {
    Coloring coloring;
    bool near_weak = false;
};
BbbwResult bbbw_coloring(const NearTriangulation& n, int walk_offset = 0);

// Weak coloring of a projective-plane triangulation that contains K6 minus
// an edge but no K6.
Coloring x_subgraph_coloring(const EmbeddedGraph& g);

// The embedded K6-minus-an-edge pattern, if present.
struct XSubgraph {
    std::vector<int> vertices;      // the six pattern vertices
    std::array<int, 2> missing_pair; // the nonadjacent two
};
std::optional<XSubgraph> find_x_subgraph(const EmbeddedGraph& g);
std::vector<XSubgraph> find_all_x_subgraphs(const EmbeddedGraph& g);

bool has_k6_subgraph(const EmbeddedGraph& g);

} // namespace ppquad
