#pragma once
#include <array>
#include <optional>

#include "ppquad/embedded_graph.hpp"

namespace ppquad {

bool is_triangulation(const EmbeddedGraph& g);
bool is_quadrangulation(const EmbeddedGraph& g);

// Dual multigraph: one dual vertex per face, one dual edge per primal edge
// joining the faces on its two sides (edge ids shared with the primal).
struct DualGraph {
    int face_count = 0;
    std::vector<std::array<int, 2>> ends;

    int edge_count() const { return static_cast<int>(ends.size()); }
    std::vector<std::vector<std::pair<int, int>>> adjacency() const; // vertex -> (nbr, edge)
    std::vector<int> degrees() const;
    bool is_cubic() const;
};

DualGraph dual(const EmbeddedGraph& g);
bool dual_is_bipartite(const DualGraph& d, std::vector<uint8_t>* classes = nullptr);

// Proper red/blue face coloring of a plane triangulation with even degrees.
struct FaceTwoColoring {
    std::vector<uint8_t> rb; // 0 = red, 1 = blue
    int red_count() const;
};
FaceTwoColoring face_2coloring(const EmbeddedGraph& g);

bool is_eulerian(const EmbeddedGraph& g); // all degrees even

// Connected components of faces when crossing only unblocked edges.
struct FaceComponents {
    int count = 0;
    std::vector<int> comp; // per face id
};
FaceComponents face_components(const EmbeddedGraph& g, const FaceList& fl,
                               const std::vector<char>& blocked_edge);

// Contractible 3-cycles with at least one vertex strictly on each side.
std::vector<CycleRef> separating_3cycles(const EmbeddedGraph& g);

// A sub-triangulation cut out of a host along a cycle; keeps id maps back
// into the host. root_face is the face created by the cut.
struct Piece {
    EmbeddedGraph graph;
    std::vector<int> orig_vertex;
    std::vector<int> orig_edge;
    int root_face = -1;
};

// Cuts out the faces of one component together with the bounding cycle.
Piece piece_from_faces(const EmbeddedGraph& g, const FaceList& fl, const std::vector<char>& take_face,
                       const std::vector<int>& boundary_edges);

// Splits a triangulation along a separating 3-cycle. First result is the
// disk side (on the projective plane) or the smaller side (sphere).
std::pair<Piece, Piece> split_along(const EmbeddedGraph& g, const CycleRef& c);

// Glues guest into host by identifying the two faces. Host ids survive;
// guest ids are reported through the maps. shift/flip pick one of the at
// most six gluings of the two face walks.
struct PasteResult {
    EmbeddedGraph graph;
    std::vector<int> guest_vertex_map;
    std::vector<int> guest_edge_map; // -1 for the glued face edges
};
PasteResult paste(const EmbeddedGraph& host, int host_face, const EmbeddedGraph& guest, int guest_face,
                  int shift = 0, bool flip = false);
std::vector<PasteResult> paste_all(const EmbeddedGraph& host, int host_face, const EmbeddedGraph& guest,
                                   int guest_face);
// The gluing realizing a prescribed guest-vertex -> host-vertex bijection on
// the two face walks.
PasteResult paste_by_correspondence(const EmbeddedGraph& host, int host_face, const EmbeddedGraph& guest,
                                    int guest_face, const std::vector<std::pair<int, int>>& guest_to_host);

// Parallel edge pairs forming 2-cycles, split by contractibility.
std::vector<std::array<int, 2>> contractible_2cycles(const EmbeddedGraph& g);
std::vector<std::array<int, 2>> noncontractible_2cycles(const EmbeddedGraph& g);
std::vector<int> noncontractible_loops(const EmbeddedGraph& g);

// Removes the disk interior of a contractible 2-cycle and merges the two
// parallel edges. Vertex ids are compacted; maps report survivors.
struct ContractTwoCycleResult {
    EmbeddedGraph graph;
    std::vector<int> orig_vertex;
    std::vector<int> orig_edge;
    int merged_edge = -1; // id in the result
};
ContractTwoCycleResult contract_2cycle(const EmbeddedGraph& g, const std::array<int, 2>& cycle_edges);

// The disk side of a contractible 2-cycle, zipped shut along the doubled
// edge; a plane multitriangulation containing the merged edge.
ContractTwoCycleResult extract_zipped_disk(const EmbeddedGraph& g, const std::array<int, 2>& cycle_edges);

// Regions of the host cut out by an embedded subgraph: host faces grouped by
// the sub-embedding face they lie in.
struct SubgraphRegions {
    EmbeddedGraph sub; // restricted embedding, host vertex ids kept
    std::vector<int> sub_orig_edge;
    FaceList sub_faces;
    FaceList host_faces;
    FaceComponents comps;               // components of host faces
    std::vector<int> region_of_subface; // component id per sub face
};
SubgraphRegions subgraph_regions(const EmbeddedGraph& g, const std::vector<char>& sub_edge);

// Inserts a degree-2 vertex on an edge by doubling the edge and filling the
// bigon with two triangles. Inverse of a 2-vertex removal.
struct TwoVertexAddition {
    EmbeddedGraph graph;
    int new_vertex = -1;
    std::array<int, 2> doubled_edges{-1, -1};
};
TwoVertexAddition add_two_vertex(const EmbeddedGraph& g, int e);

// Cut along a noncontractible 2-cycle of a projective-plane triangulation.
// Result is a plane near-multitriangulation whose outer face walks the cut
// cycle twice; orig_vertex maps the doubled boundary copies back.
struct CutDisk {
    EmbeddedGraph graph;
    int outer_face = -1;
    std::vector<int> orig_vertex;
};
CutDisk cut_along_2cycle(const EmbeddedGraph& g, const std::array<int, 2>& cycle_edges);

} // namespace ppquad
