#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppquad/errors.hpp"

namespace ppquad {

enum class Surface : uint8_t { Sphere, ProjectivePlane };

std::string to_string(Surface s);

// A dart is one of the two ends of an edge: dart 2*e sits at edges[e].u,
// dart 2*e+1 at edges[e].v. A loop owns both darts at the same vertex.
using DartId = int;

constexpr DartId twin(DartId d) { return d ^ 1; }
constexpr int edge_of(DartId d) { return d >> 1; }
constexpr DartId dart(int edge, int end) { return 2 * edge + end; }

struct Edge {
    int u = -1;
    int v = -1;
    int sign = +1; // +1 orientation-preserving, -1 reversing

    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

// Multigraph with a signed rotation system. The per-vertex clockwise dart
// order plus edge signs determine the embedding up to homeomorphism.
struct EmbeddedGraph {
    Surface surface = Surface::Sphere;
    bool allow_noncontractible_loops = false;
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<DartId>> rotation; // rotation[v]: cyclic, clockwise

    int edge_count() const { return static_cast<int>(edges.size()); }
    int dart_count() const { return 2 * edge_count(); }
    int dart_vertex(DartId d) const { return (d & 1) ? edges[edge_of(d)].v : edges[edge_of(d)].u; }
    int degree(int v) const { return static_cast<int>(rotation[v].size()); }
    int other_end(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }

    // Appends an edge with empty rotation bookkeeping; caller fills rotations.
    int add_edge(int u, int v, int sign = +1);

    bool operator==(const EmbeddedGraph&) const = default;
};

// One facial closed walk. states[i] encodes the i-th departing dart together
// with the trace orientation bit; consecutive entries are walk-consecutive.
struct FaceWalk {
    int id = -1;
    std::vector<int> states; // state = 2*dart + bit, bit 1 = reversed side

    int length() const { return static_cast<int>(states.size()); }
    DartId dart_at(int i) const { return states[i] >> 1; }
    int sign_at(int i) const { return (states[i] & 1) ? -1 : +1; }
};

inline int state_of(DartId d, int sign) { return 2 * d + (sign < 0 ? 1 : 0); }

struct FaceList {
    std::vector<FaceWalk> faces;
    std::vector<int> face_of_state; // 4m entries; both orbits of a face map to its id

    int count() const { return static_cast<int>(faces.size()); }
    int face_at(DartId d, int sign) const { return face_of_state[state_of(d, sign)]; }
    // Vertices on the boundary of face f, in walk order (may repeat).
    std::vector<int> boundary_vertices(const EmbeddedGraph& g, int f) const;
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool valid() const { return problems.empty(); }
    std::string joined() const;
};

// Closed walk given by an edge sequence; vertices must not repeat.
struct CycleRef {
    std::vector<int> edges;
    bool contractible = false;
};

// --- face tracing ------------------------------------------------------

// Deterministic orbit decomposition of the 4m trace states; the two orbits
// of each face are paired and the representative with the least state wins.
FaceList trace_faces(const EmbeddedGraph& g);

// The orbit through start_state (face traced from one side).
FaceWalk trace_orbit(const EmbeddedGraph& g, int start_state);
// Same face walked from the other side (reverse traversal).
FaceWalk partner_walk(const EmbeddedGraph& g, const FaceWalk& f);

int euler_characteristic(const EmbeddedGraph& g);
int expected_euler_characteristic(Surface s);

ValidationReport validate(const EmbeddedGraph& g);
void require_valid(const EmbeddedGraph& g, const std::string& context);

// --- signs and orientation ---------------------------------------------

// Reverses the rotation at v and flips the sign of every non-loop edge at v.
// Yields an equivalent embedding.
void flip_vertex(EmbeddedGraph& g, int v);

// Equivalent embedding in which every BFS-tree edge has sign +1. Sphere
// inputs come out all-positive.
EmbeddedGraph normalize_signs(const EmbeddedGraph& g);

bool is_orientable(const EmbeddedGraph& g);

// Sign product over an edge sequence forming a cycle; +1 means the cycle is
// two-sided, i.e. contractible on the sphere and the projective plane.
int cycle_sign(const EmbeddedGraph& g, const std::vector<int>& cycle_edges);
bool is_contractible(const EmbeddedGraph& g, const CycleRef& c);

// --- double cover and width --------------------------------------------

// Orientation double cover: vertex (v,s) = 2v+s, edge lifts 2e and 2e+1.
// The cover is orientable; for projective-plane inputs it is a sphere.
struct DoubleCover {
    EmbeddedGraph cover;
    int base_vertex(int cover_vertex) const { return cover_vertex >> 1; }
    int base_edge(int cover_edge) const { return cover_edge >> 1; }
};
DoubleCover double_cover(const EmbeddedGraph& g);

// Length of the shortest noncontractible cycle; projective plane only.
int edge_width(const EmbeddedGraph& g);
CycleRef shortest_noncontractible_cycle(const EmbeddedGraph& g);

// --- graph-level helpers -----------------------------------------------

// BFS bipartition; colors[v] in {0,1}, vertex 0 colored 0. Works on the
// abstract multigraph (loops make it fail).
std::optional<std::vector<uint8_t>> is_bipartite(const EmbeddedGraph& g);

bool is_connected(const EmbeddedGraph& g);

std::vector<std::vector<int>> simple_adjacency(const EmbeddedGraph& g);
bool has_edge_between(const EmbeddedGraph& g, int u, int v);
// Edge ids joining u and v (all parallel instances).
std::vector<int> edges_between(const EmbeddedGraph& g, int u, int v);

// --- canonical form -----------------------------------------------------

// Encoding invariant under vertex relabeling, vertex flips and reflection.
// Equal strings <=> isomorphic embeddings.
std::string canonical_form(const EmbeddedGraph& g);
bool isomorphic_embeddings(const EmbeddedGraph& a, const EmbeddedGraph& b);

// --- constructors --------------------------------------------------------

// Builds an embedding from its face walks (vertex cycles). Each edge must be
// covered by exactly two walks and the corners at every vertex must chain
// into a single rotation. Simple graphs only. Surface is inferred from the
// Euler characteristic.
EmbeddedGraph from_face_walks(int vertex_count, const std::vector<std::vector<int>>& walks);

// Subgraph keeping the listed edges (rotations restricted, vertices kept).
EmbeddedGraph restrict_to_edges(const EmbeddedGraph& g, const std::vector<char>& keep_edge,
                                Surface declared_surface);

// --- .pem text format ----------------------------------------------------

std::string write_pem(const EmbeddedGraph& g);
EmbeddedGraph read_pem(const std::string& text);
EmbeddedGraph read_pem_file(const std::string& path);
void write_pem_file(const EmbeddedGraph& g, const std::string& path);

} // namespace ppquad
