#pragma once
#include <optional>

#include "ppquad/coloring.hpp"
#include "ppquad/factor_match.hpp"
#include "ppquad/quasi_eulerian.hpp"

namespace ppquad {

// A 6-clique embedded as the triangular K6 skeleton, with every remaining
// vertex inside one of its ten face regions.
struct K6Structure {
    std::vector<int> clique;
    std::vector<int> sub_faces;           // ten face ids of the sub-embedding
    std::vector<std::vector<int>> face_vertices; // boundary triple per sub face
    struct Region {
        Piece piece;    // plane triangulation, root_face = the boundary triangle
        bool empty = false;
    };
    std::vector<Region> regions; // parallel to sub_faces
};

std::optional<K6Structure> find_k6_structure(const EmbeddedGraph& g);
std::vector<K6Structure> find_all_k6_structures(const EmbeddedGraph& g);

enum class Verdict { HasSbq, NoSbq };

struct Certificate {
    Verdict verdict = Verdict::HasSbq;
    // witness (HasSbq): weak coloring, removed edges, spanning quadrangulation
    std::optional<Coloring> coloring;
    std::optional<EdgeSubset> removed;
    std::optional<EmbeddedGraph> quadrangulation;
    // obstruction (NoSbq): the simple normalization and its K6 structure with
    // quasi-Eulerian certificates per region
    std::optional<EmbeddedGraph> normalized;
    std::optional<K6Structure> k6;
    std::vector<std::optional<QEDecomposition>> region_certificates;
};

// Decision with a self-verified certificate either way.
Certificate decide_sbq(const EmbeddedGraph& g);
bool verify_certificate(const EmbeddedGraph& g, const Certificate& c, std::string* why = nullptr);

// A weak coloring when one exists, otherwise a near-weak one.
Coloring near_weak_or_weak(const EmbeddedGraph& g);

// Bipartite subgraph from the coloring above; always >= 2|E|/3 - 1.
struct BoundResult {
    int size = 0;
    Coloring coloring;
};
BoundResult bipartite_subgraph_bound(const EmbeddedGraph& g);

std::string certificate_to_json(const Certificate& c);

} // namespace ppquad
