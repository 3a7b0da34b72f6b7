#pragma once
#include "ppquad/factor_match.hpp"
#include "ppquad/tri_ops.hpp"

namespace ppquad {

enum class ContractionKind { C4, C6, C55, V2Rem, V2Add };

// C4/C6: pivot is the contracted vertex, at lists the identified neighbors.
// C55: pivot and second are the adjacent 5-vertices, at selects the form.
// V2Rem: pivot is the 2-vertex. V2Add: pivot is the edge to double.
struct ContractionSpec {
    ContractionKind kind = ContractionKind::C4;
    int pivot = -1;
    int second = -1;
    std::vector<int> at;
};

struct ContractionResult {
    EmbeddedGraph graph;
    std::vector<int> vertex_map; // input vertex -> result vertex, -1 removed
    std::vector<int> edge_map;   // input edge -> result edge, -1 removed; merged pairs coincide
    ContractionSpec spec;
    // edges named by the lifting tables, in input coordinates
    std::vector<int> spokes; // C4: vv1..vv4; C6: vv1..vv6; C55: vv1..vv4,uv4,uv5,uv6,uv1,uv
    std::vector<int> ring;   // boundary edges b0.. in walk order
};

ContractionResult apply(const EmbeddedGraph& g, const ContractionSpec& spec);

// Pulls a dual perfect matching of the contracted graph back so that the
// input minus the lifted set is a spanning quadrangulation of the same
// bipartiteness class.
EdgeSubset lift_matching(const EmbeddedGraph& g, const ContractionResult& res,
                         const EdgeSubset& contracted_matching);

// One of the five unavoidable configurations.
struct ReducibleConfig {
    enum Kind { TwoVertex, ThreeVertex, FourVertex, SixVertex, AdjacentFives } kind;
    int vertex = -1;
    int second = -1;
};
ReducibleConfig find_reducible(const EmbeddedGraph& g);

// All contractions applicable to an instance (used by sweeps).
std::vector<ContractionSpec> applicable_contractions(const EmbeddedGraph& g);

} // namespace ppquad
