#pragma once
#include <functional>
#include <optional>

#include "ppquad/coloring.hpp"
#include "ppquad/tri_ops.hpp"

namespace ppquad {

// Sorted set of edge ids; interpreted on the primal or, via the shared edge
// ids, on the dual.
struct EdgeSubset {
    std::vector<int> ids;

    static EdgeSubset of(std::vector<int> v);
    bool contains(int e) const;
    int size() const { return static_cast<int>(ids.size()); }
    std::string to_string() const;
    bool operator==(const EdgeSubset&) const = default;
};

// Enumerates perfect matchings of a cubic dual in a fixed order; stops when
// the callback returns false. Returns the number emitted.
int perfect_matchings(const DualGraph& d, const std::function<bool(const EdgeSubset&)>& cb);
std::vector<EdgeSubset> all_perfect_matchings(const DualGraph& d, int limit = -1);

// A perfect matching containing the given dual edge; exists for 2-connected
// cubic hosts, so failure raises TheoremViolation.
EdgeSubset matching_through(const DualGraph& d, int e);

// Spanning subgraphs of the dual whose degrees all lie in `allowed`.
int enumerate_factors(const DualGraph& d, const std::vector<int>& allowed,
                      const std::function<bool(const EdgeSubset&)>& cb);
bool is_factor_with_degrees(const DualGraph& d, const EdgeSubset& f, const std::vector<int>& allowed);
std::vector<int> dual_degrees(const DualGraph& d, const EdgeSubset& f);

// T minus a matching-dual edge set: the spanning quadrangulation.
struct QuadrangulationResult {
    EmbeddedGraph graph;
    std::vector<int> orig_edge;
};
QuadrangulationResult quadrangulation_from(const EmbeddedGraph& t, const EdgeSubset& m);

// Parity criterion on one noncontractible cycle: |C∩M| ≡ |C| (mod 2).
// Decides bipartiteness of T−M when M is a dual perfect matching or
// {1,3}-factor. Sphere inputs are always bipartite.
bool parity_bipartite(const EmbeddedGraph& t, const EdgeSubset& m);

// Monochromatic edge set of a coloring; its dual is a {1,3}-factor.
EdgeSubset coloring_to_factor(const EmbeddedGraph& t, const Coloring& c);
// Plane-only inverse: coloring whose monochromatic faces are the 3-vertices
// of the factor. Vertex 0 is colored black.
Coloring factor_to_coloring(const EmbeddedGraph& t, const EdgeSubset& f);

// Exact maximum cut = maximum bipartite subgraph size, with the
// lexicographically least witness among maximizers.
struct MaxCutResult {
    int size = 0;
    Coloring part;
};
MaxCutResult max_bipartite_subgraph(const EmbeddedGraph& g);
// Plain max cut without the triangulation precondition (used by oracles).
MaxCutResult max_cut(const EmbeddedGraph& g);

} // namespace ppquad
