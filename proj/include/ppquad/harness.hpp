#pragma once
#include <map>
#include <string>

#include "ppquad/decider.hpp"
#include "ppquad/fixtures.hpp"
#include "ppquad/reducer.hpp"

namespace ppquad {

// PPQUAD_MAX_N, default 8: bound for exhaustive generation.
int enumeration_budget();

// All simple triangulations of the projective plane with exactly n vertices,
// up to embedding isomorphism; generated by exhausting graphs with 3n-3
// edges and their triangulating face sets. Results are cached per n.
const std::vector<EmbeddedGraph>& pp_triangulations(int n);
std::vector<EmbeddedGraph> enumerate_pp_triangulations(int max_n);

// All simple triangulations obtained by splitting one vertex (the inverse of
// an edge contraction); used to cross-check enumeration completeness.
std::vector<EmbeddedGraph> vertex_splittings(const EmbeddedGraph& t);
// An edge is contractible when its endpoints have exactly two common
// neighbors; instances without one are irreducible.
bool has_contractible_edge(const EmbeddedGraph& t);

// K6 with guests pasted into faces named by the face ids of the pristine K6.
EmbeddedGraph paste_family(const std::vector<std::pair<int, EmbeddedGraph>>& assignments);

// Plane quasi-Eulerian guests for obstruction families (rooted at face 0).
std::vector<EmbeddedGraph> quasi_eulerian_guest_pool();

// The seven-vertex instances carrying the K6-minus-an-edge pattern around
// two adjacent 5-vertices with three common neighbors.
std::vector<EmbeddedGraph> x_pattern_instances();

// Brute-force oracles.
bool sbq_oracle(const EmbeddedGraph& g);
bool weak_oracle(const EmbeddedGraph& g);
int maxcut_oracle(const EmbeddedGraph& g);

struct Corpus {
    std::vector<std::pair<std::string, EmbeddedGraph>> instances;
    std::map<std::string, int> canonical_index;

    // returns false when an isomorphic instance is already present
    bool add(const std::string& name, const EmbeddedGraph& g);
};
Corpus builtin_corpus();

struct Report {
    std::string text;
    bool ok = true;
    std::vector<std::string> failures;
};
Report cross_validate(const Corpus& corpus);

} // namespace ppquad
