#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "ppquad/embedded_graph.hpp"

namespace ppquad {

enum : uint8_t { BLACK = 0, WHITE = 1 };

// Vertex 2-coloring. Weak = no monochromatic face, near-weak = exactly one.
struct Coloring {
    std::vector<uint8_t> color;

    uint8_t operator[](int v) const { return color[v]; }
    uint8_t& operator[](int v) { return color[v]; }
    int size() const { return static_cast<int>(color.size()); }
    std::string to_string() const;
    Coloring flipped() const;
};

Coloring coloring_from_string(const std::string& s);

// Face ids whose boundary vertices all share one color.
std::vector<int> monochromatic_faces(const EmbeddedGraph& g, const FaceList& fl, const Coloring& c);
std::vector<int> monochromatic_faces(const EmbeddedGraph& g, const Coloring& c);

bool is_weak(const EmbeddedGraph& g, const Coloring& c);
bool is_near_weak(const EmbeddedGraph& g, const Coloring& c);

} // namespace ppquad
