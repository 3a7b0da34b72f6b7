#include "ppquad/coloring.hpp"

namespace ppquad {

std::string Coloring::to_string() const {
    std::string s;
    s.reserve(color.size());
    for (uint8_t c : color) s += (c == BLACK ? 'B' : 'W');
    return s;
}

Coloring Coloring::flipped() const {
    Coloring out = *this;
    for (auto& c : out.color) c ^= 1;
    return out;
}

Coloring coloring_from_string(const std::string& s) {
    Coloring c;
    for (char ch : s) {
        if (ch == 'B')
            c.color.push_back(BLACK);
        else if (ch == 'W')
            c.color.push_back(WHITE);
        else
            throw StructureError("coloring string must consist of B and W");
    }
    return c;
}

std::vector<int> monochromatic_faces(const EmbeddedGraph& g, const FaceList& fl, const Coloring& c) {
    std::vector<int> out;
    for (const FaceWalk& f : fl.faces) {
        bool mono = true;
        uint8_t col = c[g.dart_vertex(f.dart_at(0))];
        for (int i = 1; i < f.length() && mono; ++i) mono = c[g.dart_vertex(f.dart_at(i))] == col;
        if (mono) out.push_back(f.id);
    }
    return out;
}

std::vector<int> monochromatic_faces(const EmbeddedGraph& g, const Coloring& c) {
    return monochromatic_faces(g, trace_faces(g), c);
}

bool is_weak(const EmbeddedGraph& g, const Coloring& c) {
    return monochromatic_faces(g, c).empty();
}

bool is_near_weak(const EmbeddedGraph& g, const Coloring& c) {
    return monochromatic_faces(g, c).size() == 1;
}

} // namespace ppquad
