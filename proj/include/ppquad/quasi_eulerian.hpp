#pragma once
#include <optional>

#include "ppquad/coloring.hpp"
#include "ppquad/factor_match.hpp"
#include "ppquad/tri_ops.hpp"

namespace ppquad {

// Decomposition of a plane triangulation at a face: the unique piece at the
// face with no separating 3-cycles, plus the sub-triangulations hanging off
// its faces.
struct FaceDecomposition {
    Piece skeleton;        // maps into the host triangulation
    int skeleton_root = -1; // face of skeleton.graph corresponding to the host face
    struct Part {
        Piece piece;       // piece.root_face is the pasted triangle
        int skeleton_face; // face of skeleton.graph it hangs on
    };
    std::vector<Part> attachments;
};
FaceDecomposition decompose_at_face(const EmbeddedGraph& t, int face_id);

// Tree certificate: Eulerian skeleton with the root face red, arbitrary
// triangulations on other red faces, recursive children on blue faces.
struct QEDecomposition {
    EmbeddedGraph skeleton;
    std::vector<int> skeleton_parent_vertex;
    int root_face = -1;
    std::vector<uint8_t> face_rb; // skeleton faces, 0 = red (root is red)
    struct Attached {
        int skeleton_face = -1;
        EmbeddedGraph graph;
        std::vector<int> parent_vertex;
        int pasted_face = -1;
    };
    std::vector<Attached> red_attachments;
    std::vector<Attached> blue_attachments;
    std::vector<QEDecomposition> blue_children; // parallel to blue_attachments
};

// Recognizer; certificate present exactly when t belongs to the class.
std::optional<QEDecomposition> is_quasi_eulerian(const EmbeddedGraph& t, int face_id);

// Re-pastes all attachments; the result is isomorphic to the decomposed input.
EmbeddedGraph replay(const QEDecomposition& d);

// Exhaustive ground truth: true iff no extension of the monochromatic face
// coloring has exactly one monochromatic face.
bool qe_oracle(const EmbeddedGraph& t, int face_id);

// Coloring of an even plane triangulation without separating 3-cycles whose
// monochromatic faces are exactly the given red face and blue face.
Coloring two_mono_coloring(const EmbeddedGraph& e, int red_face, int blue_face);

// Extends the monochromatic coloring of a face to the whole triangulation
// with exactly one / exactly two monochromatic faces.
Coloring extend_mono_to_near_weak(const EmbeddedGraph& t, int face_id, uint8_t mono_color);
Coloring extend_mono_to_two_mono(const EmbeddedGraph& t, int face_id, uint8_t mono_color);

} // namespace ppquad
