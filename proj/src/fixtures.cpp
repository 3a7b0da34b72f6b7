#include "ppquad/fixtures.hpp"

namespace ppquad {

EmbeddedGraph k4() {
    return from_face_walks(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

EmbeddedGraph octahedron() {
    return from_face_walks(6, {{0, 1, 2},
                               {0, 2, 3},
                               {0, 3, 4},
                               {0, 4, 1},
                               {5, 2, 1},
                               {5, 3, 2},
                               {5, 4, 3},
                               {5, 1, 4}});
}

EmbeddedGraph k6_projective() {
    // pentagon 0..4 with hub 5; pentagram chords run through the crosscap
    std::vector<std::vector<int>> walks;
    for (int i = 0; i < 5; ++i) walks.push_back({i, (i + 1) % 5, 5});
    for (int i = 0; i < 5; ++i) walks.push_back({i, (i + 1) % 5, (i + 3) % 5});
    return from_face_walks(6, walks);
}

EmbeddedGraph four_cycle() {
    return from_face_walks(4, {{0, 1, 2, 3}, {0, 1, 2, 3}});
}

EmbeddedGraph cube_graph() {
    return from_face_walks(
        8, {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

EmbeddedGraph wheel4() {
    return from_face_walks(5, {{4, 0, 1}, {4, 1, 2}, {4, 2, 3}, {4, 3, 0}, {0, 1, 2, 3}});
}

EmbeddedGraph k4_subdivided_face() {
    return from_face_walks(
        5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 4}, {3, 2, 4}, {2, 1, 4}});
}

EmbeddedGraph five_cycle() {
    return from_face_walks(5, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}});
}

EmbeddedGraph k6_minus_edge_filled() {
    // drop pentagon edge {0,1}; its two triangles merge into the quad
    // 0-5-1-3, which a new vertex 6 subdivides
    std::vector<std::vector<int>> walks;
    for (int i = 1; i < 5; ++i) walks.push_back({i, (i + 1) % 5, 5});
    for (int i = 1; i < 5; ++i) walks.push_back({i, (i + 1) % 5, (i + 3) % 5});
    walks.push_back({6, 0, 5});
    walks.push_back({6, 5, 1});
    walks.push_back({6, 1, 3});
    walks.push_back({6, 3, 0});
    return from_face_walks(7, walks);
}

} // namespace ppquad
