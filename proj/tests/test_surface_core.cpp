#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "ppquad/coloring.hpp"
#include "ppquad/embedded_graph.hpp"
#include "ppquad/fixtures.hpp"

using namespace ppquad;

namespace {

std::multiset<int> face_length_multiset(const EmbeddedGraph& g) {
    std::multiset<int> out;
    for (const auto& f : trace_faces(g).faces) out.insert(f.length());
    return out;
}

// all simple cycles of the underlying graph, as edge-id lists (small graphs)
void collect_cycles_from(const EmbeddedGraph& g, int start, int cur, std::vector<int>& vpath,
                         std::vector<int>& epath, std::vector<char>& used,
                         std::vector<std::vector<int>>& out) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.is_loop()) continue;
        int nxt = -1;
        if (ed.u == cur)
            nxt = ed.v;
        else if (ed.v == cur)
            nxt = ed.u;
        else
            continue;
        if (!epath.empty() && e == epath.back()) continue;
        if (nxt == start && epath.size() >= 1) {
            if (vpath.front() < vpath[1]) { // canonical direction, avoid double count
                auto es = epath;
                es.push_back(e);
                out.push_back(es);
            }
            continue;
        }
        if (nxt < start || used[nxt]) continue;
        used[nxt] = 1;
        vpath.push_back(nxt);
        epath.push_back(e);
        collect_cycles_from(g, start, nxt, vpath, epath, used, out);
        epath.pop_back();
        vpath.pop_back();
        used[nxt] = 0;
    }
}

std::vector<std::vector<int>> all_cycles(const EmbeddedGraph& g) {
    std::vector<std::vector<int>> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edges[e].is_loop()) out.push_back({e});
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f) {
            const Edge &a = g.edges[e], &b = g.edges[f];
            if (a.is_loop() || b.is_loop()) continue;
            if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)) out.push_back({e, f});
        }
    for (int s = 0; s < g.vertex_count; ++s) {
        std::vector<char> used(g.vertex_count, 0);
        used[s] = 1;
        std::vector<int> vpath{s}, epath;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edges[e];
            if (ed.is_loop()) continue;
            int nxt = -1;
            if (ed.u == s)
                nxt = ed.v;
            else if (ed.v == s)
                nxt = ed.u;
            else
                continue;
            if (nxt < s || used[nxt]) continue;
            used[nxt] = 1;
            vpath.push_back(nxt);
            epath.push_back(e);
            std::vector<std::vector<int>> found;
            collect_cycles_from(g, s, nxt, vpath, epath, used, found);
            for (auto& c : found)
                if (c.size() >= 3) out.push_back(c);
            epath.pop_back();
            vpath.pop_back();
            used[nxt] = 0;
        }
    }
    return out;
}

EmbeddedGraph relabel(const EmbeddedGraph& g, const std::vector<int>& perm) {
    EmbeddedGraph out = g;
    out.rotation.assign(g.vertex_count, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        out.edges[e].u = perm[g.edges[e].u];
        out.edges[e].v = perm[g.edges[e].v];
    }
    for (int v = 0; v < g.vertex_count; ++v) out.rotation[perm[v]] = g.rotation[v];
    return out;
}

} // namespace

TEST_CASE("k6 on the projective plane validates with the expected counts") {
    EmbeddedGraph g = k6_projective();
    auto r = validate(g);
    CHECK(r.valid());
    CHECK(g.vertex_count == 6);
    CHECK(g.edge_count() == 15);
    FaceList fl = trace_faces(g);
    CHECK(fl.count() == 10);
    CHECK(euler_characteristic(g) == 1);
    for (const auto& f : fl.faces) CHECK(f.length() == 3);
}

TEST_CASE("flipping one sign breaks the euler characteristic check") {
    EmbeddedGraph g = k6_projective();
    g.edges[0].sign = -g.edges[0].sign;
    auto r = validate(g);
    CHECK_FALSE(r.valid());
}

TEST_CASE("k4 on the sphere has four triangular faces") {
    EmbeddedGraph g = k4();
    auto r = validate(g);
    CHECK(r.valid());
    CHECK(g.surface == Surface::Sphere);
    FaceList fl = trace_faces(g);
    CHECK(fl.count() == 4);
    for (const auto& f : fl.faces) CHECK(f.length() == 3);
    CHECK(is_orientable(g));
}

TEST_CASE("a 4-cycle on the sphere has two quadrilateral faces") {
    EmbeddedGraph g = four_cycle();
    CHECK(validate(g).valid());
    FaceList fl = trace_faces(g);
    REQUIRE(fl.count() == 2);
    CHECK(fl.faces[0].length() == 4);
    CHECK(fl.faces[1].length() == 4);
}

TEST_CASE("face tracing is stable under vertex relabeling") {
    EmbeddedGraph g = k6_projective();
    auto base = face_length_multiset(g);
    std::vector<int> perm{3, 5, 0, 2, 4, 1};
    EmbeddedGraph h = relabel(g, perm);
    CHECK(validate(h).valid());
    CHECK(face_length_multiset(h) == base);
    CHECK(euler_characteristic(h) == euler_characteristic(g));
    CHECK(isomorphic_embeddings(g, h));
}

TEST_CASE("normalize_signs keeps orientable inputs all positive and is idempotent") {
    EmbeddedGraph g = octahedron();
    EmbeddedGraph n = normalize_signs(g);
    for (const Edge& e : n.edges) CHECK(e.sign == +1);
    EmbeddedGraph k6n = normalize_signs(k6_projective());
    int negatives = 0;
    for (const Edge& e : k6n.edges) negatives += e.sign < 0;
    CHECK(negatives >= 1); // nonorientable, so some edge keeps a reversal
    CHECK(normalize_signs(k6n) == k6n);
    CHECK(validate(k6n).valid());
}

TEST_CASE("normalize_signs preserves every cycle sign") {
    for (EmbeddedGraph g : {k6_projective(), octahedron(), k4()}) {
        EmbeddedGraph n = normalize_signs(g);
        for (const auto& cyc : all_cycles(g)) {
            CHECK(cycle_sign(g, cyc) == cycle_sign(n, cyc));
        }
    }
}

TEST_CASE("every cycle on the sphere is contractible, facial walks always are") {
    EmbeddedGraph g = k4();
    for (const auto& cyc : all_cycles(g)) {
        CycleRef c{cyc, false};
        CHECK(is_contractible(g, c));
    }
    EmbeddedGraph p = k6_projective();
    for (const auto& f : trace_faces(p).faces) {
        std::vector<int> es;
        for (int i = 0; i < f.length(); ++i) es.push_back(edge_of(f.dart_at(i)));
        CHECK(is_contractible(p, CycleRef{es, false}));
    }
}

TEST_CASE("every edge of k6 lies on a noncontractible 3-cycle") {
    EmbeddedGraph g = k6_projective();
    std::vector<char> covered(g.edge_count(), 0);
    for (const auto& cyc : all_cycles(g)) {
        if (cyc.size() != 3) continue;
        if (cycle_sign(g, cyc) < 0)
            for (int e : cyc) covered[e] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e) CHECK(covered[e] == 1);
}

TEST_CASE("edge width of k6 is 3 and sphere inputs are rejected") {
    CHECK(edge_width(k6_projective()) == 3);
    CHECK_THROWS_AS(edge_width(k4()), DomainError);
}

TEST_CASE("shortest noncontractible cycle really is noncontractible") {
    EmbeddedGraph g = k6_projective();
    CycleRef c = shortest_noncontractible_cycle(g);
    CHECK(c.edges.size() == 3);
    CHECK_FALSE(is_contractible(g, c));
}

TEST_CASE("bipartiteness probe") {
    auto part = is_bipartite(four_cycle());
    REQUIRE(part.has_value());
    int zeros = 0;
    for (auto c : *part) zeros += c == 0;
    CHECK(zeros == 2);
    CHECK_FALSE(is_bipartite(k6_projective()).has_value());
    CHECK(is_bipartite(cube_graph()).has_value());
}

TEST_CASE("double cover of the projective plane is a sphere") {
    EmbeddedGraph g = k6_projective();
    DoubleCover dc = double_cover(g);
    CHECK(dc.cover.vertex_count == 12);
    CHECK(dc.cover.edge_count() == 30);
    CHECK(euler_characteristic(dc.cover) == 2);
    CHECK(is_orientable(dc.cover));
    // the cover of the triangular embedding of K6 is the icosahedron
    FaceList fl = trace_faces(dc.cover);
    CHECK(fl.count() == 20);
    for (const auto& f : fl.faces) CHECK(f.length() == 3);
    for (int v = 0; v < dc.cover.vertex_count; ++v) CHECK(dc.cover.degree(v) == 5);
}

TEST_CASE("pem round trip is bit exact") {
    for (EmbeddedGraph g : {k6_projective(), k4(), octahedron(), four_cycle()}) {
        std::string text = write_pem(g);
        EmbeddedGraph h = read_pem(text);
        CHECK(write_pem(h) == text);
        CHECK(isomorphic_embeddings(g, h));
        CHECK(validate(h).valid());
    }
}

TEST_CASE("pem parser rejects malformed input") {
    CHECK_THROWS_AS(read_pem("surface pp\n"), StructureError);
    CHECK_THROWS_AS(read_pem("surface klein\nvertices 2\n"), StructureError);
    // duplicate dart
    CHECK_THROWS_AS(read_pem("surface sphere\nvertices 2\nedge 0 0 1 +\nrot 0 0.0 0.0\nrot 1 0.1\n"),
                    StructureError);
    // undeclared vertex in edge
    CHECK_THROWS_AS(read_pem("surface sphere\nvertices 2\nedge 0 0 5 +\nrot 0 0.0\nrot 1 0.1\n"),
                    StructureError);
    // missing rotation line
    CHECK_THROWS_AS(read_pem("surface sphere\nvertices 2\nedge 0 0 1 +\nrot 0 0.0\n"), StructureError);
}

TEST_CASE("mono face counting") {
    EmbeddedGraph g = k4();
    Coloring all_black{std::vector<uint8_t>(4, BLACK)};
    CHECK(monochromatic_faces(g, all_black).size() == 4);
    Coloring c = coloring_from_string("BBWW");
    CHECK(monochromatic_faces(g, c).empty());
    CHECK(is_weak(g, c));
}
