#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppquad/factor_match.hpp"
#include "ppquad/fixtures.hpp"

using namespace ppquad;

namespace {

// every coloring of an n-vertex graph, first vertex fixed black
std::vector<Coloring> all_colorings(int n) {
    std::vector<Coloring> out;
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Coloring c;
        c.color.assign(n, BLACK);
        for (int v = 1; v < n; ++v) c.color[v] = (mask >> (v - 1)) & 1;
        out.push_back(c);
    }
    return out;
}

} // namespace

TEST_CASE("perfect matchings of the K4 dual") {
    auto ms = all_perfect_matchings(dual(k4()));
    CHECK(ms.size() == 3);
    for (const auto& m : ms) CHECK(m.size() == 2);
    auto limited = all_perfect_matchings(dual(k4()), 1);
    CHECK(limited.size() == 1);
}

TEST_CASE("the K6 dual has exactly six perfect matchings") {
    // regression value: the dual is the Petersen graph
    auto ms = all_perfect_matchings(dual(k6_projective()));
    CHECK(ms.size() == 6);
    for (const auto& m : ms) CHECK(m.size() == 5);
}

TEST_CASE("matching through a required edge") {
    DualGraph d4 = dual(k4());
    for (int e = 0; e < d4.edge_count(); ++e) {
        EdgeSubset m = matching_through(d4, e);
        CHECK(m.contains(e));
        CHECK(m.size() == 2);
    }
    DualGraph dcube = dual(octahedron());
    for (int e = 0; e < dcube.edge_count(); ++e) {
        EdgeSubset m = matching_through(dcube, e);
        CHECK(m.contains(e));
        CHECK(m.size() == 4);
    }
}

TEST_CASE("factor enumeration with allowed degrees") {
    DualGraph d = dual(k4());
    int pm_count = 0;
    enumerate_factors(d, {1}, [&](const EdgeSubset&) {
        pm_count++;
        return true;
    });
    CHECK(pm_count == 3);
    int odd_count = 0;
    enumerate_factors(d, {1, 3}, [&](const EdgeSubset& f) {
        CHECK(is_factor_with_degrees(d, f, {1, 3}));
        odd_count++;
        return true;
    });
    CHECK(odd_count > pm_count);
}

TEST_CASE("removing a dual perfect matching leaves a quadrangulation") {
    EmbeddedGraph t = k4();
    auto ms = all_perfect_matchings(dual(t));
    REQUIRE(!ms.empty());
    auto q = quadrangulation_from(t, ms[0]);
    CHECK(q.graph.vertex_count == 4);
    CHECK(q.graph.edge_count() == 4);
    CHECK(is_quadrangulation(q.graph));
    CHECK(is_bipartite(q.graph).has_value());

    EmbeddedGraph oc = octahedron();
    auto mso = all_perfect_matchings(dual(oc));
    REQUIRE(!mso.empty());
    auto qo = quadrangulation_from(oc, mso[0]);
    CHECK(trace_faces(qo.graph).count() == 4);
    CHECK(is_quadrangulation(qo.graph));

    // two deleted edges on one face is not a matching
    DualGraph d = dual(t);
    int f0 = d.ends[0][0];
    int other = -1;
    for (int e = 1; e < d.edge_count(); ++e)
        if (d.ends[e][0] == f0 || d.ends[e][1] == f0) other = e;
    REQUIRE(other > 0);
    CHECK_THROWS_AS(quadrangulation_from(t, EdgeSubset::of({0, other})), DomainError);
}

TEST_CASE("parity criterion matches actual bipartiteness") {
    // sphere: always true
    EmbeddedGraph t = k4();
    for (const auto& m : all_perfect_matchings(dual(t))) CHECK(parity_bipartite(t, m));

    // K6: no dual perfect matching passes, and the quadrangulations are odd
    EmbeddedGraph g = k6_projective();
    auto ms = all_perfect_matchings(dual(g));
    REQUIRE(ms.size() == 6);
    for (const auto& m : ms) {
        CHECK_FALSE(parity_bipartite(g, m));
        auto q = quadrangulation_from(g, m);
        CHECK_FALSE(is_bipartite(q.graph).has_value());
        // the noncontractible cycles of the quadrangulation are all odd
        CycleRef c = shortest_noncontractible_cycle(q.graph);
        CHECK(c.edges.size() % 2 == 1);
    }
}

TEST_CASE("monochromatic edges form a dual {1,3}-factor satisfying the parity rule") {
    for (EmbeddedGraph t : {k4(), octahedron(), k6_projective()}) {
        DualGraph d = dual(t);
        for (const auto& c : all_colorings(t.vertex_count)) {
            EdgeSubset f = coloring_to_factor(t, c);
            CHECK(is_factor_with_degrees(d, f, {1, 3}));
            auto bip = is_bipartite(restrict_to_edges(
                t,
                [&] {
                    std::vector<char> keep(t.edge_count(), 1);
                    for (int e : f.ids) keep[e] = 0;
                    return keep;
                }(),
                t.surface));
            CHECK(bip.has_value());
            CHECK(parity_bipartite(t, f) == bip.has_value());
        }
    }
}

TEST_CASE("weak colorings give dual perfect matchings, near-weak one triple point") {
    EmbeddedGraph oc = octahedron();
    Coloring weak = coloring_from_string("BWBWBW");
    REQUIRE(is_weak(oc, weak));
    EdgeSubset f = coloring_to_factor(oc, weak);
    for (int k : dual_degrees(dual(oc), f)) CHECK(k == 1);

    EmbeddedGraph t = k4();
    Coloring nw = coloring_from_string("BBBW");
    REQUIRE(is_near_weak(t, nw));
    EdgeSubset fn = coloring_to_factor(t, nw);
    auto deg = dual_degrees(dual(t), fn);
    CHECK(std::count(deg.begin(), deg.end(), 3) == 1);
    CHECK(std::count(deg.begin(), deg.end(), 1) == static_cast<int>(deg.size()) - 1);
}

TEST_CASE("factor to coloring round trip reproduces the monochromatic faces") {
    for (EmbeddedGraph t : {k4(), octahedron()}) {
        for (const auto& c : all_colorings(t.vertex_count)) {
            EdgeSubset f = coloring_to_factor(t, c);
            Coloring c2 = factor_to_coloring(t, f);
            CHECK(monochromatic_faces(t, c) == monochromatic_faces(t, c2));
        }
    }
    CHECK_THROWS_AS(factor_to_coloring(k6_projective(), EdgeSubset{}), DomainError);
}

TEST_CASE("maximum bipartite subgraph of K6 has nine edges") {
    MaxCutResult r = max_bipartite_subgraph(k6_projective());
    CHECK(r.size == 9);
    CHECK(r.size == (2 * 15) / 3 - 1);
    CHECK(3 * r.size < 2 * 15); // strictly below two thirds
    // witness is a valid cut of that size
    int cut = 0;
    EmbeddedGraph g = k6_projective();
    for (const Edge& e : g.edges) cut += r.part[e.u] != r.part[e.v];
    CHECK(cut == 9);
    CHECK(r.part[0] == BLACK);
    CHECK_THROWS_AS(max_bipartite_subgraph(cube_graph()), DomainError);
}

TEST_CASE("minimum parity factor complements the maximum bipartite subgraph") {
    // removing a smallest {1,3}-factor that satisfies the parity rule leaves
    // a largest bipartite subgraph
    EmbeddedGraph g = k6_projective();
    DualGraph d = dual(g);
    int best = g.edge_count() + 1;
    enumerate_factors(d, {1, 3}, [&](const EdgeSubset& f) {
        if (parity_bipartite(g, f)) best = std::min(best, f.size());
        return true;
    });
    MaxCutResult mc = max_bipartite_subgraph(g);
    CHECK(best == g.edge_count() - mc.size);
    CHECK(best == 6); // one K_{1,3} plus a matching: (3 + (f-1)) / 2 = n
}

TEST_CASE("bicritical duals: deleting any two vertices leaves a perfect matching") {
    // nonbipartite essentially 4-edge-connected cubic duals
    for (EmbeddedGraph g : {k4(), k6_projective()}) {
        DualGraph d = dual(g);
        REQUIRE_FALSE(dual_is_bipartite(d));
        for (int u = 0; u < d.face_count; ++u)
            for (int v = u + 1; v < d.face_count; ++v) {
                // match inside the reduced vertex set
                std::vector<char> alive(d.face_count, 1);
                alive[u] = alive[v] = 0;
                std::function<bool(std::vector<char>&)> solve = [&](std::vector<char>& a) -> bool {
                    int x = -1;
                    for (int i = 0; i < d.face_count; ++i)
                        if (a[i]) {
                            x = i;
                            break;
                        }
                    if (x < 0) return true;
                    for (int e = 0; e < d.edge_count(); ++e) {
                        int p = d.ends[e][0], q = d.ends[e][1];
                        if (p == q) continue;
                        if (p != x && q != x) continue;
                        int y = p == x ? q : p;
                        if (!a[y]) continue;
                        a[x] = a[y] = 0;
                        if (solve(a)) return true;
                        a[x] = a[y] = 1;
                    }
                    return false;
                };
                CHECK(solve(alive));
            }
    }
}

TEST_CASE("closed-neighborhood deletion in the bipartite cube dual keeps a matching") {
    DualGraph d = dual(octahedron());
    std::vector<uint8_t> cls;
    REQUIRE(dual_is_bipartite(d, &cls));
    auto adj = d.adjacency();
    for (int x = 0; x < d.face_count; ++x)
        for (int y = 0; y < d.face_count; ++y) {
            if (cls[x] != 0 || cls[y] != 1) continue;
            std::vector<char> alive(d.face_count, 1);
            alive[x] = alive[y] = 0;
            for (auto [w, e] : adj[x]) alive[w] = 0;
            for (auto [w, e] : adj[y]) alive[w] = 0;
            std::function<bool()> solve = [&]() -> bool {
                int s = -1;
                for (int i = 0; i < d.face_count; ++i)
                    if (alive[i]) {
                        s = i;
                        break;
                    }
                if (s < 0) return true;
                for (int e = 0; e < d.edge_count(); ++e) {
                    int p = d.ends[e][0], q = d.ends[e][1];
                    if (p != s && q != s) continue;
                    int t = p == s ? q : p;
                    if (t == s || !alive[t]) continue;
                    alive[s] = alive[t] = 0;
                    if (solve()) return true;
                    alive[s] = alive[t] = 1;
                }
                return false;
            };
            CHECK(solve());
        }
}
