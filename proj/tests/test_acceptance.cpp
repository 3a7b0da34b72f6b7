// Acceptance suite: one case per criterion, each printing a PASS/FAIL line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <set>

#include "ppquad/coloring_construct.hpp"
#include "ppquad/decider.hpp"
#include "ppquad/harness.hpp"
#include "ppquad/quasi_eulerian.hpp"
#include "ppquad/reducer.hpp"

using namespace ppquad;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int id, const char* name, bool ok, double secs) {
    std::printf("ACCEPTANCE %2d %-28s %s (%.2fs)\n", id, name, ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
}

int sweep_max_n() {
    return std::min(enumeration_budget(), 8);
}

std::vector<EmbeddedGraph> sweep_instances() {
    std::vector<EmbeddedGraph> out;
    for (int n = 6; n <= sweep_max_n(); ++n)
        for (const auto& g : pp_triangulations(n)) out.push_back(g);
    return out;
}

// plane corpus for the quasi-Eulerian agreement sweep, n <= 9
std::vector<EmbeddedGraph> plane_corpus() {
    std::vector<EmbeddedGraph> out{k4(), octahedron(), k4_subdivided_face()};
    EmbeddedGraph oc = octahedron();
    FaceTwoColoring psi = face_2coloring(oc);
    int red2 = -1, blue = -1;
    for (int f = 1; f < 8; ++f) {
        if (psi.rb[f] == psi.rb[0] && red2 < 0) red2 = f;
        if (psi.rb[f] != psi.rb[0] && blue < 0) blue = f;
    }
    out.push_back(paste(oc, red2, k4(), 0).graph);  // n = 7
    out.push_back(paste(oc, blue, k4(), 0).graph);  // n = 7
    out.push_back(paste(oc, blue, oc, 0).graph);    // n = 9
    out.push_back(paste(oc, red2, oc, 0).graph);    // n = 9
    out.push_back(paste(k4(), 0, k4(), 0).graph);   // n = 5
    return out;
}

} // namespace

TEST_CASE("criterion 1: K6 verdict") {
    Stopwatch sw;
    bool ok = true;
    ok &= decide_sbq(k6_projective()).verdict == Verdict::NoSbq;
    ok &= !weak_oracle(k6_projective());
    report(1, "k6 verdict", ok, sw.seconds());
    CHECK(ok);
    CHECK(sw.seconds() < 1.0);
}

TEST_CASE("criterion 2: K6 maximum bipartite subgraph") {
    Stopwatch sw;
    MaxCutResult r = max_bipartite_subgraph(k6_projective());
    bool ok = r.size == 9 && r.size == (2 * 15) / 3 - 1;
    report(2, "k6 max bipartite subgraph", ok, sw.seconds());
    CHECK(ok);
    CHECK(sw.seconds() < 1.0);
}

TEST_CASE("criterion 3: oracle equivalence over the enumeration") {
    Stopwatch sw;
    bool ok = true;
    int count = 0;
    for (const auto& g : sweep_instances()) {
        bool verdict = decide_sbq(g).verdict == Verdict::HasSbq;
        bool sbq = sbq_oracle(g);
        bool weak = weak_oracle(g);
        if (verdict != sbq || verdict != weak) ok = false;
        count++;
    }
    if (sweep_max_n() >= 8) ok &= count >= 20; // the full catalog
    report(3, "oracle equivalence", ok, sw.seconds());
    CHECK(ok);
    CHECK(sw.seconds() < 600.0);
}

TEST_CASE("criterion 4: parity criterion vs bipartiteness") {
    Stopwatch sw;
    bool ok = true;
    for (const auto& g : sweep_instances()) {
        DualGraph d = dual(g);
        perfect_matchings(d, [&](const EdgeSubset& m) {
            auto q = quadrangulation_from(g, m);
            if (parity_bipartite(g, m) != is_bipartite(q.graph).has_value()) ok = false;
            return ok;
        });
    }
    report(4, "parity theorem sweep", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 5: bipartite subgraph bound") {
    Stopwatch sw;
    bool ok = true;
    for (const auto& g : sweep_instances()) {
        MaxCutResult mc = max_bipartite_subgraph(g);
        int m = g.edge_count();
        if (3 * mc.size < 2 * m - 3) ok = false;
        bool has = decide_sbq(g).verdict == Verdict::HasSbq;
        if ((3 * mc.size == 2 * m) != has) ok = false;
        BoundResult b = bipartite_subgraph_bound(g);
        if (3 * b.size < 2 * m - 3) ok = false;
        if (b.size > mc.size) ok = false;
    }
    report(5, "two-thirds bound", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 6: quasi-Eulerian recognizer vs oracle") {
    Stopwatch sw;
    bool ok = true;
    for (const auto& t : plane_corpus()) {
        int faces = trace_faces(t).count();
        for (int f = 0; f < faces; ++f)
            if (is_quasi_eulerian(t, f).has_value() != qe_oracle(t, f)) ok = false;
    }
    report(6, "quasi-eulerian agreement", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 7: coloring constructors") {
    Stopwatch sw;
    bool ok = true;
    // weak extensions: zero monochromatic faces
    for (EmbeddedGraph t : {k4(), octahedron()}) {
        FaceList fl = trace_faces(t);
        for (const auto& f : fl.faces) {
            std::vector<int> fv;
            for (int i = 0; i < 3; ++i) fv.push_back(t.dart_vertex(f.dart_at(i)));
            PartialColoring part = empty_partial(t.vertex_count);
            part[fv[0]] = BLACK;
            part[fv[1]] = WHITE;
            part[fv[2]] = WHITE;
            ok &= monochromatic_faces(t, extend_weak(t, f.id, part)).empty();
        }
    }
    // apex construction: zero
    {
        EmbeddedGraph w = wheel4();
        FaceList fl = trace_faces(w);
        int quad = -1;
        for (const auto& f : fl.faces)
            if (f.length() == 4) quad = f.id;
        NearTriangulation nt{w, quad};
        ok &= monochromatic_faces(w, bwbw_coloring(nt)).empty();
        NearTriangulation plain{four_cycle(), 0};
        ok &= monochromatic_faces(plain.graph, bwbw_coloring(plain)).empty();
        // identification construction: at most one
        BbbwResult bb = bbbw_coloring(nt);
        ok &= monochromatic_faces(w, bb.coloring).size() <= 1;
        BbbwResult bp = bbbw_coloring(plain);
        ok &= monochromatic_faces(plain.graph, bp.coloring).size() <= 1;
    }
    // broken-clique construction: zero
    {
        EmbeddedGraph g = k6_minus_edge_filled();
        ok &= monochromatic_faces(g, x_subgraph_coloring(g)).empty();
        auto xs = x_pattern_instances();
        for (const auto& z : xs) ok &= monochromatic_faces(z, x_subgraph_coloring(z)).empty();
    }
    // monochromatic-face extensions: exactly one / exactly two
    {
        for (int f = 0; f < 4; ++f)
            ok &= monochromatic_faces(k4(), extend_mono_to_near_weak(k4(), f, BLACK)).size() == 1;
        for (int f = 0; f < 8; ++f)
            ok &= monochromatic_faces(octahedron(), extend_mono_to_two_mono(octahedron(), f, BLACK))
                      .size() == 2;
        for (const auto& t : plane_corpus()) {
            FaceList fl = trace_faces(t);
            for (int f = 0; f < fl.count(); ++f) {
                if (is_quasi_eulerian(t, f))
                    ok &= monochromatic_faces(t, extend_mono_to_two_mono(t, f, BLACK)).size() == 2;
                else
                    ok &= monochromatic_faces(t, extend_mono_to_near_weak(t, f, WHITE)).size() == 1;
            }
        }
    }
    report(7, "coloring constructors", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 8: lifting soundness") {
    Stopwatch sw;
    bool ok = true;
    for (const auto& g : sweep_instances()) {
        for (const auto& spec : applicable_contractions(g)) {
            ContractionResult res = apply(g, spec);
            DualGraph dc = dual(res.graph);
            perfect_matchings(dc, [&](const EdgeSubset& mp) {
                EdgeSubset m = lift_matching(g, res, mp);
                auto q = quadrangulation_from(g, m);
                if (!is_quadrangulation(q.graph)) ok = false;
                bool before = is_bipartite(q.graph).has_value();
                bool after = is_bipartite(quadrangulation_from(res.graph, mp).graph).has_value();
                if (before != after) ok = false;
                return ok;
            });
        }
    }
    report(8, "lifting soundness", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 9: reducible configurations") {
    Stopwatch sw;
    bool ok = true;
    for (const auto& g : sweep_instances()) {
        try {
            find_reducible(g);
        } catch (const TheoremViolation&) {
            ok = false;
        }
        int defsum = 0;
        for (int v = 0; v < g.vertex_count; ++v) defsum += 6 - g.degree(v);
        if (defsum != 6) ok = false;
    }
    report(9, "reducible configurations", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 10: even triangulations have even monochromatic counts") {
    Stopwatch sw;
    bool ok = true;
    std::vector<EmbeddedGraph> evens{octahedron()};
    for (const auto& g : sweep_instances())
        if (is_eulerian(g)) evens.push_back(g);
    for (const auto& g : evens) {
        FaceList fl = trace_faces(g);
        Coloring c;
        c.color.assign(g.vertex_count, BLACK);
        for (uint64_t mask = 0; mask < (1ull << (g.vertex_count - 1)); ++mask) {
            for (int v = 1; v < g.vertex_count; ++v) c.color[v] = (mask >> (v - 1)) & 1;
            if (monochromatic_faces(g, fl, c).size() % 2 != 0) ok = false;
        }
    }
    if (sweep_max_n() >= 8) ok &= evens.size() >= 2; // the full catalog has even instances
    report(10, "even monochromatic parity", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("multigraph shortcuts agree with the oracle across contraction outputs") {
    // not a numbered criterion: stresses the loop and 2-cycle witness paths
    Stopwatch sw;
    bool ok = true;
    int with_loops = 0, with_doubles = 0;
    for (const auto& g : sweep_instances()) {
        for (const auto& spec : applicable_contractions(g)) {
            EmbeddedGraph h = apply(g, spec).graph;
            with_loops += !noncontractible_loops(h).empty();
            with_doubles += !noncontractible_2cycles(h).empty();
            bool verdict = decide_sbq(h).verdict == Verdict::HasSbq;
            if (verdict != sbq_oracle(h)) ok = false;
        }
    }
    if (sweep_max_n() >= 8) ok &= with_loops > 0 && with_doubles > 0;
    report(0, "multigraph shortcut sweep", ok, sw.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 11: obstruction families") {
    Stopwatch sw;
    bool ok = true;
    auto pool = quasi_eulerian_guest_pool();
    std::vector<std::vector<std::pair<int, EmbeddedGraph>>> families;
    for (int f = 0; f < 10; ++f) families.push_back({{f, pool[f % pool.size()]}});
    for (int f = 1; f < 10; ++f)
        families.push_back({{0, pool[0]}, {f, pool[(f + 1) % pool.size()]}});
    {
        std::vector<std::pair<int, EmbeddedGraph>> all;
        for (int f = 0; f < 10; ++f) all.push_back({f, pool[f % pool.size()]});
        families.push_back(all);
    }
    int built = 0;
    for (const auto& fam : families) {
        EmbeddedGraph g = paste_family(fam);
        Certificate cert = decide_sbq(g);
        if (cert.verdict != Verdict::NoSbq) ok = false;
        if (!verify_certificate(g, cert)) ok = false;

        // flipping the first guest to K4 breaks every quasi-Eulerian region
        auto flipped = fam;
        flipped[0].second = k4();
        EmbeddedGraph g2 = paste_family(flipped);
        Certificate cert2 = decide_sbq(g2);
        if (cert2.verdict != Verdict::HasSbq) ok = false;
        if (!verify_certificate(g2, cert2)) ok = false;
        if (!is_weak(g2, *cert2.coloring)) ok = false;
        built++;
    }
    ok &= built >= 20;
    report(11, "obstruction families", ok, sw.seconds());
    CHECK(ok);
}
