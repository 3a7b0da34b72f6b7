#include "ppquad/reducer.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace ppquad {

namespace {

// --- generic star contraction ------------------------------------------------

struct ZipPlan {
    std::vector<int> pivots;
    std::vector<int> walk;       // boundary vertices, cyclic
    std::vector<int> walk_edges; // walk_edges[i] joins walk[i], walk[i+1]
    std::vector<std::vector<int>> groups;   // identified walk positions
    std::vector<std::array<int, 2>> merges; // parallel ring pairs to unify
};

bool is_spoke(const EmbeddedGraph& g, const std::vector<char>& is_pivot, int e) {
    return is_pivot[g.edges[e].u] || is_pivot[g.edges[e].v];
}

// flips vertices so every spoke not touching a skipped vertex gets sign +1;
// vertices visited twice by the boundary walk are skipped (their spoke signs
// cancel out of every merge and pinch condition)
void normalize_star_signs(EmbeddedGraph& g, const std::vector<char>& is_pivot,
                          const std::vector<char>& skip_vertex) {
    std::vector<int> o(g.vertex_count, -1);
    int root = -1;
    for (int v = 0; v < g.vertex_count && root < 0; ++v)
        if (is_pivot[v]) root = v;
    o[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (DartId d : g.rotation[v]) {
            int e = edge_of(d);
            if (!is_spoke(g, is_pivot, e) || g.edges[e].is_loop()) continue;
            int w = g.other_end(e, v);
            if (skip_vertex[w] || skip_vertex[v]) continue;
            int want = o[v] ^ (g.edges[e].sign < 0 ? 1 : 0);
            if (o[w] < 0) {
                o[w] = want;
                q.push(w);
            } else if (o[w] != want) {
                throw StructureError("star signs cannot be normalized");
            }
        }
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (o[v] == 1) flip_vertex(g, v);
}

ContractionResult zip_contract(const EmbeddedGraph& input, const ZipPlan& plan,
                               const ContractionSpec& spec) {
    EmbeddedGraph g = input;
    std::vector<char> is_pivot(g.vertex_count, 0);
    for (int p : plan.pivots) is_pivot[p] = 1;
    const int L = static_cast<int>(plan.walk.size());
    std::vector<int> occurrences(g.vertex_count, 0);
    for (int w : plan.walk) occurrences[w]++;
    std::vector<char> skip_vertex(g.vertex_count, 0);
    for (int v = 0; v < g.vertex_count; ++v) skip_vertex[v] = occurrences[v] >= 2;
    normalize_star_signs(g, is_pivot, skip_vertex);

    // hole corners at pinched positions: the contiguous block of spoke darts
    std::vector<std::vector<DartId>> sector(L); // non-spoke darts, clockwise from hole_to
    std::vector<char> pinched_pos(L, 0);
    for (const auto& grp : plan.groups)
        for (int pos : grp) pinched_pos[pos] = 1;
    for (int i = 0; i < L; ++i) {
        if (!pinched_pos[i]) continue;
        int w = plan.walk[i];
        if (occurrences[w] != 1) throw StructureError("pinched walk vertex visited twice");
        const auto& rot = g.rotation[w];
        int deg = static_cast<int>(rot.size());
        std::vector<char> sp(deg, 0);
        int spoke_count = 0;
        for (int k = 0; k < deg; ++k) {
            sp[k] = is_spoke(g, is_pivot, edge_of(rot[k]));
            spoke_count += sp[k];
        }
        if (spoke_count == 0 || spoke_count == deg)
            throw StructureError("walk vertex without a proper spoke block");
        // find the start of the non-spoke block
        int start = -1;
        for (int k = 0; k < deg; ++k)
            if (!sp[k] && sp[(k + deg - 1) % deg]) {
                if (start >= 0) throw StructureError("spoke darts are not contiguous");
                start = k;
            }
        for (int k = 0; k < deg - spoke_count; ++k) sector[i].push_back(rot[(start + k) % deg]);
    }

    // vertex identifications
    std::vector<int> target(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) target[v] = v;
    for (const auto& grp : plan.groups) {
        int tgt = g.vertex_count;
        for (int pos : grp) tgt = std::min(tgt, plan.walk[pos]);
        for (int pos : grp) target[plan.walk[pos]] = tgt;
    }

    std::vector<char> drop_edge(g.edge_count(), 0);
    std::vector<int> merged_into(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (is_spoke(g, is_pivot, e)) drop_edge[e] = 1;
    for (auto [a, b] : plan.merges) {
        int keep = std::min(a, b), drop = std::max(a, b);
        drop_edge[drop] = 1;
        merged_into[drop] = keep;
    }

    // assemble
    ContractionResult out;
    out.spec = spec;
    out.vertex_map.assign(g.vertex_count, -1);
    std::vector<int> new_id(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (is_pivot[v] || target[v] != v) continue;
        new_id[v] = out.graph.vertex_count++;
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (!is_pivot[v]) out.vertex_map[v] = new_id[target[v]];

    out.edge_map.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (drop_edge[e] && merged_into[e] < 0) continue; // spoke, vanishes
        int rep = merged_into[e] >= 0 ? merged_into[e] : e;
        if (out.edge_map[rep] < 0) {
            int u = out.vertex_map[g.edges[rep].u];
            int v2 = out.vertex_map[g.edges[rep].v];
            out.edge_map[rep] = out.graph.add_edge(u, v2, g.edges[rep].sign);
        }
        out.edge_map[e] = out.edge_map[rep];
    }
    for (auto [a, b] : plan.merges) {
        if (out.vertex_map[g.edges[a].u] + out.vertex_map[g.edges[a].v] !=
            out.vertex_map[g.edges[b].u] + out.vertex_map[g.edges[b].v])
            throw StructureError("merged ring pair with different endpoints");
        if (g.edges[a].sign != g.edges[b].sign)
            throw StructureError("merged ring pair with different signs");
    }

    out.graph.rotation.assign(out.graph.vertex_count, {});
    auto push_darts = [&](int nv, const std::vector<DartId>& darts) {
        for (DartId d : darts) {
            int e = edge_of(d);
            if (drop_edge[e] && merged_into[e] < 0) continue; // spoke, vanishes
            if (merged_into[e] >= 0) continue;                // dropped half of a merged pair
            out.graph.rotation[nv].push_back(dart(out.edge_map[e], d & 1));
        }
    };
    std::vector<char> pinched_vertex(g.vertex_count, 0);
    for (const auto& grp : plan.groups)
        for (int pos : grp) pinched_vertex[plan.walk[pos]] = 1;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (is_pivot[v] || pinched_vertex[v]) continue;
        // non-pinched walk vertices keep their filtered rotation order
        push_darts(out.vertex_map[v], g.rotation[v]);
    }
    for (const auto& grp : plan.groups) {
        int nv = out.vertex_map[plan.walk[grp[0]]];
        for (int pos : grp) push_darts(nv, sector[pos]);
    }

    for (const Edge& e : out.graph.edges)
        if (e.is_loop()) out.graph.allow_noncontractible_loops = true;
    out.graph.surface = input.surface;

    auto rep = validate(out.graph);
    if (!rep.valid()) throw StructureError("contraction produced invalid graph: " + rep.joined());
    if (!is_triangulation(out.graph))
        throw StructureError("contraction did not preserve the triangulation property");
    return out;
}

// --- labeling helpers ----------------------------------------------------------

int face_at_corner(const EmbeddedGraph& g, const FaceList& fl, int v, int pos) {
    int deg = g.degree(v);
    return fl.face_at(g.rotation[v][(pos + 1) % deg], +1);
}

int third_edge_of_face(const FaceList& fl, int f, int e1, int e2) {
    const FaceWalk& fw = fl.faces[f];
    if (fw.length() != 3) throw StructureError("expected a triangular face");
    int other = -1;
    bool saw1 = false, saw2 = false;
    for (int i = 0; i < 3; ++i) {
        int e = edge_of(fw.dart_at(i));
        if (e == e1 && !saw1)
            saw1 = true;
        else if (e == e2 && !saw2)
            saw2 = true;
        else
            other = e;
    }
    if (!saw1 || !saw2 || other < 0) throw StructureError("face does not contain the two spokes");
    return other;
}

void require_noncontractible_chords(const EmbeddedGraph& g, int a, int b, int via_spoke_a,
                                    int via_spoke_b, const char* what) {
    for (int chord : edges_between(g, a, b)) {
        std::vector<int> cyc{chord, via_spoke_a, via_spoke_b};
        if (cycle_sign(g, cyc) > 0)
            throw DomainError(std::string(what) + ": identified neighbors joined by an edge whose triangle "
                                                  "through the pivot is contractible");
    }
}

ContractionResult apply_c4(const EmbeddedGraph& g, const ContractionSpec& spec) {
    int v = spec.pivot;
    if (v < 0 || v >= g.vertex_count || g.degree(v) != 4)
        throw DomainError("c4: pivot must have degree 4");
    std::vector<int> nbr(4), spoke(4);
    for (int i = 0; i < 4; ++i) {
        spoke[i] = edge_of(g.rotation[v][i]);
        nbr[i] = g.other_end(spoke[i], v);
    }
    std::set<int> distinct(nbr.begin(), nbr.end());
    if (distinct.size() != 4 || distinct.count(v)) throw DomainError("c4: neighbors are not distinct");
    if (spec.at.size() != 2) throw DomainError("c4: need two identification targets");
    std::set<int> at(spec.at.begin(), spec.at.end());
    int shift;
    if (at == std::set<int>{nbr[1], nbr[3]})
        shift = 0;
    else if (at == std::set<int>{nbr[0], nbr[2]})
        shift = 1;
    else
        throw DomainError("c4: identification targets must be rotation-opposite neighbors");
    // labels v1..v4 with the identified pair at positions 1 and 3
    std::vector<int> lab(4), lspoke(4);
    for (int i = 0; i < 4; ++i) {
        lab[i] = nbr[(i + shift) % 4];
        lspoke[i] = spoke[(i + shift) % 4];
    }
    require_noncontractible_chords(g, lab[1], lab[3], lspoke[1], lspoke[3], "c4");

    FaceList fl = trace_faces(g);
    ZipPlan plan;
    plan.pivots = {v};
    plan.walk = lab;
    for (int i = 0; i < 4; ++i) {
        int f = face_at_corner(g, fl, v, (i + shift) % 4);
        plan.walk_edges.push_back(third_edge_of_face(fl, f, lspoke[i], lspoke[(i + 1) % 4]));
    }
    plan.groups = {{1, 3}};
    plan.merges = {{{plan.walk_edges[3], plan.walk_edges[0]}}, {{plan.walk_edges[1], plan.walk_edges[2]}}};
    ContractionResult out = zip_contract(g, plan, spec);
    out.spokes = lspoke;
    out.ring = plan.walk_edges;
    return out;
}

ContractionResult apply_c6(const EmbeddedGraph& g, const ContractionSpec& spec) {
    int v = spec.pivot;
    if (v < 0 || v >= g.vertex_count || g.degree(v) != 6)
        throw DomainError("c6: pivot must have degree 6");
    std::vector<int> nbr(6), spoke(6);
    for (int i = 0; i < 6; ++i) {
        spoke[i] = edge_of(g.rotation[v][i]);
        nbr[i] = g.other_end(spoke[i], v);
    }
    std::set<int> distinct(nbr.begin(), nbr.end());
    if (distinct.size() != 6 || distinct.count(v)) throw DomainError("c6: neighbors are not distinct");
    if (spec.at.size() != 3) throw DomainError("c6: need three identification targets");
    std::set<int> at(spec.at.begin(), spec.at.end());
    int shift;
    if (at == std::set<int>{nbr[1], nbr[3], nbr[5]})
        shift = 0;
    else if (at == std::set<int>{nbr[0], nbr[2], nbr[4]})
        shift = 1;
    else
        throw DomainError("c6: identification targets must be alternating neighbors");
    std::vector<int> lab(6), lspoke(6);
    for (int i = 0; i < 6; ++i) {
        lab[i] = nbr[(i + shift) % 6];
        lspoke[i] = spoke[(i + shift) % 6];
    }
    require_noncontractible_chords(g, lab[1], lab[3], lspoke[1], lspoke[3], "c6");
    require_noncontractible_chords(g, lab[1], lab[5], lspoke[1], lspoke[5], "c6");
    require_noncontractible_chords(g, lab[3], lab[5], lspoke[3], lspoke[5], "c6");

    FaceList fl = trace_faces(g);
    ZipPlan plan;
    plan.pivots = {v};
    plan.walk = lab;
    for (int i = 0; i < 6; ++i) {
        int f = face_at_corner(g, fl, v, (i + shift) % 6);
        plan.walk_edges.push_back(third_edge_of_face(fl, f, lspoke[i], lspoke[(i + 1) % 6]));
    }
    plan.groups = {{1, 3, 5}};
    plan.merges = {{{plan.walk_edges[5], plan.walk_edges[0]}},
                   {{plan.walk_edges[1], plan.walk_edges[2]}},
                   {{plan.walk_edges[3], plan.walk_edges[4]}}};
    ContractionResult out = zip_contract(g, plan, spec);
    out.spokes = lspoke;
    out.ring = plan.walk_edges;
    return out;
}

// labels for an adjacent 5-5 pair; mirrored reads v's rotation backwards
struct C55Labels {
    std::vector<int> ring_v;   // v1, v2, v3, v4, v5, v6
    std::vector<int> spokes;   // vv1..vv4, uv4, uv5, uv6, uv1, uv
    std::vector<int> walk_edges; // b0..b5
    int uv_edge = -1;
};

C55Labels c55_labels(const EmbeddedGraph& g, int v, int u, bool mirrored) {
    if (g.degree(v) != 5 || g.degree(u) != 5) throw DomainError("c55: both pivots must have degree 5");
    auto uv = edges_between(g, u, v);
    if (uv.size() != 1) throw DomainError("c55: pivots must be joined by exactly one edge");
    C55Labels lb;
    lb.uv_edge = uv[0];

    std::vector<DartId> rot = g.rotation[v];
    if (mirrored) std::reverse(rot.begin(), rot.end());
    int upos = -1;
    for (int i = 0; i < 5; ++i)
        if (edge_of(rot[i]) == lb.uv_edge) upos = i;
    std::vector<int> vspoke(4), vn(4);
    for (int i = 0; i < 4; ++i) {
        vspoke[i] = edge_of(rot[(upos + 1 + i) % 5]);
        vn[i] = g.other_end(vspoke[i], v);
    }
    int v1 = vn[0], v2 = vn[1], v3 = vn[2], v4 = vn[3];

    // v5, v6 around u via the faces along the u-v4 edge
    FaceList fl = trace_faces(g);
    DualGraph d = dual(g);
    auto other_face_vertex = [&](int e, const std::set<int>& not_these) {
        // third vertices of the two faces at e
        std::vector<int> out;
        for (int side = 0; side < 2; ++side) {
            const FaceWalk& f = fl.faces[d.ends[e][side]];
            for (int i = 0; i < f.length(); ++i) {
                int w = g.dart_vertex(f.dart_at(i));
                if (w != g.edges[e].u && w != g.edges[e].v) out.push_back(w);
            }
        }
        for (int w : out)
            if (!not_these.count(w)) return w;
        throw DomainError("c55: face structure around the pivots is degenerate");
    };
    auto uv4 = edges_between(g, u, v4);
    if (uv4.size() != 1) throw DomainError("c55: u and v4 must be joined by exactly one edge");
    int v5 = other_face_vertex(uv4[0], {v});
    auto uv5 = edges_between(g, u, v5);
    if (uv5.size() != 1) throw DomainError("c55: u and v5 must be joined by exactly one edge");
    int v6 = other_face_vertex(uv5[0], {v4});
    auto uv6 = edges_between(g, u, v6);
    if (uv6.size() != 1) throw DomainError("c55: u and v6 must be joined by exactly one edge");
    auto uv1 = edges_between(g, u, v1);
    if (uv1.size() != 1) throw DomainError("c55: u and v1 must be joined by exactly one edge");

    lb.ring_v = {v1, v2, v3, v4, v5, v6};
    lb.spokes = {vspoke[0], vspoke[1], vspoke[2], vspoke[3], uv4[0], uv5[0], uv6[0], uv1[0], lb.uv_edge};

    // boundary edges b0..b5 from the star faces
    auto face_third = [&](int e1, int e2) {
        // the face containing both e1 and e2 yields its third edge
        for (int side = 0; side < 2; ++side) {
            int f = d.ends[e1][side];
            const FaceWalk& fw = fl.faces[f];
            bool has2 = false;
            for (int i = 0; i < 3; ++i) has2 |= edge_of(fw.dart_at(i)) == e2;
            if (has2) return third_edge_of_face(fl, f, e1, e2);
        }
        throw DomainError("c55: expected star face is missing");
    };
    lb.walk_edges = {face_third(vspoke[0], vspoke[1]), face_third(vspoke[1], vspoke[2]),
                     face_third(vspoke[2], vspoke[3]), face_third(uv4[0], uv5[0]),
                     face_third(uv5[0], uv6[0]),       face_third(uv6[0], uv1[0])};
    return lb;
}

ContractionResult apply_c55(const EmbeddedGraph& g, const ContractionSpec& spec) {
    int v = spec.pivot, u = spec.second;
    if (v < 0 || u < 0) throw DomainError("c55: two pivots required");
    if (spec.at.size() != 4) throw DomainError("c55: need four identification targets");
    std::set<int> at(spec.at.begin(), spec.at.end());

    for (bool mirrored : {false, true}) {
        C55Labels lb = c55_labels(g, v, u, mirrored);
        const auto& r = lb.ring_v;
        if (at != std::set<int>{r[0], r[1], r[3], r[4]}) continue;
        std::set<int> dist(r.begin(), r.end());
        bool ok_distinct = dist.size() == 6 || (dist.size() == 5 && r[2] == r[5]);
        if (!ok_distinct || dist.count(u) || dist.count(v))
            throw DomainError("c55: ring vertices must be distinct except possibly v3 = v6");
        // identified pairs must be disjoint
        if (r[0] == r[4] || r[1] == r[3] || r[0] == r[1] || r[0] == r[3] || r[4] == r[1] ||
            r[4] == r[3])
            throw DomainError("c55: identification targets collide");
        require_noncontractible_chords(g, r[0], r[4], lb.spokes[7], lb.spokes[5], "c55"); // v1,v5 via u
        require_noncontractible_chords(g, r[1], r[3], lb.spokes[1], lb.spokes[3], "c55"); // v2,v4 via v

        ZipPlan plan;
        plan.pivots = {std::min(u, v), std::max(u, v)};
        plan.walk = r;
        plan.walk_edges = lb.walk_edges;
        plan.groups = {{0, 4}, {1, 3}};
        plan.merges = {{{lb.walk_edges[0], lb.walk_edges[3]}},
                       {{lb.walk_edges[1], lb.walk_edges[2]}},
                       {{lb.walk_edges[4], lb.walk_edges[5]}}};
        ContractionResult out = zip_contract(g, plan, spec);
        out.spokes = lb.spokes;
        out.ring = lb.walk_edges;
        return out;
    }
    throw DomainError("c55: identification targets do not match either form");
}

ContractionResult apply_v2rem(const EmbeddedGraph& g, const ContractionSpec& spec) {
    int w = spec.pivot;
    if (w < 0 || w >= g.vertex_count || g.degree(w) != 2)
        throw DomainError("v2rem: pivot must have degree 2");
    int e1 = edge_of(g.rotation[w][0]), e2 = edge_of(g.rotation[w][1]);
    if (e1 == e2) throw DomainError("v2rem: pivot lies on a loop");
    int w1 = g.other_end(e1, w), w2 = g.other_end(e2, w);
    if (w1 == w2) throw DomainError("v2rem: both neighbors coincide");
    // the two faces at w are bounded by two distinct parallel w1-w2 edges
    FaceList fl = trace_faces(g);
    DualGraph d = dual(g);
    std::set<int> rim;
    for (int side = 0; side < 2; ++side) {
        int f = d.ends[e1][side];
        const FaceWalk& fw = fl.faces[f];
        bool at_w = false;
        for (int i = 0; i < 3; ++i) at_w |= g.dart_vertex(fw.dart_at(i)) == w;
        if (!at_w) continue;
        rim.insert(third_edge_of_face(fl, f, e1, e2));
    }
    if (rim.size() != 2) throw DomainError("v2rem: the two faces at the pivot do not give two rim edges");
    auto it = rim.begin();
    int keep = *it++;
    int drop = *it;
    if (g.edges[keep].sign != g.edges[drop].sign)
        throw StructureError("v2rem: rim pair with different signs");

    ContractionResult out;
    out.spec = spec;
    out.spokes = {e1, e2};
    out.ring = {keep, drop};
    out.vertex_map.assign(g.vertex_count, -1);
    out.edge_map.assign(g.edge_count(), -1);
    EmbeddedGraph& h = out.graph;
    h.surface = g.surface;
    std::vector<int> new_vertex(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v)
        if (v != w) {
            new_vertex[v] = h.vertex_count++;
            out.vertex_map[v] = new_vertex[v];
        }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == e1 || e == e2 || e == drop) continue;
        out.edge_map[e] = h.add_edge(new_vertex[g.edges[e].u], new_vertex[g.edges[e].v], g.edges[e].sign);
    }
    out.edge_map[drop] = out.edge_map[keep];
    h.rotation.assign(h.vertex_count, {});
    for (int v = 0; v < g.vertex_count; ++v) {
        if (v == w) continue;
        for (DartId dd : g.rotation[v]) {
            int e = edge_of(dd);
            if (e == e1 || e == e2 || e == drop) continue;
            h.rotation[new_vertex[v]].push_back(dart(out.edge_map[e], dd & 1));
        }
    }
    for (const Edge& e : h.edges)
        if (e.is_loop()) h.allow_noncontractible_loops = true;
    auto repv = validate(h);
    if (!repv.valid()) throw StructureError("v2rem produced invalid graph: " + repv.joined());
    if (!is_triangulation(h)) throw StructureError("v2rem did not preserve the triangulation property");
    return out;
}

ContractionResult apply_v2add(const EmbeddedGraph& g, const ContractionSpec& spec) {
    TwoVertexAddition tv = add_two_vertex(g, spec.pivot);
    ContractionResult out;
    out.spec = spec;
    out.graph = tv.graph;
    out.vertex_map.resize(g.vertex_count);
    out.edge_map.resize(g.edge_count());
    for (int v = 0; v < g.vertex_count; ++v) out.vertex_map[v] = v;
    for (int e = 0; e < g.edge_count(); ++e) out.edge_map[e] = e;
    out.spokes = {};
    out.ring = {tv.doubled_edges[0], tv.doubled_edges[1]};
    return out;
}

} // namespace

ContractionResult apply(const EmbeddedGraph& g, const ContractionSpec& spec) {
    switch (spec.kind) {
        case ContractionKind::C4:
            return apply_c4(g, spec);
        case ContractionKind::C6:
            return apply_c6(g, spec);
        case ContractionKind::C55:
            return apply_c55(g, spec);
        case ContractionKind::V2Rem:
            return apply_v2rem(g, spec);
        case ContractionKind::V2Add:
            return apply_v2add(g, spec);
    }
    throw DomainError("unknown contraction kind");
}

// --- lifting --------------------------------------------------------------------

namespace {

// unique preimages of the still-present contracted edges
std::vector<int> pull_back(const ContractionResult& res, const std::vector<int>& contracted_ids) {
    std::map<int, std::vector<int>> inverse;
    for (int e = 0; e < static_cast<int>(res.edge_map.size()); ++e)
        if (res.edge_map[e] >= 0) inverse[res.edge_map[e]].push_back(e);
    std::vector<int> out;
    for (int ce : contracted_ids) {
        auto it = inverse.find(ce);
        if (it == inverse.end()) throw DomainError("lift: matching uses an unknown contracted edge");
        if (it->second.size() != 1)
            throw DomainError("lift: matching uses a merged edge outside the case table");
        out.push_back(it->second[0]);
    }
    return out;
}

EdgeSubset finish_lift(const EmbeddedGraph& g, const ContractionResult& res, const EdgeSubset& mp,
                       const std::vector<int>& named_contracted, const std::vector<int>& replacement) {
    std::vector<int> rest;
    for (int ce : mp.ids)
        if (std::find(named_contracted.begin(), named_contracted.end(), ce) == named_contracted.end())
            rest.push_back(ce);
    std::vector<int> lifted = pull_back(res, rest);
    for (int e : replacement) lifted.push_back(e);
    EdgeSubset out = EdgeSubset::of(std::move(lifted));

    DualGraph d = dual(g);
    for (int deg : dual_degrees(d, out))
        if (deg != 1) throw TheoremViolation("lifted edge set is not a dual perfect matching");
    return out;
}

} // namespace

EdgeSubset lift_matching(const EmbeddedGraph& g, const ContractionResult& res,
                         const EdgeSubset& mp) {
    {
        DualGraph dc = dual(res.graph);
        for (int deg : dual_degrees(dc, mp))
            if (deg != 1)
                throw DomainError("lift: the contracted edge set is not a dual perfect matching");
    }
    const auto& sp = res.spokes;
    const auto& b = res.ring;
    switch (res.spec.kind) {
        case ContractionKind::C4: {
            int A = res.edge_map[b[0]], B = res.edge_map[b[1]];
            bool a_in = mp.contains(A), b_in = mp.contains(B);
            if (!a_in && !b_in) return finish_lift(g, res, mp, {}, {sp[0], sp[2]});
            if (!a_in && b_in) return finish_lift(g, res, mp, {B}, {sp[0], b[1], b[2]});
            if (a_in && !b_in) return finish_lift(g, res, mp, {A}, {sp[2], b[3], b[0]});
            return finish_lift(g, res, mp, {A, B}, {b[0], b[1], b[2], b[3]});
        }
        case ContractionKind::C6: {
            int A1 = res.edge_map[b[0]], A3 = res.edge_map[b[1]], A5 = res.edge_map[b[3]];
            bool i1 = mp.contains(A1), i3 = mp.contains(A3), i5 = mp.contains(A5);
            // spokes sp[i] join the pivot to v_{i+1}; ring b[i] joins v_{i+1}, v_{i+2}
            int s1 = sp[0], s3 = sp[2], s5 = sp[4];
            if (!i1 && !i3 && !i5) return finish_lift(g, res, mp, {}, {s1, s3, s5});
            if (!i1 && !i3 && i5) return finish_lift(g, res, mp, {A5}, {s1, s3, b[3], b[4]});
            if (i1 && !i3 && !i5) return finish_lift(g, res, mp, {A1}, {s3, s5, b[5], b[0]});
            if (!i1 && i3 && !i5) return finish_lift(g, res, mp, {A3}, {s5, s1, b[1], b[2]});
            if (!i1 && i3 && i5) return finish_lift(g, res, mp, {A3, A5}, {s1, b[1], b[2], b[3], b[4]});
            if (i1 && !i3 && i5) return finish_lift(g, res, mp, {A5, A1}, {s3, b[3], b[4], b[5], b[0]});
            if (i1 && i3 && !i5) return finish_lift(g, res, mp, {A1, A3}, {s5, b[5], b[0], b[1], b[2]});
            return finish_lift(g, res, mp, {A1, A3, A5}, {b[0], b[1], b[2], b[3], b[4], b[5]});
        }
        case ContractionKind::C55: {
            // spokes: vv1 vv2 vv3 vv4 uv4 uv5 uv6 uv1 uv
            int vv1 = sp[0], vv3 = sp[2], uv4 = sp[4], uv6 = sp[6], uv = sp[8];
            int Q3 = res.edge_map[b[1]], PQ = res.edge_map[b[0]], P6 = res.edge_map[b[4]];
            bool q3 = mp.contains(Q3), pq = mp.contains(PQ), p6 = mp.contains(P6);
            if (!q3 && !pq && !p6) return finish_lift(g, res, mp, {}, {vv1, vv3, uv4, uv6});
            if (!q3 && !pq && p6) return finish_lift(g, res, mp, {P6}, {vv1, vv3, uv4, b[4], b[5]});
            if (!q3 && pq && !p6) return finish_lift(g, res, mp, {PQ}, {uv, vv3, uv6, b[0], b[3]});
            if (q3 && !pq && p6)
                return finish_lift(g, res, mp, {Q3, P6}, {vv1, uv4, b[1], b[2], b[4], b[5]});
            if (!q3 && pq && p6)
                return finish_lift(g, res, mp, {PQ, P6}, {uv, vv3, b[0], b[3], b[4], b[5]});
            if (q3 && !pq && !p6) return finish_lift(g, res, mp, {Q3}, {uv4, uv6, vv1, b[1], b[2]});
            if (q3 && pq && !p6)
                return finish_lift(g, res, mp, {Q3, PQ}, {uv, uv6, b[3], b[0], b[1], b[2]});
            return finish_lift(g, res, mp, {Q3, PQ, P6}, {uv, b[0], b[1], b[2], b[3], b[4], b[5]});
        }
        case ContractionKind::V2Rem: {
            int E = res.edge_map[res.ring[0]];
            if (mp.contains(E)) return finish_lift(g, res, mp, {E}, {res.ring[0], res.ring[1]});
            return finish_lift(g, res, mp, {}, {std::min(res.spokes[0], res.spokes[1])});
        }
        case ContractionKind::V2Add:
            throw DomainError("lift over a 2-vertex addition is not defined");
    }
    throw DomainError("unknown contraction kind");
}

// --- unavoidable configurations ---------------------------------------------------

ReducibleConfig find_reducible(const EmbeddedGraph& g) {
    for (int v = 0; v < g.vertex_count; ++v) {
        switch (g.degree(v)) {
            case 2:
                return {ReducibleConfig::TwoVertex, v, -1};
            case 3:
                return {ReducibleConfig::ThreeVertex, v, -1};
            case 4:
                return {ReducibleConfig::FourVertex, v, -1};
            case 6:
                return {ReducibleConfig::SixVertex, v, -1};
            default:
                break;
        }
    }
    for (int v = 0; v < g.vertex_count; ++v) {
        if (g.degree(v) != 5) continue;
        for (DartId d : g.rotation[v]) {
            int w = g.other_end(edge_of(d), v);
            if (w > v && g.degree(w) == 5) return {ReducibleConfig::AdjacentFives, v, w};
        }
    }
    throw TheoremViolation("multitriangulation of the projective plane without a reducible configuration");
}

std::vector<ContractionSpec> applicable_contractions(const EmbeddedGraph& g) {
    std::vector<ContractionSpec> out;
    auto try_push = [&](ContractionSpec s) {
        try {
            apply(g, s);
            out.push_back(std::move(s));
        } catch (const DomainError&) {
        }
    };
    for (int v = 0; v < g.vertex_count; ++v) {
        if (g.degree(v) == 2) try_push({ContractionKind::V2Rem, v, -1, {}});
        if (g.degree(v) == 4) {
            std::vector<int> nbr;
            for (DartId d : g.rotation[v]) nbr.push_back(g.other_end(edge_of(d), v));
            try_push({ContractionKind::C4, v, -1, {nbr[1], nbr[3]}});
            try_push({ContractionKind::C4, v, -1, {nbr[0], nbr[2]}});
        }
        if (g.degree(v) == 6) {
            std::vector<int> nbr;
            for (DartId d : g.rotation[v]) nbr.push_back(g.other_end(edge_of(d), v));
            try_push({ContractionKind::C6, v, -1, {nbr[1], nbr[3], nbr[5]}});
            try_push({ContractionKind::C6, v, -1, {nbr[0], nbr[2], nbr[4]}});
        }
        if (g.degree(v) == 5) {
            for (DartId d : g.rotation[v]) {
                int u = g.other_end(edge_of(d), v);
                if (u <= v || g.degree(u) != 5) continue;
                for (bool mirrored : {false, true}) {
                    try {
                        C55Labels lb = c55_labels(g, v, u, mirrored);
                        const auto& r = lb.ring_v;
                        try_push({ContractionKind::C55, v, u, {r[0], r[1], r[3], r[4]}});
                    } catch (const DomainError&) {
                    }
                }
            }
        }
    }
    return out;
}

} // namespace ppquad
