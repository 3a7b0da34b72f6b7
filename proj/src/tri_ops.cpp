#include "ppquad/tri_ops.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace ppquad {

bool is_triangulation(const EmbeddedGraph& g) {
    for (const auto& f : trace_faces(g).faces)
        if (f.length() != 3) return false;
    return g.edge_count() > 0;
}

bool is_quadrangulation(const EmbeddedGraph& g) {
    for (const auto& f : trace_faces(g).faces)
        if (f.length() != 4) return false;
    return g.edge_count() > 0;
}

std::vector<std::vector<std::pair<int, int>>> DualGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(face_count);
    for (int e = 0; e < edge_count(); ++e) {
        adj[ends[e][0]].push_back({ends[e][1], e});
        if (ends[e][1] != ends[e][0]) adj[ends[e][1]].push_back({ends[e][0], e});
    }
    return adj;
}

std::vector<int> DualGraph::degrees() const {
    std::vector<int> deg(face_count, 0);
    for (const auto& en : ends) {
        deg[en[0]]++;
        deg[en[1]]++;
    }
    return deg;
}

bool DualGraph::is_cubic() const {
    for (int d : degrees())
        if (d != 3) return false;
    return true;
}

DualGraph dual(const EmbeddedGraph& g) {
    FaceList fl = trace_faces(g);
    DualGraph d;
    d.face_count = fl.count();
    d.ends.assign(g.edge_count(), {-1, -1});
    std::vector<int> filled(g.edge_count(), 0);
    for (const auto& f : fl.faces) {
        for (int i = 0; i < f.length(); ++i) {
            int e = edge_of(f.dart_at(i));
            if (filled[e] == 2) throw StructureError("edge on more than two face sides");
            d.ends[e][filled[e]++] = f.id;
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (filled[e] != 2) throw StructureError("edge with missing face side");
    return d;
}

bool dual_is_bipartite(const DualGraph& d, std::vector<uint8_t>* classes) {
    std::vector<int> col(d.face_count, -1);
    auto adj = d.adjacency();
    for (int s = 0; s < d.face_count; ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : adj[v]) {
                if (w == v) return false;
                if (col[w] < 0) {
                    col[w] = col[v] ^ 1;
                    q.push(w);
                } else if (col[w] == col[v]) {
                    return false;
                }
            }
        }
    }
    if (classes) classes->assign(col.begin(), col.end());
    return true;
}

int FaceTwoColoring::red_count() const {
    int k = 0;
    for (uint8_t c : rb) k += c == 0;
    return k;
}

bool is_eulerian(const EmbeddedGraph& g) {
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

FaceTwoColoring face_2coloring(const EmbeddedGraph& g) {
    if (g.surface != Surface::Sphere) throw DomainError("face_2coloring: plane input required");
    if (!is_triangulation(g)) throw DomainError("face_2coloring: triangulation required");
    if (!is_eulerian(g)) throw DomainError("face_2coloring: even degrees required (dual not bipartite)");
    DualGraph d = dual(g);
    std::vector<uint8_t> classes;
    if (!dual_is_bipartite(d, &classes))
        throw TheoremViolation("dual of a plane even triangulation must be bipartite");
    return FaceTwoColoring{classes};
}

FaceComponents face_components(const EmbeddedGraph& g, const FaceList& fl,
                               const std::vector<char>& blocked_edge) {
    DualGraph d = dual(g);
    FaceComponents fc;
    fc.comp.assign(fl.count(), -1);
    auto adj = d.adjacency();
    for (int s = 0; s < fl.count(); ++s) {
        if (fc.comp[s] >= 0) continue;
        int id = fc.count++;
        std::queue<int> q;
        fc.comp[s] = id;
        q.push(s);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (auto [w, e] : adj[f]) {
                if (blocked_edge[e] || fc.comp[w] >= 0) continue;
                fc.comp[w] = id;
                q.push(w);
            }
        }
    }
    return fc;
}

namespace {

// vertices strictly inside each component (not on the blocking cycle)
std::vector<std::vector<int>> strict_vertices_by_component(const EmbeddedGraph& g, const FaceList& fl,
                                                           const FaceComponents& fc,
                                                           const std::vector<char>& on_cycle) {
    std::vector<int> vcomp(g.vertex_count, -1);
    for (const auto& f : fl.faces)
        for (int i = 0; i < f.length(); ++i) {
            int v = g.dart_vertex(f.dart_at(i));
            if (!on_cycle[v]) vcomp[v] = fc.comp[f.id];
        }
    std::vector<std::vector<int>> out(fc.count);
    for (int v = 0; v < g.vertex_count; ++v)
        if (vcomp[v] >= 0) out[vcomp[v]].push_back(v);
    return out;
}

std::vector<int> cycle_vertices(const EmbeddedGraph& g, const std::vector<int>& cyc_edges) {
    std::set<int> vs;
    for (int e : cyc_edges) {
        vs.insert(g.edges[e].u);
        vs.insert(g.edges[e].v);
    }
    return {vs.begin(), vs.end()};
}

} // namespace

std::vector<CycleRef> separating_3cycles(const EmbeddedGraph& g) {
    FaceList fl = trace_faces(g);
    std::vector<CycleRef> out;
    for (int a = 0; a < g.vertex_count; ++a)
        for (int b = a + 1; b < g.vertex_count; ++b) {
            auto eab = edges_between(g, a, b);
            if (eab.empty()) continue;
            for (int c = b + 1; c < g.vertex_count; ++c) {
                auto ebc = edges_between(g, b, c);
                if (ebc.empty()) continue;
                auto eca = edges_between(g, c, a);
                if (eca.empty()) continue;
                for (int e1 : eab)
                    for (int e2 : ebc)
                        for (int e3 : eca) {
                            std::vector<int> cyc{e1, e2, e3};
                            if (g.surface == Surface::ProjectivePlane && cycle_sign(g, cyc) < 0) continue;
                            std::vector<char> blocked(g.edge_count(), 0);
                            blocked[e1] = blocked[e2] = blocked[e3] = 1;
                            FaceComponents fc = face_components(g, fl, blocked);
                            if (fc.count != 2) continue;
                            std::vector<char> on(g.vertex_count, 0);
                            on[a] = on[b] = on[c] = 1;
                            auto strict = strict_vertices_by_component(g, fl, fc, on);
                            if (!strict[0].empty() && !strict[1].empty())
                                out.push_back(CycleRef{cyc, true});
                        }
            }
        }
    return out;
}

Piece piece_from_faces(const EmbeddedGraph& g, const FaceList& fl, const std::vector<char>& take_face,
                       const std::vector<int>& boundary_edges) {
    // keep every edge with a taken side
    std::vector<char> keep_edge(g.edge_count(), 0);
    for (const auto& f : fl.faces)
        if (take_face[f.id])
            for (int i = 0; i < f.length(); ++i) keep_edge[edge_of(f.dart_at(i))] = 1;

    std::vector<int> new_vertex(g.vertex_count, -1);
    Piece p;
    for (int v = 0; v < g.vertex_count; ++v) {
        bool used = false;
        for (DartId d : g.rotation[v]) used |= keep_edge[edge_of(d)] != 0;
        if (used) {
            new_vertex[v] = static_cast<int>(p.orig_vertex.size());
            p.orig_vertex.push_back(v);
        }
    }
    std::vector<int> new_edge(g.edge_count(), -1);
    p.graph.vertex_count = static_cast<int>(p.orig_vertex.size());
    for (int e = 0; e < g.edge_count(); ++e)
        if (keep_edge[e]) {
            new_edge[e] =
                p.graph.add_edge(new_vertex[g.edges[e].u], new_vertex[g.edges[e].v], g.edges[e].sign);
            p.orig_edge.push_back(e);
        }
    p.graph.rotation.assign(p.graph.vertex_count, {});
    for (int v = 0; v < g.vertex_count; ++v) {
        if (new_vertex[v] < 0) continue;
        for (DartId d : g.rotation[v])
            if (keep_edge[edge_of(d)])
                p.graph.rotation[new_vertex[v]].push_back(dart(new_edge[edge_of(d)], d & 1));
    }
    int chi = p.graph.vertex_count - p.graph.edge_count() + trace_faces(p.graph).count();
    if (chi == 2)
        p.graph.surface = Surface::Sphere;
    else if (chi == 1)
        p.graph.surface = Surface::ProjectivePlane;
    else
        throw StructureError("piece has Euler characteristic " + std::to_string(chi));
    p.graph.allow_noncontractible_loops = g.allow_noncontractible_loops;

    // locate the face created by the cut: it is the one face not inherited
    // from a kept face, and its edge set must be the boundary cycle
    std::vector<int> want;
    for (int e : boundary_edges) want.push_back(new_edge[e]);
    std::sort(want.begin(), want.end());
    std::multiset<std::vector<int>> kept_sets;
    for (const auto& f : fl.faces) {
        if (!take_face[f.id]) continue;
        std::vector<int> es;
        for (int i = 0; i < f.length(); ++i) es.push_back(new_edge[edge_of(f.dart_at(i))]);
        std::sort(es.begin(), es.end());
        kept_sets.insert(es);
    }
    FaceList pf = trace_faces(p.graph);
    p.root_face = -1;
    for (const auto& f : pf.faces) {
        std::vector<int> es;
        for (int i = 0; i < f.length(); ++i) es.push_back(edge_of(f.dart_at(i)));
        std::sort(es.begin(), es.end());
        auto it = kept_sets.find(es);
        if (it != kept_sets.end()) {
            kept_sets.erase(it);
        } else {
            if (es != want) throw StructureError("cut face does not match the boundary cycle");
            if (p.root_face >= 0) throw StructureError("more than one cut face");
            p.root_face = f.id;
        }
    }
    if (p.root_face < 0) throw StructureError("cut face not found");
    return p;
}

std::pair<Piece, Piece> split_along(const EmbeddedGraph& g, const CycleRef& c) {
    if (c.edges.size() != 3) throw DomainError("split_along: cycle must have length 3");
    if (g.surface == Surface::ProjectivePlane && cycle_sign(g, c.edges) < 0)
        throw DomainError("split_along: cycle is noncontractible");
    FaceList fl = trace_faces(g);
    std::vector<char> blocked(g.edge_count(), 0);
    for (int e : c.edges) blocked[e] = 1;
    FaceComponents fc = face_components(g, fl, blocked);
    if (fc.count != 2) throw DomainError("split_along: cycle does not separate");
    std::vector<char> on(g.vertex_count, 0);
    for (int v : cycle_vertices(g, c.edges)) on[v] = 1;
    auto strict = strict_vertices_by_component(g, fl, fc, on);
    if (strict[0].empty() || strict[1].empty())
        throw DomainError("split_along: a side has no interior vertex");

    auto build = [&](int comp) {
        std::vector<char> take(fl.count(), 0);
        for (int f = 0; f < fl.count(); ++f) take[f] = fc.comp[f] == comp;
        return piece_from_faces(g, fl, take, c.edges);
    };
    Piece p0 = build(0), p1 = build(1);
    bool first_is_inner;
    if (g.surface == Surface::ProjectivePlane) {
        first_is_inner = p0.graph.surface == Surface::Sphere;
    } else {
        first_is_inner = strict[0].size() < strict[1].size() ||
                         (strict[0].size() == strict[1].size() && strict[0] <= strict[1]);
    }
    if (first_is_inner) return {std::move(p0), std::move(p1)};
    return {std::move(p1), std::move(p0)};
}

// --- pasting -----------------------------------------------------------

namespace {

FaceWalk locate_walk(const EmbeddedGraph& g, int face_id) {
    FaceList fl = trace_faces(g);
    if (face_id < 0 || face_id >= fl.count()) throw DomainError("paste: face id out of range");
    return fl.faces[face_id];
}

std::vector<int> face_edge_set(const FaceWalk& f) {
    std::vector<int> es;
    for (int i = 0; i < f.length(); ++i) es.push_back(edge_of(f.dart_at(i)));
    std::sort(es.begin(), es.end());
    return es;
}

// face ids can shift under sign normalization; re-locate by edge set
FaceWalk locate_walk_in(const EmbeddedGraph& original, int face_id, const EmbeddedGraph& renormalized) {
    std::vector<int> want = face_edge_set(locate_walk(original, face_id));
    FaceList fl = trace_faces(renormalized);
    for (const auto& f : fl.faces)
        if (face_edge_set(f) == want) return f;
    throw StructureError("face lost during sign normalization");
}

std::vector<DartId> linearize_between(const std::vector<DartId>& rot, DartId after, DartId before) {
    // clockwise darts strictly between `after` and `before`
    int n = static_cast<int>(rot.size());
    int i = -1;
    for (int k = 0; k < n; ++k)
        if (rot[k] == after) i = k;
    if (i < 0) throw StructureError("dart not in rotation");
    std::vector<DartId> out;
    for (int k = (i + 1) % n; rot[k] != before; k = (k + 1) % n) out.push_back(rot[k]);
    return out;
}

} // namespace

PasteResult paste(const EmbeddedGraph& host, int host_face, const EmbeddedGraph& guest, int guest_face,
                  int shift, bool flip) {
    PasteResult res;
    if (guest.vertex_count == 0) {
        res.graph = host;
        return res;
    }
    FaceWalk hw = locate_walk(host, host_face);
    const int L = hw.length();

    EmbeddedGraph gn = normalize_signs(guest);
    if (gn.surface != Surface::Sphere || !is_orientable(gn))
        throw DomainError("paste: guest must be a plane embedding");
    for (const Edge& e : gn.edges)
        if (e.sign != +1) throw StructureError("paste: normalization left a negative sign");

    FaceWalk gw0 = locate_walk_in(guest, guest_face, gn);
    if (gw0.length() != L) throw DomainError("paste: face lengths differ");
    FaceWalk gw = flip ? partner_walk(gn, gw0) : gw0;

    std::vector<int> host_vs(L), guest_vs(L);
    for (int i = 0; i < L; ++i) host_vs[i] = host.dart_vertex(hw.dart_at(i));
    for (int i = 0; i < L; ++i) guest_vs[i] = gn.dart_vertex(gw.dart_at(i));
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) {
            if (host_vs[i] == host_vs[j]) throw DomainError("paste: host face has a repeated vertex");
            if (guest_vs[i] == guest_vs[j]) throw DomainError("paste: guest face has a repeated vertex");
        }

    res.graph = host;
    res.guest_vertex_map.assign(gn.vertex_count, -1);
    res.guest_edge_map.assign(gn.edge_count(), -1);

    auto gpos = [&](int i) { return (i + shift) % L; };
    std::vector<char> glued_vertex(gn.vertex_count, 0), glued_edge(gn.edge_count(), 0);
    std::vector<int> omark(gn.vertex_count, +1); // relative orientation per guest vertex
    for (int i = 0; i < L; ++i) {
        int w = guest_vs[gpos(i)];
        res.guest_vertex_map[w] = host_vs[i];
        glued_vertex[w] = 1;
        glued_edge[edge_of(gw.dart_at(gpos(i)))] = 1;
        omark[w] = -hw.sign_at(i) * gw.sign_at(gpos(i));
    }
    for (int x = 0; x < gn.vertex_count; ++x)
        if (!glued_vertex[x]) {
            res.guest_vertex_map[x] = res.graph.vertex_count++;
            res.graph.rotation.push_back({});
        }
    for (int e = 0; e < gn.edge_count(); ++e) {
        if (glued_edge[e]) continue;
        int u = gn.edges[e].u, v = gn.edges[e].v;
        res.guest_edge_map[e] =
            res.graph.add_edge(res.guest_vertex_map[u], res.guest_vertex_map[v], omark[u] * omark[v]);
    }
    auto map_dart = [&](DartId d) { return dart(res.guest_edge_map[edge_of(d)], d & 1); };

    for (int x = 0; x < gn.vertex_count; ++x) {
        if (glued_vertex[x]) continue;
        auto& rot = res.graph.rotation[res.guest_vertex_map[x]];
        for (DartId d : gn.rotation[x]) rot.push_back(map_dart(d));
    }

    // splice the guest corner fans into the host face corners
    for (int i = 0; i < L; ++i) {
        int vi = host_vs[i];
        DartId h_out = hw.dart_at(i);
        DartId h_in = twin(hw.dart_at((i + L - 1) % L));
        int gi = gpos(i);
        DartId g_out = gw.dart_at(gi);
        DartId g_in = twin(gw.dart_at((gi + L - 1) % L));
        int w = guest_vs[gi];

        std::vector<DartId> fan;
        if (gw.sign_at(gi) > 0)
            fan = linearize_between(gn.rotation[w], g_out, g_in);
        else
            fan = linearize_between(gn.rotation[w], g_in, g_out);
        for (auto& d : fan) d = map_dart(d);
        if (omark[w] < 0) std::reverse(fan.begin(), fan.end());

        auto& rot = res.graph.rotation[vi];
        DartId anchor = hw.sign_at(i) > 0 ? h_in : h_out;
        DartId closer = hw.sign_at(i) > 0 ? h_out : h_in;
        int ap = -1;
        for (int k = 0; k < static_cast<int>(rot.size()); ++k)
            if (rot[k] == anchor) ap = k;
        if (ap < 0 || rot[(ap + 1) % rot.size()] != closer)
            throw StructureError("paste: host corner darts are not adjacent");
        rot.insert(rot.begin() + ap + 1, fan.begin(), fan.end());
    }

    int hf = trace_faces(host).count();
    int gf = trace_faces(gn).count();
    FaceList out_faces = trace_faces(res.graph);
    if (out_faces.count() != hf + gf - 2) throw TheoremViolation("paste: face count mismatch after gluing");
    auto rep = validate(res.graph);
    if (!rep.valid()) throw TheoremViolation("paste: invalid result: " + rep.joined());
    return res;
}

std::vector<PasteResult> paste_all(const EmbeddedGraph& host, int host_face, const EmbeddedGraph& guest,
                                   int guest_face) {
    std::vector<PasteResult> out;
    int L = locate_walk(host, host_face).length();
    for (int flip = 0; flip < 2; ++flip)
        for (int s = 0; s < L; ++s) out.push_back(paste(host, host_face, guest, guest_face, s, flip != 0));
    return out;
}

PasteResult paste_by_correspondence(const EmbeddedGraph& host, int host_face, const EmbeddedGraph& guest,
                                    int guest_face,
                                    const std::vector<std::pair<int, int>>& guest_to_host) {
    FaceWalk hw = locate_walk(host, host_face);
    const int L = hw.length();
    EmbeddedGraph gn = normalize_signs(guest);
    FaceWalk gw0 = locate_walk_in(guest, guest_face, gn);
    if (gw0.length() != L) throw DomainError("paste: face lengths differ");
    for (int flip = 0; flip < 2; ++flip) {
        FaceWalk gw = flip ? partner_walk(gn, gw0) : gw0;
        for (int s = 0; s < L; ++s) {
            bool match = true;
            for (int i = 0; i < L && match; ++i) {
                int hv = host.dart_vertex(hw.dart_at(i));
                int gv = gn.dart_vertex(gw.dart_at((i + s) % L));
                bool found = false;
                for (auto [g2, h2] : guest_to_host) found |= (g2 == gv && h2 == hv);
                match = found;
            }
            if (match) return paste(host, host_face, guest, guest_face, s, flip != 0);
        }
    }
    throw DomainError("paste: no gluing realizes the requested correspondence");
}

// --- two-cycles ------------------------------------------------------------

namespace {

std::vector<std::array<int, 2>> parallel_pairs(const EmbeddedGraph& g, bool want_contractible) {
    std::vector<std::array<int, 2>> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges[e].is_loop()) continue;
        for (int f = e + 1; f < g.edge_count(); ++f) {
            if (g.edges[f].is_loop()) continue;
            const Edge &a = g.edges[e], &b = g.edges[f];
            bool par = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
            if (!par) continue;
            bool contractible = g.surface == Surface::Sphere || a.sign * b.sign > 0;
            if (contractible == want_contractible) out.push_back({e, f});
        }
    }
    return out;
}

} // namespace

std::vector<std::array<int, 2>> contractible_2cycles(const EmbeddedGraph& g) {
    return parallel_pairs(g, true);
}

std::vector<std::array<int, 2>> noncontractible_2cycles(const EmbeddedGraph& g) {
    return parallel_pairs(g, false);
}

std::vector<int> noncontractible_loops(const EmbeddedGraph& g) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edges[e].is_loop() && g.edges[e].sign < 0) out.push_back(e);
    return out;
}

// --- contracting a 2-cycle ---------------------------------------------------

namespace {

struct TwoCycleSides {
    FaceList fl;
    FaceComponents fc;
    int inner_comp = -1;
};

TwoCycleSides two_cycle_sides(const EmbeddedGraph& g, const std::array<int, 2>& ce) {
    const Edge &a = g.edges[ce[0]], &b = g.edges[ce[1]];
    bool par = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
    if (!par || a.is_loop()) throw DomainError("2-cycle: edges are not a parallel pair");
    if (g.surface == Surface::ProjectivePlane && a.sign * b.sign < 0)
        throw DomainError("2-cycle is noncontractible");
    TwoCycleSides s;
    s.fl = trace_faces(g);
    std::vector<char> blocked(g.edge_count(), 0);
    blocked[ce[0]] = blocked[ce[1]] = 1;
    s.fc = face_components(g, s.fl, blocked);
    if (s.fc.count != 2) throw DomainError("2-cycle does not bound");
    std::vector<char> on(g.vertex_count, 0);
    on[a.u] = on[a.v] = 1;
    auto strict = strict_vertices_by_component(g, s.fl, s.fc, on);

    auto side_is_disk = [&](int comp) {
        // cap the side with a bigon and test for a sphere
        std::vector<char> keep(g.edge_count(), 0);
        for (const auto& f : s.fl.faces)
            if (s.fc.comp[f.id] == comp)
                for (int i = 0; i < f.length(); ++i) keep[edge_of(f.dart_at(i))] = 1;
        int inner_edges = 0;
        for (int e = 0; e < g.edge_count(); ++e)
            if (keep[e] && e != ce[0] && e != ce[1]) inner_edges++;
        int faces = 0;
        for (int f = 0; f < s.fl.count(); ++f) faces += s.fc.comp[f] == comp;
        int verts = static_cast<int>(strict[comp].size()) + 2;
        return verts - (inner_edges + 2) + (faces + 1) == 2;
    };
    bool d0 = side_is_disk(0), d1 = side_is_disk(1);
    if (g.surface == Surface::ProjectivePlane) {
        if (d0 == d1) throw StructureError("contractible 2-cycle without a unique disk side");
        s.inner_comp = d0 ? 0 : 1;
    } else {
        if (!d0 || !d1) throw StructureError("2-cycle sides on the sphere must both be disks");
        s.inner_comp = strict[0].size() < strict[1].size()   ? 0
                       : strict[1].size() < strict[0].size() ? 1
                                                             : (strict[0] <= strict[1] ? 0 : 1);
    }
    if (strict[s.inner_comp].empty()) throw DomainError("2-cycle disk side has no interior vertex");
    return s;
}

ContractTwoCycleResult build_without_side(const EmbeddedGraph& g, const std::array<int, 2>& ce,
                                          const TwoCycleSides& s, bool keep_inner) {
    int drop_comp = keep_inner ? (s.inner_comp ^ 1) : s.inner_comp;
    int e_keep = std::min(ce[0], ce[1]), e_drop = std::max(ce[0], ce[1]);

    // an edge disappears when both of its sides lie in the dropped region
    DualGraph du = dual(g);
    std::vector<char> keep_edge(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        keep_edge[e] = s.fc.comp[du.ends[e][0]] != drop_comp || s.fc.comp[du.ends[e][1]] != drop_comp;
    keep_edge[e_keep] = 1;
    keep_edge[e_drop] = 0;

    ContractTwoCycleResult out;
    std::vector<int> new_vertex(g.vertex_count, -1), new_edge(g.edge_count(), -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        bool used = false;
        for (DartId d : g.rotation[v]) used |= keep_edge[edge_of(d)] != 0;
        if (used) {
            new_vertex[v] = static_cast<int>(out.orig_vertex.size());
            out.orig_vertex.push_back(v);
        }
    }
    out.graph.vertex_count = static_cast<int>(out.orig_vertex.size());
    out.graph.allow_noncontractible_loops = g.allow_noncontractible_loops;
    for (int e = 0; e < g.edge_count(); ++e)
        if (keep_edge[e]) {
            new_edge[e] =
                out.graph.add_edge(new_vertex[g.edges[e].u], new_vertex[g.edges[e].v], g.edges[e].sign);
            out.orig_edge.push_back(e);
        }
    out.graph.rotation.assign(out.graph.vertex_count, {});
    for (int v = 0; v < g.vertex_count; ++v) {
        if (new_vertex[v] < 0) continue;
        for (DartId d : g.rotation[v])
            if (keep_edge[edge_of(d)])
                out.graph.rotation[new_vertex[v]].push_back(dart(new_edge[edge_of(d)], d & 1));
    }
    out.merged_edge = new_edge[e_keep];
    int chi = out.graph.vertex_count - out.graph.edge_count() + trace_faces(out.graph).count();
    out.graph.surface = chi == 2 ? Surface::Sphere : Surface::ProjectivePlane;
    if (chi != 1 && chi != 2)
        throw StructureError("2-cycle surgery left Euler characteristic " + std::to_string(chi));
    auto rep = validate(out.graph);
    if (!rep.valid()) throw StructureError("2-cycle surgery produced invalid graph: " + rep.joined());
    return out;
}

} // namespace

ContractTwoCycleResult contract_2cycle(const EmbeddedGraph& g, const std::array<int, 2>& cycle_edges) {
    TwoCycleSides s = two_cycle_sides(g, cycle_edges);
    ContractTwoCycleResult r = build_without_side(g, cycle_edges, s, false);
    if (r.graph.surface != g.surface) throw StructureError("contracting a disk changed the surface");
    return r;
}

ContractTwoCycleResult extract_zipped_disk(const EmbeddedGraph& g, const std::array<int, 2>& cycle_edges) {
    TwoCycleSides s = two_cycle_sides(g, cycle_edges);
    ContractTwoCycleResult r = build_without_side(g, cycle_edges, s, true);
    if (r.graph.surface != Surface::Sphere)
        throw StructureError("zipped disk is not a sphere embedding");
    return r;
}

SubgraphRegions subgraph_regions(const EmbeddedGraph& g, const std::vector<char>& sub_edge) {
    SubgraphRegions r;
    r.sub = restrict_to_edges(g, sub_edge, g.surface);
    for (int e = 0; e < g.edge_count(); ++e)
        if (sub_edge[e]) r.sub_orig_edge.push_back(e);
    // drop isolated-vertex bookkeeping: the restricted graph keeps all vertex
    // ids; tracing only touches vertices with darts
    r.sub_faces = trace_faces(r.sub);
    r.host_faces = trace_faces(g);
    r.comps = face_components(g, r.host_faces, sub_edge);
    r.region_of_subface.assign(r.sub_faces.count(), -1);
    for (const auto& f : r.sub_faces.faces) {
        int region = -1;
        for (int i = 0; i < f.length(); ++i) {
            DartId sd = f.dart_at(i);
            DartId hd = dart(r.sub_orig_edge[edge_of(sd)], sd & 1);
            int host_face = r.host_faces.face_at(hd, f.sign_at(i));
            int comp = r.comps.comp[host_face];
            if (region < 0)
                region = comp;
            else if (region != comp)
                throw StructureError("sub-embedding face spans several host regions");
        }
        r.region_of_subface[f.id] = region;
    }
    return r;
}

TwoVertexAddition add_two_vertex(const EmbeddedGraph& g, int e) {
    if (e < 0 || e >= g.edge_count() || g.edges[e].is_loop())
        throw DomainError("add_two_vertex: need a non-loop edge");
    EmbeddedGraph h = g;
    if (h.edges[e].sign < 0) flip_vertex(h, h.edges[e].v);

    TwoVertexAddition out;
    int u = h.edges[e].u, v = h.edges[e].v;
    int w = h.vertex_count;
    h.vertex_count++;
    int e2 = h.add_edge(u, v, +1);
    int euw = h.add_edge(u, w, +1);
    int evw = h.add_edge(v, w, +1);
    h.rotation.push_back({dart(euw, 1), dart(evw, 1)});
    auto splice = [&](int vert, DartId at, std::vector<DartId> seq) {
        auto& rot = h.rotation[vert];
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == at) {
                rot.erase(rot.begin() + i);
                rot.insert(rot.begin() + i, seq.begin(), seq.end());
                return;
            }
        throw StructureError("add_two_vertex: dart not found");
    };
    splice(u, dart(e, 0), {dart(e, 0), dart(euw, 0), dart(e2, 0)});
    splice(v, dart(e, 1), {dart(e2, 1), dart(evw, 0), dart(e, 1)});
    h.allow_noncontractible_loops = g.allow_noncontractible_loops;
    auto rep = validate(h);
    if (!rep.valid()) throw StructureError("add_two_vertex produced invalid graph: " + rep.joined());
    out.graph = std::move(h);
    out.new_vertex = w;
    out.doubled_edges = {e, e2};
    return out;
}

CutDisk cut_along_2cycle(const EmbeddedGraph& g, const std::array<int, 2>& cycle_edges) {
    const Edge &a = g.edges[cycle_edges[0]], &b = g.edges[cycle_edges[1]];
    bool par = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
    if (!par || a.is_loop()) throw DomainError("cut_along_2cycle: edges are not a parallel pair");
    if (g.surface != Surface::ProjectivePlane || a.sign * b.sign > 0)
        throw DomainError("cut_along_2cycle: cycle must be noncontractible on the projective plane");

    DoubleCover dc = double_cover(g);
    FaceList fl = trace_faces(dc.cover);
    std::vector<char> blocked(dc.cover.edge_count(), 0);
    std::vector<int> boundary;
    for (int lift = 0; lift < 2; ++lift) {
        blocked[2 * cycle_edges[0] + lift] = 1;
        blocked[2 * cycle_edges[1] + lift] = 1;
        boundary.push_back(2 * cycle_edges[0] + lift);
        boundary.push_back(2 * cycle_edges[1] + lift);
    }
    FaceComponents fc = face_components(dc.cover, fl, blocked);
    if (fc.count != 2) throw StructureError("cut along 2-cycle did not split the double cover");
    std::vector<char> take(fl.count(), 0);
    for (int f = 0; f < fl.count(); ++f) take[f] = fc.comp[f] == fc.comp[0];
    Piece p = piece_from_faces(dc.cover, fl, take, boundary);
    if (p.graph.surface != Surface::Sphere) throw StructureError("cut disk is not plane");

    CutDisk out;
    out.graph = std::move(p.graph);
    out.outer_face = p.root_face;
    out.orig_vertex.reserve(p.orig_vertex.size());
    for (int cv : p.orig_vertex) out.orig_vertex.push_back(dc.base_vertex(cv));
    return out;
}

} // namespace ppquad
