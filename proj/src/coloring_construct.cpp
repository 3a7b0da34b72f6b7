#include "ppquad/coloring_construct.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ppquad/fixtures.hpp"

namespace ppquad {

// --- four coloring -----------------------------------------------------------

namespace {

bool color_rec(const std::vector<std::vector<int>>& adj, const std::vector<int>& order, size_t k,
               std::vector<uint8_t>& col) {
    if (k == order.size()) return true;
    int v = order[k];
    for (uint8_t c = 0; c < 4; ++c) {
        bool ok = true;
        for (int w : adj[v])
            if (col[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[v] = c;
        if (color_rec(adj, order, k + 1, col)) return true;
        col[v] = 4;
    }
    return false;
}

} // namespace

FourColoring four_color_adjacency(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (w == v) throw DomainError("four_color: loop");
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });
    std::vector<uint8_t> col(n, 4);
    if (!color_rec(adj, order, 0, col))
        throw TheoremViolation("planar graph without a proper 4-coloring");
    return FourColoring{col};
}

FourColoring four_color(const EmbeddedGraph& g) {
    for (const Edge& e : g.edges)
        if (e.is_loop()) throw DomainError("four_color: loop");
    return four_color_adjacency(simple_adjacency(g));
}

// --- weak extension -----------------------------------------------------------

PartialColoring empty_partial(int n) {
    return PartialColoring(n, -1);
}

namespace {

struct ExtendState {
    const EmbeddedGraph* g;
    std::vector<std::vector<int>> face_vertices; // walk vertices, with repeats
    std::vector<std::vector<int>> faces_at;      // vertex -> faces
    std::vector<int8_t> col;
};

// -1 fine, 0 fail, face index+1 if one vertex is forced
int face_status(const ExtendState& st, int f, int* forced_vertex, uint8_t* forced_color) {
    int uncolored = -1, nuncol = 0;
    bool seen[2] = {false, false};
    for (int v : st.face_vertices[f]) {
        if (st.col[v] < 0) {
            if (uncolored != v) nuncol++;
            uncolored = v;
        } else {
            seen[st.col[v]] = true;
        }
    }
    if (seen[0] && seen[1]) return -1;
    if (nuncol == 0) return 0; // fully colored and monochromatic
    if (nuncol == 1 && (seen[0] || seen[1])) {
        *forced_vertex = uncolored;
        *forced_color = seen[0] ? WHITE : BLACK;
        return 1;
    }
    return -1;
}

bool extend_rec(ExtendState& st) {
    // forced-move propagation
    std::vector<int> trail;
    bool failed = false;
    bool progress = true;
    while (progress && !failed) {
        progress = false;
        for (size_t f = 0; f < st.face_vertices.size() && !failed; ++f) {
            int fv;
            uint8_t fc;
            int s = face_status(st, static_cast<int>(f), &fv, &fc);
            if (s == 0) failed = true;
            if (s == 1) {
                st.col[fv] = static_cast<int8_t>(fc);
                trail.push_back(fv);
                progress = true;
            }
        }
    }
    if (!failed) {
        int v = -1;
        for (int i = 0; i < st.g->vertex_count; ++i)
            if (st.col[i] < 0) {
                v = i;
                break;
            }
        if (v < 0) return true;
        for (uint8_t c = 0; c < 2 && !failed; ++c) {
            st.col[v] = static_cast<int8_t>(c);
            if (extend_rec(st)) return true;
            st.col[v] = -1;
        }
    }
    for (int v : trail) st.col[v] = -1;
    return false;
}

} // namespace

Coloring extend_weak(const EmbeddedGraph& t, int face_id, const PartialColoring& partial) {
    FaceList fl = trace_faces(t);
    if (face_id < 0 || face_id >= fl.count()) throw DomainError("extend_weak: face id out of range");
    std::set<int> fverts;
    for (int i = 0; i < fl.faces[face_id].length(); ++i)
        fverts.insert(t.dart_vertex(fl.faces[face_id].dart_at(i)));
    bool seen[2] = {false, false};
    for (int v = 0; v < t.vertex_count; ++v) {
        if (partial[v] >= 0 && !fverts.count(v))
            throw DomainError("extend_weak: colored vertex off the seed face");
        if (fverts.count(v)) {
            if (partial[v] < 0) throw DomainError("extend_weak: seed face not fully colored");
            seen[partial[v]] = true;
        }
    }
    if (!(seen[0] && seen[1])) throw DomainError("extend_weak: seed face coloring is monochromatic");

    ExtendState st;
    st.g = &t;
    st.face_vertices.resize(fl.count());
    st.faces_at.resize(t.vertex_count);
    for (const auto& f : fl.faces)
        for (int i = 0; i < f.length(); ++i) st.face_vertices[f.id].push_back(t.dart_vertex(f.dart_at(i)));
    st.col = partial;
    if (!extend_rec(st)) throw TheoremViolation("weak extension of a plane multitriangulation failed");
    Coloring out;
    out.color.assign(st.col.begin(), st.col.end());
    if (!is_weak(t, out)) throw TheoremViolation("weak extension produced a monochromatic face");
    return out;
}

// --- boundary-pattern colorings ------------------------------------------------

namespace {

std::vector<int> outer_walk_vertices(const NearTriangulation& n) {
    FaceList fl = trace_faces(n.graph);
    if (n.outer_face < 0 || n.outer_face >= fl.count())
        throw DomainError("near-triangulation: outer face id out of range");
    const FaceWalk& f = fl.faces[n.outer_face];
    std::vector<int> vs;
    for (int i = 0; i < f.length(); ++i) vs.push_back(n.graph.dart_vertex(f.dart_at(i)));
    return vs;
}

void require_near_triangulation(const NearTriangulation& n, int outer_len) {
    if (n.graph.surface != Surface::Sphere) throw DomainError("near-triangulation must be plane");
    FaceList fl = trace_faces(n.graph);
    const bool plain_cycle = n.graph.edge_count() == n.graph.vertex_count && fl.count() == 2 &&
                             fl.faces[0].length() == outer_len && fl.faces[1].length() == outer_len;
    if (plain_cycle) return;
    for (const auto& f : fl.faces) {
        if (f.id == n.outer_face) {
            if (f.length() != outer_len)
                throw DomainError("near-triangulation: outer face has the wrong length");
        } else if (f.length() != 3) {
            throw DomainError("near-triangulation: interior face is not a triangle");
        }
    }
}

bool is_plain_cycle(const NearTriangulation& n) {
    return n.graph.edge_count() == n.graph.vertex_count && trace_faces(n.graph).count() == 2;
}

} // namespace

Coloring bwbw_coloring(const NearTriangulation& n) {
    require_near_triangulation(n, 4);
    std::vector<int> u = outer_walk_vertices(n);
    Coloring c;
    c.color.assign(n.graph.vertex_count, BLACK);
    if (is_plain_cycle(n)) {
        c.color[u[1]] = WHITE;
        c.color[u[3]] = WHITE;
        return c;
    }
    // apex over the outer face, then 4-color and merge classes
    EmbeddedGraph w = wheel4();
    int quad = -1;
    FaceList wfl = trace_faces(w);
    for (const auto& f : wfl.faces)
        if (f.length() == 4) quad = f.id;
    PasteResult pr = paste(n.graph, n.outer_face, w, quad);
    int apex = pr.guest_vertex_map[4];
    FourColoring phi = four_color(pr.graph);

    // relabel colors so apex=0, u1=1, u2=2
    std::array<uint8_t, 4> perm{255, 255, 255, 255};
    perm[phi.color[apex]] = 0;
    perm[phi.color[u[0]]] = 1;
    perm[phi.color[u[1]]] = 2;
    uint8_t next = 3;
    for (uint8_t k = 0; k < 4; ++k)
        if (perm[k] == 255) perm[k] = next++;
    auto pc = [&](int v) { return perm[phi.color[v]]; };

    if (pc(u[2]) == 1) {
        for (int v = 0; v < n.graph.vertex_count; ++v) c.color[v] = (pc(v) <= 1) ? BLACK : WHITE;
    } else if (pc(u[2]) == 3) {
        for (int v = 0; v < n.graph.vertex_count; ++v)
            c.color[v] = (pc(v) == 1 || pc(v) == 3) ? BLACK : WHITE;
    } else {
        throw TheoremViolation("apex 4-coloring gave u3 a color clashing with the lemma cases");
    }
    if (!(c[u[0]] == BLACK && c[u[2]] == BLACK && c[u[1]] == WHITE && c[u[3]] == WHITE))
        throw TheoremViolation("boundary pattern is not B,W,B,W");
    if (!is_weak(n.graph, c)) throw TheoremViolation("apex construction left a monochromatic face");
    return c;
}

BbbwResult bbbw_coloring(const NearTriangulation& n, int walk_offset) {
    require_near_triangulation(n, 4);
    std::vector<int> w0 = outer_walk_vertices(n);
    std::vector<int> u(4);
    for (int i = 0; i < 4; ++i) u[i] = w0[(i + walk_offset) % 4];
    if (has_edge_between(n.graph, u[0], u[2]))
        throw DomainError("bbbw_coloring: the chosen diagonal is an edge");

    BbbwResult out;
    out.coloring.color.assign(n.graph.vertex_count, BLACK);
    if (is_plain_cycle(n)) {
        out.coloring.color[u[3]] = WHITE;
        out.near_weak = false;
        return out;
    }

    // identify u1 with u3, 4-color, take classes {1,2} vs {3,4}
    auto adj = simple_adjacency(n.graph);
    std::vector<std::vector<int>> merged(n.graph.vertex_count);
    auto target = [&](int v) { return v == u[2] ? u[0] : v; };
    for (int v = 0; v < n.graph.vertex_count; ++v) {
        if (v == u[2]) continue;
        std::set<int> nb;
        for (int x : adj[v]) nb.insert(target(x));
        if (v == u[0])
            for (int x : adj[u[2]]) nb.insert(target(x));
        nb.erase(target(v));
        merged[v].assign(nb.begin(), nb.end());
    }
    FourColoring phi = four_color_adjacency(merged);
    phi.color[u[2]] = phi.color[u[0]];

    std::array<uint8_t, 4> perm{255, 255, 255, 255};
    perm[phi.color[u[0]]] = 0;
    perm[phi.color[u[1]]] = 1;
    uint8_t next = 2;
    for (uint8_t k = 0; k < 4; ++k)
        if (perm[k] == 255) perm[k] = next++;
    for (int v = 0; v < n.graph.vertex_count; ++v)
        out.coloring.color[v] = perm[phi.color[v]] <= 1 ? BLACK : WHITE;

    auto mono = monochromatic_faces(n.graph, out.coloring);
    if (out.coloring[u[3]] == WHITE) {
        out.near_weak = false;
        if (!mono.empty()) throw TheoremViolation("identification construction left a monochromatic face");
    } else {
        out.near_weak = true;
        if (mono != std::vector<int>{n.outer_face})
            throw TheoremViolation("all-black boundary must leave exactly the outer face monochromatic");
    }
    if (!(out.coloring[u[0]] == BLACK && out.coloring[u[1]] == BLACK && out.coloring[u[2]] == BLACK))
        throw TheoremViolation("boundary pattern is not B,B,B,*");
    return out;
}

// --- the K6-minus-an-edge configuration ------------------------------------------

bool has_k6_subgraph(const EmbeddedGraph& g) {
    auto adj = simple_adjacency(g);
    const int n = g.vertex_count;
    std::vector<std::vector<char>> am(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) am[v][w] = 1;
    std::vector<int> cur;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (cur.size() == 6) return true;
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int w : cur) ok &= am[v][w] != 0;
            if (!ok) continue;
            cur.push_back(v);
            if (rec(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return rec(0);
}

std::vector<XSubgraph> find_all_x_subgraphs(const EmbeddedGraph& g) {
    auto adj = simple_adjacency(g);
    const int n = g.vertex_count;
    std::vector<XSubgraph> found;
    if (n < 6) return found;
    std::vector<std::vector<char>> am(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) am[v][w] = 1;
    std::vector<int> sel;
    std::function<void(int)> rec = [&](int start) {
        if (sel.size() == 6) {
            int missing_u = -1, missing_v = -1, missing = 0;
            for (int i = 0; i < 6 && missing <= 1; ++i)
                for (int j = i + 1; j < 6; ++j)
                    if (!am[sel[i]][sel[j]]) {
                        missing++;
                        missing_u = sel[i];
                        missing_v = sel[j];
                    }
            if (missing == 1) found.push_back(XSubgraph{sel, {missing_u, missing_v}});
            return;
        }
        for (int v = start; v < n; ++v) {
            int non = 0;
            for (int w : sel) non += !am[v][w];
            if (non > 1) continue;
            sel.push_back(v);
            rec(v + 1);
            sel.pop_back();
        }
    };
    rec(0);
    return found;
}

std::optional<XSubgraph> find_x_subgraph(const EmbeddedGraph& g) {
    auto all = find_all_x_subgraphs(g);
    if (all.empty()) return std::nullopt;
    return all[0];
}

namespace {

std::optional<Coloring> try_x_coloring(const EmbeddedGraph& g, const XSubgraph& x);

}

Coloring x_subgraph_coloring(const EmbeddedGraph& g) {
    if (g.surface != Surface::ProjectivePlane || !is_triangulation(g))
        throw DomainError("x_subgraph_coloring: projective-plane triangulation required");
    if (has_k6_subgraph(g)) throw DomainError("x_subgraph_coloring: K6 subgraph present");
    auto candidates = find_all_x_subgraphs(g);
    if (candidates.empty()) throw DomainError("x_subgraph_coloring: no K6-minus-an-edge subgraph");
    for (const auto& x : candidates) {
        auto c = try_x_coloring(g, x);
        if (c) return *c;
    }
    throw DomainError("x_subgraph_coloring: no candidate embeds with the quadrilateral pattern");
}

namespace {

std::optional<Coloring> try_x_coloring(const EmbeddedGraph& g, const XSubgraph& x) {
    // sub-embedding of the 14-edge pattern
    std::vector<char> xedge(g.edge_count(), 0);
    std::set<int> xset(x.vertices.begin(), x.vertices.end());
    for (int e = 0; e < g.edge_count(); ++e)
        if (xset.count(g.edges[e].u) && xset.count(g.edges[e].v)) xedge[e] = 1;
    SubgraphRegions sr = subgraph_regions(g, xedge);
    int quad_face = -1;
    for (const auto& f : sr.sub_faces.faces) {
        if (f.length() == 4) {
            if (quad_face >= 0) return std::nullopt;
            quad_face = f.id;
        } else if (f.length() != 3) {
            return std::nullopt;
        }
    }
    if (quad_face < 0) return std::nullopt;

    // quad walk q0 q1 q2 q3 with the missing pair on a diagonal
    std::vector<int> q;
    const FaceWalk& qf = sr.sub_faces.faces[quad_face];
    for (int i = 0; i < 4; ++i) q.push_back(sr.sub.dart_vertex(qf.dart_at(i)));
    int off = -1;
    for (int i = 0; i < 4; ++i) {
        if ((q[i] == x.missing_pair[0] && q[(i + 2) % 4] == x.missing_pair[1]) ||
            (q[i] == x.missing_pair[1] && q[(i + 2) % 4] == x.missing_pair[0]))
            off = i;
    }
    if (off < 0) return std::nullopt;

    // assemble the coloring region by region
    Coloring c;
    c.color.assign(g.vertex_count, BLACK);
    std::vector<char> assigned(g.vertex_count, 0);

    auto region_piece = [&](int subface) {
        std::vector<char> take(sr.host_faces.count(), 0);
        int comp = sr.region_of_subface[subface];
        for (int f = 0; f < sr.host_faces.count(); ++f) take[f] = sr.comps.comp[f] == comp;
        std::vector<int> boundary;
        const FaceWalk& fw = sr.sub_faces.faces[subface];
        for (int i = 0; i < fw.length(); ++i)
            boundary.push_back(sr.sub_orig_edge[edge_of(fw.dart_at(i))]);
        return piece_from_faces(g, sr.host_faces, take, boundary);
    };

    // the quadrilateral region first
    {
        Piece p = region_piece(quad_face);
        NearTriangulation nt{p.graph, p.root_face};
        // locate u1 = missing_pair diagonal inside the piece walk
        FaceList pfl = trace_faces(p.graph);
        const FaceWalk& rootw = pfl.faces[p.root_face];
        int piece_off = -1;
        for (int i = 0; i < 4; ++i) {
            int v = p.orig_vertex[p.graph.dart_vertex(rootw.dart_at(i))];
            if (v == x.missing_pair[0] || v == x.missing_pair[1]) {
                piece_off = i;
                break;
            }
        }
        BbbwResult bb = bbbw_coloring(nt, piece_off);
        for (int pv = 0; pv < p.graph.vertex_count; ++pv) {
            c.color[p.orig_vertex[pv]] = bb.coloring[pv];
            assigned[p.orig_vertex[pv]] = 1;
        }
    }
    // the two hub vertices become white
    for (int v : x.vertices) {
        bool on_quad = false;
        for (int i = 0; i < 4; ++i) on_quad |= q[i] == v;
        if (!on_quad) {
            c.color[v] = WHITE;
            assigned[v] = 1;
        }
    }
    // triangular regions extend weakly from their boundary colors
    for (const auto& f : sr.sub_faces.faces) {
        if (f.id == quad_face) continue;
        Piece p = region_piece(f.id);
        if (p.graph.vertex_count == 3 && p.graph.edge_count() == 3) {
            continue; // empty region: the triangle is a face of g itself
        }
        PartialColoring part = empty_partial(p.graph.vertex_count);
        FaceList pfl = trace_faces(p.graph);
        for (int i = 0; i < pfl.faces[p.root_face].length(); ++i) {
            int pv = p.graph.dart_vertex(pfl.faces[p.root_face].dart_at(i));
            part[pv] = static_cast<int8_t>(c.color[p.orig_vertex[pv]]);
        }
        Coloring pc = extend_weak(p.graph, p.root_face, part);
        for (int pv = 0; pv < p.graph.vertex_count; ++pv) {
            if (!assigned[p.orig_vertex[pv]]) {
                c.color[p.orig_vertex[pv]] = pc[pv];
                assigned[p.orig_vertex[pv]] = 1;
            }
        }
    }
    if (!is_weak(g, c)) throw TheoremViolation("x-subgraph construction left a monochromatic face");
    return c;
}

} // namespace

} // namespace ppquad
