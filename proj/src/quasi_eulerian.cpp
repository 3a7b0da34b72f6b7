#include "ppquad/quasi_eulerian.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "ppquad/coloring_construct.hpp"

namespace ppquad {

namespace {

void require_simple_plane_triangulation(const EmbeddedGraph& t, const char* who) {
    if (t.surface != Surface::Sphere) throw DomainError(std::string(who) + ": plane input required");
    for (const Edge& e : t.edges)
        if (e.is_loop()) throw DomainError(std::string(who) + ": loop present");
    for (int e = 0; e < t.edge_count(); ++e)
        for (int f = e + 1; f < t.edge_count(); ++f) {
            const Edge &a = t.edges[e], &b = t.edges[f];
            if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))
                throw DomainError(std::string(who) + ": parallel edges present");
        }
    if (!is_triangulation(t)) throw DomainError(std::string(who) + ": triangulation required");
}

std::vector<int> face_edges_sorted(const FaceWalk& f) {
    std::vector<int> es;
    for (int i = 0; i < f.length(); ++i) es.push_back(edge_of(f.dart_at(i)));
    std::sort(es.begin(), es.end());
    return es;
}

int face_with_edges(const FaceList& fl, const std::vector<int>& sorted_edges) {
    for (const auto& f : fl.faces)
        if (face_edges_sorted(f) == sorted_edges) return f.id;
    return -1;
}

Piece identity_piece(const EmbeddedGraph& g) {
    Piece p;
    p.graph = g;
    p.orig_vertex.resize(g.vertex_count);
    p.orig_edge.resize(g.edge_count());
    for (int v = 0; v < g.vertex_count; ++v) p.orig_vertex[v] = v;
    for (int e = 0; e < g.edge_count(); ++e) p.orig_edge[e] = e;
    p.root_face = -1;
    return p;
}

} // namespace

FaceDecomposition decompose_at_face(const EmbeddedGraph& t, int face_id) {
    require_simple_plane_triangulation(t, "decompose_at_face");
    FaceList tfl = trace_faces(t);
    if (face_id < 0 || face_id >= tfl.count())
        throw DomainError("decompose_at_face: face id out of range");

    FaceDecomposition out;
    Piece cur = identity_piece(t);
    // the root face's identity survives splits through its edge set
    std::vector<int> root_edges_t = face_edges_sorted(tfl.faces[face_id]);

    struct RawAttachment {
        Piece piece; // maps into t
    };
    std::vector<RawAttachment> raws;

    while (true) {
        auto seps = separating_3cycles(cur.graph);
        if (seps.empty()) break;
        FaceList cfl = trace_faces(cur.graph);
        // current id of the root face
        std::vector<int> root_edges_cur;
        {
            std::map<int, int> t2cur;
            for (int e = 0; e < cur.graph.edge_count(); ++e) t2cur[cur.orig_edge[e]] = e;
            for (int e : root_edges_t) root_edges_cur.push_back(t2cur.at(e));
            std::sort(root_edges_cur.begin(), root_edges_cur.end());
        }
        int root_cur = face_with_edges(cfl, root_edges_cur);
        if (root_cur < 0) throw StructureError("root face lost during decomposition");

        // split off the largest far side; largest means outermost
        int best = -1;
        size_t best_faces = 0;
        std::vector<std::pair<Piece, Piece>> splits;
        for (size_t i = 0; i < seps.size(); ++i) {
            auto pr = split_along(cur.graph, seps[i]);
            // identify the far piece: the one NOT containing the root face edges
            auto& a = pr.first;
            auto& b = pr.second;
            auto contains_root = [&](const Piece& p) {
                std::set<int> es(p.orig_edge.begin(), p.orig_edge.end());
                for (int e : root_edges_cur)
                    if (!es.count(e)) return false;
                return true;
            };
            bool ra = contains_root(a), rb = contains_root(b);
            if (ra == rb) throw StructureError("root face on both sides of a separating cycle");
            const Piece& far = ra ? b : a;
            size_t fc = trace_faces(far.graph).count();
            splits.push_back(std::move(pr));
            if (fc > best_faces) {
                best_faces = fc;
                best = static_cast<int>(i);
            }
        }
        auto& chosen = splits[best];
        auto contains_root = [&](const Piece& p) {
            std::set<int> es(p.orig_edge.begin(), p.orig_edge.end());
            for (int e : root_edges_cur)
                if (!es.count(e)) return false;
            return true;
        };
        Piece& near_piece = contains_root(chosen.first) ? chosen.first : chosen.second;
        Piece& far_piece = contains_root(chosen.first) ? chosen.second : chosen.first;

        // compose maps into t coordinates
        auto compose = [&](Piece& p) {
            for (int& v : p.orig_vertex) v = cur.orig_vertex[v];
            for (int& e : p.orig_edge) e = cur.orig_edge[e];
        };
        compose(near_piece);
        compose(far_piece);
        raws.push_back(RawAttachment{std::move(far_piece)});
        cur = std::move(near_piece);
    }

    // skeleton fixed; resolve face ids
    FaceList sfl = trace_faces(cur.graph);
    std::map<int, int> t2skel;
    for (int e = 0; e < cur.graph.edge_count(); ++e) t2skel[cur.orig_edge[e]] = e;
    {
        std::vector<int> re;
        for (int e : root_edges_t) re.push_back(t2skel.at(e));
        std::sort(re.begin(), re.end());
        out.skeleton_root = face_with_edges(sfl, re);
    }
    if (out.skeleton_root < 0) throw StructureError("root face missing from the skeleton");
    for (auto& raw : raws) {
        FaceList afl = trace_faces(raw.piece.graph);
        std::vector<int> boundary_t;
        for (int i = 0; i < afl.faces[raw.piece.root_face].length(); ++i)
            boundary_t.push_back(raw.piece.orig_edge[edge_of(afl.faces[raw.piece.root_face].dart_at(i))]);
        std::vector<int> boundary_skel;
        for (int e : boundary_t) boundary_skel.push_back(t2skel.at(e));
        std::sort(boundary_skel.begin(), boundary_skel.end());
        int sf = face_with_edges(sfl, boundary_skel);
        if (sf < 0) throw StructureError("attachment triangle is not a skeleton face");
        out.attachments.push_back(FaceDecomposition::Part{std::move(raw.piece), sf});
    }
    out.skeleton = std::move(cur);
    return out;
}

std::optional<QEDecomposition> is_quasi_eulerian(const EmbeddedGraph& t, int face_id) {
    FaceDecomposition dec = decompose_at_face(t, face_id);
    if (!is_eulerian(dec.skeleton.graph)) return std::nullopt;

    FaceTwoColoring psi = face_2coloring(dec.skeleton.graph);
    if (psi.rb[dec.skeleton_root] != 0)
        for (auto& c : psi.rb) c ^= 1;

    QEDecomposition out;
    out.skeleton = dec.skeleton.graph;
    out.skeleton_parent_vertex = dec.skeleton.orig_vertex;
    out.root_face = dec.skeleton_root;
    out.face_rb = psi.rb;
    for (auto& part : dec.attachments) {
        QEDecomposition::Attached a;
        a.skeleton_face = part.skeleton_face;
        a.graph = part.piece.graph;
        a.parent_vertex = part.piece.orig_vertex;
        a.pasted_face = part.piece.root_face;
        if (psi.rb[part.skeleton_face] == 0) {
            out.red_attachments.push_back(std::move(a));
        } else {
            auto child = is_quasi_eulerian(a.graph, a.pasted_face);
            if (!child) return std::nullopt;
            out.blue_attachments.push_back(std::move(a));
            out.blue_children.push_back(std::move(*child));
        }
    }
    return out;
}

EmbeddedGraph replay(const QEDecomposition& d) {
    EmbeddedGraph g = d.skeleton;
    // paste attachments back by vertex identity in parent coordinates
    std::map<int, int> parent_to_g;
    for (int v = 0; v < g.vertex_count; ++v) parent_to_g[d.skeleton_parent_vertex[v]] = v;

    auto paste_one = [&](const QEDecomposition::Attached& a) {
        // locate the current face carrying the attachment triangle
        FaceList gfl = trace_faces(g);
        FaceList afl = trace_faces(a.graph);
        std::set<int> triangle_parent;
        std::vector<std::pair<int, int>> corr;
        for (int i = 0; i < afl.faces[a.pasted_face].length(); ++i) {
            int av = a.graph.dart_vertex(afl.faces[a.pasted_face].dart_at(i));
            triangle_parent.insert(a.parent_vertex[av]);
            corr.push_back({av, parent_to_g.at(a.parent_vertex[av])});
        }
        int host_face = -1;
        for (const auto& f : gfl.faces) {
            std::set<int> vs;
            for (int i = 0; i < f.length(); ++i) vs.insert(g.dart_vertex(f.dart_at(i)));
            std::set<int> parent_vs;
            bool all_known = true;
            for (int v : vs) {
                bool found = false;
                for (auto [pv, gv] : parent_to_g)
                    if (gv == v) {
                        parent_vs.insert(pv);
                        found = true;
                    }
                all_known &= found;
            }
            if (all_known && parent_vs == triangle_parent) {
                host_face = f.id;
                break;
            }
        }
        if (host_face < 0) throw StructureError("replay: attachment face not found");
        PasteResult pr = paste_by_correspondence(g, host_face, a.graph, a.pasted_face, corr);
        g = std::move(pr.graph);
    };

    for (const auto& a : d.red_attachments) paste_one(a);
    for (size_t i = 0; i < d.blue_attachments.size(); ++i) paste_one(d.blue_attachments[i]);
    return g;
}

bool qe_oracle(const EmbeddedGraph& t, int face_id) {
    require_simple_plane_triangulation(t, "qe_oracle");
    FaceList fl = trace_faces(t);
    std::set<int> fverts;
    for (int i = 0; i < fl.faces[face_id].length(); ++i)
        fverts.insert(t.dart_vertex(fl.faces[face_id].dart_at(i)));
    std::vector<int> free_vs;
    for (int v = 0; v < t.vertex_count; ++v)
        if (!fverts.count(v)) free_vs.push_back(v);
    if (free_vs.size() > 24) throw BudgetExceeded("qe_oracle: too many vertices for exhaustion");

    Coloring c;
    c.color.assign(t.vertex_count, BLACK);
    for (uint64_t mask = 0; mask < (1ull << free_vs.size()); ++mask) {
        for (size_t i = 0; i < free_vs.size(); ++i)
            c.color[free_vs[i]] = (mask >> i) & 1 ? WHITE : BLACK;
        if (monochromatic_faces(t, fl, c).size() == 1) return false; // near-weak extension found
    }
    return true;
}

Coloring two_mono_coloring(const EmbeddedGraph& e, int red_face, int blue_face) {
    require_simple_plane_triangulation(e, "two_mono_coloring");
    if (!is_eulerian(e)) throw DomainError("two_mono_coloring: even degrees required");
    if (!separating_3cycles(e).empty())
        throw DomainError("two_mono_coloring: separating 3-cycle present");
    FaceTwoColoring psi = face_2coloring(e);
    if (red_face == blue_face || psi.rb[red_face] == psi.rb[blue_face])
        throw DomainError("two_mono_coloring: faces must have different colors");

    DualGraph d = dual(e);
    auto adj = d.adjacency();
    // delete both closed neighborhoods, then match the rest
    std::vector<char> alive(d.face_count, 1);
    alive[red_face] = alive[blue_face] = 0;
    for (auto [w, ed] : adj[red_face]) alive[w] = 0;
    for (auto [w, ed] : adj[blue_face]) alive[w] = 0;

    std::vector<int> chosen;
    std::function<bool()> solve = [&]() -> bool {
        int x = -1;
        for (int i = 0; i < d.face_count; ++i)
            if (alive[i]) {
                x = i;
                break;
            }
        if (x < 0) return true;
        for (auto [y, ed] : adj[x]) {
            if (y == x || !alive[y]) continue;
            alive[x] = alive[y] = 0;
            chosen.push_back(ed);
            if (solve()) return true;
            chosen.pop_back();
            alive[x] = alive[y] = 1;
        }
        return false;
    };
    if (!solve())
        throw TheoremViolation("matching after closed-neighborhood deletion must exist");
    for (auto [w, ed] : adj[red_face]) chosen.push_back(ed);
    for (auto [w, ed] : adj[blue_face]) chosen.push_back(ed);
    EdgeSubset factor = EdgeSubset::of(chosen);

    Coloring c = factor_to_coloring(e, factor);
    auto mono = monochromatic_faces(e, c);
    std::vector<int> want{std::min(red_face, blue_face), std::max(red_face, blue_face)};
    if (mono != want)
        throw TheoremViolation("two_mono_coloring produced the wrong monochromatic faces");
    return c;
}

namespace {

// near-weak coloring of an even-degree-free skeleton: bicritical matching step
Coloring near_weak_base(const EmbeddedGraph& e, int face_id) {
    DualGraph d = dual(e);
    std::vector<uint8_t> cls;
    if (dual_is_bipartite(d, &cls))
        throw StructureError("near_weak_base: dual is bipartite (skeleton is even)");
    auto adj = d.adjacency();
    std::vector<std::pair<int, int>> nbrs = adj[face_id]; // (face, edge), sorted
    if (nbrs.size() != 3) throw StructureError("near_weak_base: dual is not cubic at the face");
    int ustar = nbrs[0].first, vstar = nbrs[1].first;

    std::vector<char> alive(d.face_count, 1);
    alive[ustar] = alive[vstar] = 0;
    std::vector<int> chosen;
    std::function<bool()> solve = [&]() -> bool {
        int x = -1;
        for (int i = 0; i < d.face_count; ++i)
            if (alive[i]) {
                x = i;
                break;
            }
        if (x < 0) return true;
        for (auto [y, ed] : adj[x]) {
            if (y == x || !alive[y]) continue;
            alive[x] = alive[y] = 0;
            chosen.push_back(ed);
            if (solve()) return true;
            chosen.pop_back();
            alive[x] = alive[y] = 1;
        }
        return false;
    };
    if (!solve()) throw TheoremViolation("bicritical dual lost its perfect matching");
    // the matching pairs the face with its third neighbor; completing the
    // star at the face gives the single degree-3 dual vertex
    bool has_fw = false;
    for (int ed : chosen) {
        if ((d.ends[ed][0] == face_id && d.ends[ed][1] == nbrs[2].first) ||
            (d.ends[ed][1] == face_id && d.ends[ed][0] == nbrs[2].first))
            has_fw = true;
    }
    if (!has_fw) throw TheoremViolation("matching avoided the forced star edge");
    chosen.push_back(nbrs[0].second);
    chosen.push_back(nbrs[1].second);
    EdgeSubset factor = EdgeSubset::of(chosen);
    Coloring c = factor_to_coloring(e, factor);
    if (monochromatic_faces(e, c) != std::vector<int>{face_id})
        throw TheoremViolation("bicritical construction produced the wrong monochromatic face");
    return c;
}

// write piece colors into the host coloring
void merge_colors(Coloring& into, const Coloring& piece_colors, const std::vector<int>& parent_vertex) {
    for (int pv = 0; pv < piece_colors.size(); ++pv) into.color[parent_vertex[pv]] = piece_colors[pv];
}

PartialColoring boundary_partial(const EmbeddedGraph& piece, int root_face, const Coloring& host_colors,
                                 const std::vector<int>& parent_vertex) {
    PartialColoring part = empty_partial(piece.vertex_count);
    FaceList fl = trace_faces(piece);
    for (int i = 0; i < fl.faces[root_face].length(); ++i) {
        int pv = piece.dart_vertex(fl.faces[root_face].dart_at(i));
        part[pv] = static_cast<int8_t>(host_colors[parent_vertex[pv]]);
    }
    return part;
}

} // namespace

Coloring extend_mono_to_near_weak(const EmbeddedGraph& t, int face_id, uint8_t mono_color) {
    FaceDecomposition dec = decompose_at_face(t, face_id);
    const EmbeddedGraph& E = dec.skeleton.graph;

    Coloring skel_colors;
    int handled_attachment = -1;
    Coloring handled_colors;
    if (!is_eulerian(E)) {
        skel_colors = near_weak_base(E, dec.skeleton_root);
    } else {
        FaceTwoColoring psi = face_2coloring(E);
        if (psi.rb[dec.skeleton_root] != 0)
            for (auto& c : psi.rb) c ^= 1;
        for (size_t i = 0; i < dec.attachments.size() && handled_attachment < 0; ++i) {
            const auto& part = dec.attachments[i];
            if (psi.rb[part.skeleton_face] != 1) continue; // blue faces only
            if (!is_quasi_eulerian(part.piece.graph, part.piece.root_face))
                handled_attachment = static_cast<int>(i);
        }
        if (handled_attachment < 0)
            throw DomainError("extend_mono_to_near_weak: input is quasi-Eulerian at the face");
        const auto& part = dec.attachments[handled_attachment];
        skel_colors = two_mono_coloring(E, dec.skeleton_root, part.skeleton_face);
        // recurse into the defective attachment with its pasted face mono
        FaceList afl = trace_faces(part.piece.graph);
        int bv = part.piece.graph.dart_vertex(afl.faces[part.piece.root_face].dart_at(0));
        // color of the pasted triangle under the skeleton coloring
        std::map<int, int> parent_to_skel;
        for (int v = 0; v < E.vertex_count; ++v) parent_to_skel[dec.skeleton.orig_vertex[v]] = v;
        uint8_t bcol = skel_colors[parent_to_skel.at(part.piece.orig_vertex[bv])];
        handled_colors = extend_mono_to_near_weak(part.piece.graph, part.piece.root_face, bcol);
    }

    Coloring out;
    out.color.assign(t.vertex_count, BLACK);
    merge_colors(out, skel_colors, dec.skeleton.orig_vertex);
    if (handled_attachment >= 0)
        merge_colors(out, handled_colors, dec.attachments[handled_attachment].piece.orig_vertex);
    for (size_t i = 0; i < dec.attachments.size(); ++i) {
        if (static_cast<int>(i) == handled_attachment) continue;
        const auto& part = dec.attachments[i];
        PartialColoring part_colors =
            boundary_partial(part.piece.graph, part.piece.root_face, out, part.piece.orig_vertex);
        Coloring pc = extend_weak(part.piece.graph, part.piece.root_face, part_colors);
        merge_colors(out, pc, part.piece.orig_vertex);
    }

    auto mono = monochromatic_faces(t, out);
    if (mono != std::vector<int>{face_id})
        throw TheoremViolation("near-weak extension has the wrong monochromatic face set");
    if (out[t.dart_vertex(trace_faces(t).faces[face_id].dart_at(0))] != mono_color)
        out = out.flipped();
    return out;
}

Coloring extend_mono_to_two_mono(const EmbeddedGraph& t, int face_id, uint8_t mono_color) {
    FaceDecomposition dec = decompose_at_face(t, face_id);
    const EmbeddedGraph& E = dec.skeleton.graph;
    if (!is_eulerian(E)) throw DomainError("extend_mono_to_two_mono: input is not quasi-Eulerian");
    FaceTwoColoring psi = face_2coloring(E);
    if (psi.rb[dec.skeleton_root] != 0)
        for (auto& c : psi.rb) c ^= 1;
    // verify membership: blue attachments must recurse
    for (const auto& part : dec.attachments)
        if (psi.rb[part.skeleton_face] == 1 &&
            !is_quasi_eulerian(part.piece.graph, part.piece.root_face))
            throw DomainError("extend_mono_to_two_mono: input is not quasi-Eulerian");

    // lowest blue face of the skeleton carries the second monochromatic face
    int b = -1;
    for (int f = 0; f < static_cast<int>(psi.rb.size()); ++f)
        if (psi.rb[f] == 1) {
            b = f;
            break;
        }
    if (b < 0) throw StructureError("even triangulation without a blue face");
    Coloring skel_colors = two_mono_coloring(E, dec.skeleton_root, b);

    Coloring out;
    out.color.assign(t.vertex_count, BLACK);
    merge_colors(out, skel_colors, dec.skeleton.orig_vertex);

    int handled_attachment = -1;
    for (size_t i = 0; i < dec.attachments.size(); ++i) {
        if (dec.attachments[i].skeleton_face == b) {
            handled_attachment = static_cast<int>(i);
            break;
        }
    }
    if (handled_attachment >= 0) {
        const auto& part = dec.attachments[handled_attachment];
        FaceList afl = trace_faces(part.piece.graph);
        int bv = part.piece.graph.dart_vertex(afl.faces[part.piece.root_face].dart_at(0));
        std::map<int, int> parent_to_skel;
        for (int v = 0; v < E.vertex_count; ++v) parent_to_skel[dec.skeleton.orig_vertex[v]] = v;
        uint8_t bcol = skel_colors[parent_to_skel.at(part.piece.orig_vertex[bv])];
        Coloring pc = extend_mono_to_two_mono(part.piece.graph, part.piece.root_face, bcol);
        merge_colors(out, pc, part.piece.orig_vertex);
    }
    for (size_t i = 0; i < dec.attachments.size(); ++i) {
        if (static_cast<int>(i) == handled_attachment) continue;
        const auto& part = dec.attachments[i];
        PartialColoring part_colors =
            boundary_partial(part.piece.graph, part.piece.root_face, out, part.piece.orig_vertex);
        Coloring pc = extend_weak(part.piece.graph, part.piece.root_face, part_colors);
        merge_colors(out, pc, part.piece.orig_vertex);
    }

    auto mono = monochromatic_faces(t, out);
    if (mono.size() != 2 || (mono[0] != face_id && mono[1] != face_id))
        throw TheoremViolation("two-mono extension has the wrong monochromatic face set");
    if (out[t.dart_vertex(trace_faces(t).faces[face_id].dart_at(0))] != mono_color)
        out = out.flipped();
    return out;
}

} // namespace ppquad
