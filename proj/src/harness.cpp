#include "ppquad/harness.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <sstream>

#include "ppquad/coloring_construct.hpp"
#include "ppquad/quasi_eulerian.hpp"

namespace ppquad {

int enumeration_budget() {
    if (const char* env = std::getenv("PPQUAD_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 6) return v;
    }
    return 8;
}

// --- exhaustive generation ------------------------------------------------------

namespace {

// triangulating face sets of a labeled graph: every edge on exactly two
// chosen triangles; the resulting closed pseudo-surface has Euler
// characteristic one, so a single-cycle link at every vertex forces the
// projective plane
struct FaceSetSearch {
    int n;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> edge_triangles;    // edge -> triangle indices
    std::vector<std::array<int, 3>> triangle_edges;  // triangle -> edge ids
    std::vector<std::array<int, 3>> triangle_verts;
    std::vector<int> count;
    std::vector<char> used;
    std::vector<std::vector<int>> found; // chosen triangle index lists
    std::vector<int> chosen;

    void run(int m) {
        int e = -1;
        for (int i = 0; i < m; ++i)
            if (count[i] < 2) {
                e = i;
                break;
            }
        if (e < 0) {
            found.push_back(chosen);
            return;
        }
        int need = 2 - count[e];
        const auto& cands = edge_triangles[e];
        if (need == 1) {
            for (int t : cands) {
                if (used[t]) continue;
                bool ok = true;
                for (int te : triangle_edges[t]) ok &= count[te] < 2;
                if (!ok) continue;
                take(t);
                run(m);
                untake(t);
            }
        } else {
            for (size_t i = 0; i < cands.size(); ++i) {
                int t1 = cands[i];
                if (used[t1]) continue;
                bool ok1 = true;
                for (int te : triangle_edges[t1]) ok1 &= count[te] < 2;
                if (!ok1) continue;
                take(t1);
                for (size_t j = i + 1; j < cands.size(); ++j) {
                    int t2 = cands[j];
                    if (used[t2]) continue;
                    bool ok2 = true;
                    for (int te : triangle_edges[t2]) ok2 &= count[te] < 2;
                    if (!ok2) continue;
                    take(t2);
                    run(m);
                    untake(t2);
                }
                untake(t1);
            }
        }
    }
    void take(int t) {
        used[t] = 1;
        for (int te : triangle_edges[t]) count[te]++;
        chosen.push_back(t);
    }
    void untake(int t) {
        used[t] = 0;
        for (int te : triangle_edges[t]) count[te]--;
        chosen.pop_back();
    }
};

void triangulations_of_graph(int n, const std::vector<std::array<int, 2>>& edges,
                             std::set<std::string>& seen, std::vector<EmbeddedGraph>& out) {
    const int m = static_cast<int>(edges.size());
    std::vector<uint32_t> adj(n, 0);
    std::vector<int> eid(n * n, -1);
    for (int e = 0; e < m; ++e) {
        adj[edges[e][0]] |= 1u << edges[e][1];
        adj[edges[e][1]] |= 1u << edges[e][0];
        eid[edges[e][0] * n + edges[e][1]] = e;
        eid[edges[e][1] * n + edges[e][0]] = e;
    }
    for (int e = 0; e < m; ++e)
        if (__builtin_popcount(adj[edges[e][0]] & adj[edges[e][1]]) < 2) return;
    FaceSetSearch fs;
    fs.n = n;
    fs.edges = edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!((adj[a] >> b) & 1)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!((adj[a] >> c) & 1) || !((adj[b] >> c) & 1)) continue;
                fs.triangle_verts.push_back({a, b, c});
                fs.triangle_edges.push_back({eid[a * n + b], eid[b * n + c], eid[a * n + c]});
            }
        }
    fs.edge_triangles.assign(m, {});
    for (size_t t = 0; t < fs.triangle_edges.size(); ++t)
        for (int te : fs.triangle_edges[t]) fs.edge_triangles[te].push_back(static_cast<int>(t));
    fs.count.assign(m, 0);
    fs.used.assign(fs.triangle_verts.size(), 0);
    fs.run(m);

    for (const auto& sel : fs.found) {
        std::vector<std::vector<int>> walks;
        for (int t : sel)
            walks.push_back({fs.triangle_verts[t][0], fs.triangle_verts[t][1], fs.triangle_verts[t][2]});
        EmbeddedGraph g;
        try {
            g = from_face_walks(n, walks);
        } catch (const StructureError&) {
            continue; // vertex link is not a single cycle
        }
        if (g.surface != Surface::ProjectivePlane) continue;
        if (!validate(g).valid()) continue;
        std::string key = canonical_form(g);
        if (seen.insert(key).second) out.push_back(g);
    }
}

std::vector<EmbeddedGraph> enumerate_exact(int n) {
    std::vector<EmbeddedGraph> out;
    std::set<std::string> seen;
    const int m_target = 3 * n - 3;
    const int full = n * (n - 1) / 2;
    const int comp = full - m_target;
    if (comp < 0) return out;

    std::vector<std::array<int, 2>> all_pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all_pairs.push_back({a, b});

    // iterate complements of size comp
    std::vector<int> idx(comp);
    for (int i = 0; i < comp; ++i) idx[i] = i;
    auto run_one = [&](const std::vector<char>& removed) {
        std::vector<int> deg(n, n - 1);
        for (int i = 0; i < full; ++i)
            if (removed[i]) {
                deg[all_pairs[i][0]]--;
                deg[all_pairs[i][1]]--;
            }
        for (int v = 0; v < n; ++v)
            if (deg[v] < 3) return;
        // every class has a labeling with non-increasing degrees
        for (int v = 0; v + 1 < n; ++v)
            if (deg[v] < deg[v + 1]) return;
        std::vector<std::array<int, 2>> edges;
        for (int i = 0; i < full; ++i)
            if (!removed[i]) edges.push_back(all_pairs[i]);
        triangulations_of_graph(n, edges, seen, out);
    };
    if (comp == 0) {
        std::vector<char> removed(full, 0);
        run_one(removed);
        return out;
    }
    while (true) {
        std::vector<char> removed(full, 0);
        for (int i : idx) removed[i] = 1;
        run_one(removed);
        int pos = comp - 1;
        while (pos >= 0 && idx[pos] == full - comp + pos) pos--;
        if (pos < 0) break;
        idx[pos]++;
        for (int k = pos + 1; k < comp; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
}

} // namespace

const std::vector<EmbeddedGraph>& pp_triangulations(int n) {
    static std::map<int, std::vector<EmbeddedGraph>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_exact(n)).first;
    return it->second;
}

std::vector<EmbeddedGraph> enumerate_pp_triangulations(int max_n) {
    if (max_n > enumeration_budget())
        throw BudgetExceeded("enumeration beyond PPQUAD_MAX_N");
    std::vector<EmbeddedGraph> out;
    for (int n = 6; n <= max_n; ++n)
        for (const auto& g : pp_triangulations(n)) out.push_back(g);
    return out;
}

// --- vertex splitting -----------------------------------------------------------

std::vector<EmbeddedGraph> vertex_splittings(const EmbeddedGraph& t) {
    std::vector<EmbeddedGraph> out;
    for (int v = 0; v < t.vertex_count; ++v) {
        int deg = t.degree(v);
        if (deg < 3) continue;
        for (int i = 0; i < deg; ++i) {
            for (int j = i + 1; j < deg; ++j) {
                EmbeddedGraph g = t;
                // make the spokes positive so both halves inherit plus signs
                {
                    std::vector<int> flips;
                    for (DartId d : g.rotation[v])
                        if (g.edges[edge_of(d)].sign < 0) flips.push_back(g.other_end(edge_of(d), v));
                    for (int w : flips) flip_vertex(g, w);
                }
                std::vector<DartId> rot = g.rotation[v];
                auto hinge_edge = [&](int pos) { return edge_of(rot[pos]); };
                int ui = g.other_end(hinge_edge(i), v);
                int uj = g.other_end(hinge_edge(j), v);
                if (ui == uj) continue;

                int v2 = g.vertex_count; // the split-off companion of v
                g.vertex_count++;
                int bridge = g.add_edge(v, v2, +1);
                // v keeps arc [i..j]; v2 takes [j..i]; both keep the hinges
                std::vector<DartId> keep, move;
                for (int k = i; ; k = (k + 1) % deg) {
                    keep.push_back(rot[k]);
                    if (k == j) break;
                }
                for (int k = j; ; k = (k + 1) % deg) {
                    move.push_back(rot[k]);
                    if (k == i) break;
                }
                int e_ui = g.add_edge(std::min(v2, ui), std::max(v2, ui), +1);
                int e_uj = g.add_edge(std::min(v2, uj), std::max(v2, uj), +1);
                // new rotations: hinges already hold an arc end on each side
                g.rotation[v] = keep;
                g.rotation[v].push_back(dart(bridge, 0));
                g.rotation.push_back({});
                auto dart_at = [&](int e, int w) { return g.edges[e].u == w ? dart(e, 0) : dart(e, 1); };
                // reattach the moved arc to v2
                for (DartId d : move) {
                    int e = edge_of(d);
                    if (g.edges[e].u == v)
                        g.edges[e].u = v2;
                    else
                        g.edges[e].v = v2;
                    g.rotation[v2].push_back(d);
                }
                // the hinge edges were duplicated: the old hinge spokes stay on v,
                // fresh edges join the hinges to v2; fix the two arc ends
                g.rotation[v2][0] = dart_at(e_uj, v2);
                // the moved arc began with the old v-uj dart; restore that edge to v
                {
                    int e = hinge_edge(j);
                    if (g.edges[e].u == v2)
                        g.edges[e].u = v;
                    else
                        g.edges[e].v = v;
                }
                g.rotation[v2].back() = dart_at(e_ui, v2);
                {
                    int e = hinge_edge(i);
                    if (g.edges[e].u == v2)
                        g.edges[e].u = v;
                    else
                        g.edges[e].v = v;
                }
                g.rotation[v2].push_back(dart(bridge, 1));

                // splice the second hinge darts next to the survivors
                auto splice_hinge = [&](int u, int old_e, int new_e, int arc_neighbor) {
                    auto& rot_u = g.rotation[u];
                    int p = -1;
                    for (int k = 0; k < static_cast<int>(rot_u.size()); ++k)
                        if (rot_u[k] == dart_at(old_e, u)) p = k;
                    int q = (p + static_cast<int>(rot_u.size()) - 1) % rot_u.size();
                    int qe = edge_of(rot_u[q]);
                    int q_other = g.other_end(qe, u);
                    bool pred_is_v_side = q_other == arc_neighbor;
                    std::vector<DartId> repl;
                    if (pred_is_v_side)
                        repl = {dart_at(old_e, u), dart_at(new_e, u)};
                    else
                        repl = {dart_at(new_e, u), dart_at(old_e, u)};
                    rot_u.erase(rot_u.begin() + p);
                    rot_u.insert(rot_u.begin() + p, repl.begin(), repl.end());
                };
                // arc neighbor of ui on the v side: next position after i
                int ui_vside = g.other_end(edge_of(rot[(i + 1) % deg]), v);
                int uj_vside = g.other_end(edge_of(rot[(j + deg - 1) % deg]), v);
                splice_hinge(ui, hinge_edge(i), e_ui, ui_vside);
                splice_hinge(uj, hinge_edge(j), e_uj, uj_vside);

                auto rep = validate(g);
                if (!rep.valid()) continue;
                if (!is_triangulation(g)) continue;
                bool simple = true;
                for (int e = 0; e < g.edge_count() && simple; ++e) {
                    if (g.edges[e].is_loop()) simple = false;
                    for (int e2 = e + 1; e2 < g.edge_count() && simple; ++e2) {
                        const Edge &a = g.edges[e], &b = g.edges[e2];
                        if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)) simple = false;
                    }
                }
                if (simple) out.push_back(g);
            }
        }
    }
    return out;
}

bool has_contractible_edge(const EmbeddedGraph& t) {
    auto adj = simple_adjacency(t);
    for (const Edge& e : t.edges) {
        std::vector<int> common;
        std::set_intersection(adj[e.u].begin(), adj[e.u].end(), adj[e.v].begin(), adj[e.v].end(),
                              std::back_inserter(common));
        if (common.size() == 2) return true;
    }
    return false;
}

// --- families -------------------------------------------------------------------

EmbeddedGraph paste_family(const std::vector<std::pair<int, EmbeddedGraph>>& assignments) {
    EmbeddedGraph base = k6_projective();
    FaceList base_faces = trace_faces(base);
    std::vector<std::set<int>> triples;
    for (const auto& f : base_faces.faces) {
        std::set<int> tri;
        for (int i = 0; i < 3; ++i) tri.insert(base.dart_vertex(f.dart_at(i)));
        triples.push_back(tri);
    }
    EmbeddedGraph g = base;
    for (const auto& [face_index, guest] : assignments) {
        if (face_index < 0 || face_index >= 10) throw DomainError("paste_family: face index out of range");
        if (guest.vertex_count == 0) continue;
        FaceList fl = trace_faces(g);
        int target = -1;
        for (const auto& f : fl.faces) {
            if (f.length() != 3) continue;
            std::set<int> tri;
            for (int i = 0; i < 3; ++i) tri.insert(g.dart_vertex(f.dart_at(i)));
            if (tri == triples[face_index]) target = f.id;
        }
        if (target < 0) throw DomainError("paste_family: face already consumed");
        g = paste(g, target, guest, 0).graph;
    }
    return g;
}

std::vector<EmbeddedGraph> quasi_eulerian_guest_pool() {
    std::vector<EmbeddedGraph> pool;
    EmbeddedGraph oc = octahedron();
    pool.push_back(oc); // even, no separating 3-cycles
    FaceTwoColoring psi = face_2coloring(oc);
    int red2 = -1, blue = -1;
    for (int f = 1; f < 8; ++f) {
        if (psi.rb[f] == psi.rb[0] && red2 < 0) red2 = f;
        if (psi.rb[f] != psi.rb[0] && blue < 0) blue = f;
    }
    // arbitrary triangulation on another red face
    pool.push_back(paste(oc, red2, k4(), 0).graph);
    // recursive member on a blue face
    pool.push_back(paste(oc, blue, oc, 0).graph);
    // deeper: red K4 and blue octahedron together
    EmbeddedGraph two = paste(oc, red2, k4(), 0).graph;
    {
        FaceList fl = trace_faces(two);
        FaceList ofl = trace_faces(oc);
        std::set<int> blue_tri;
        for (int i = 0; i < 3; ++i) blue_tri.insert(oc.dart_vertex(ofl.faces[blue].dart_at(i)));
        for (const auto& f : fl.faces) {
            std::set<int> tri;
            for (int i = 0; i < f.length(); ++i) tri.insert(two.dart_vertex(f.dart_at(i)));
            if (tri == blue_tri) {
                pool.push_back(paste(two, f.id, oc, 0).graph);
                break;
            }
        }
    }
    for (const auto& g : pool) {
        auto qe = is_quasi_eulerian(g, 0);
        if (!qe) throw TheoremViolation("guest pool member is not quasi-Eulerian at face 0");
    }
    return pool;
}

std::vector<EmbeddedGraph> x_pattern_instances() {
    std::vector<EmbeddedGraph> out;
    for (const auto& g : pp_triangulations(7)) {
        if (has_k6_subgraph(g)) continue;
        if (!find_x_subgraph(g)) continue;
        auto adj = simple_adjacency(g);
        bool pattern = false;
        for (int v = 0; v < g.vertex_count && !pattern; ++v) {
            if (g.degree(v) != 5) continue;
            for (int u : adj[v]) {
                if (u <= v || g.degree(u) != 5) continue;
                std::vector<int> common;
                std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                                      std::back_inserter(common));
                if (common.size() == 3) pattern = true;
            }
        }
        if (pattern) out.push_back(g);
    }
    return out;
}

// --- oracles --------------------------------------------------------------------

bool sbq_oracle(const EmbeddedGraph& g) {
    DualGraph d = dual(g);
    bool found = false;
    perfect_matchings(d, [&](const EdgeSubset& m) {
        if (parity_bipartite(g, m)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool weak_oracle(const EmbeddedGraph& g) {
    if (g.vertex_count - 1 > 24) throw BudgetExceeded("weak_oracle: beyond the coloring budget");
    FaceList fl = trace_faces(g);
    Coloring c;
    c.color.assign(g.vertex_count, BLACK);
    for (uint64_t mask = 0; mask < (1ull << (g.vertex_count - 1)); ++mask) {
        for (int v = 1; v < g.vertex_count; ++v) c.color[v] = (mask >> (v - 1)) & 1;
        if (monochromatic_faces(g, fl, c).empty()) return true;
    }
    return false;
}

int maxcut_oracle(const EmbeddedGraph& g) {
    return max_cut(g).size;
}

// --- corpus and report -----------------------------------------------------------

bool Corpus::add(const std::string& name, const EmbeddedGraph& g) {
    auto rep = validate(g);
    if (!rep.valid()) throw DomainError("corpus instance '" + name + "' is invalid: " + rep.joined());
    std::string key = canonical_form(g);
    if (canonical_index.count(key)) return false;
    canonical_index[key] = static_cast<int>(instances.size());
    instances.push_back({name, g});
    return true;
}

Corpus builtin_corpus() {
    Corpus c;
    c.add("k4", k4());
    c.add("octahedron", octahedron());
    c.add("k6", k6_projective());
    c.add("k6_minus_edge_filled", k6_minus_edge_filled());
    c.add("k6_k4_face0", paste_family({{0, k4()}}));
    c.add("k6_octahedron_face0", paste_family({{0, octahedron()}}));
    c.add("k6_octahedra_156", paste_family({{1, octahedron()}, {5, octahedron()}, {6, octahedron()}}));
    auto xs = x_pattern_instances();
    for (size_t i = 0; i < xs.size(); ++i) c.add("x_pattern_" + std::to_string(i), xs[i]);
    return c;
}

namespace {

bool parity_sweep(const EmbeddedGraph& g) {
    DualGraph d = dual(g);
    bool ok = true;
    perfect_matchings(d, [&](const EdgeSubset& m) {
        auto q = quadrangulation_from(g, m);
        bool bfs = is_bipartite(q.graph).has_value();
        if (parity_bipartite(g, m) != bfs) ok = false;
        return ok;
    });
    return ok;
}

bool lifting_sweep(const EmbeddedGraph& g) {
    for (const auto& spec : applicable_contractions(g)) {
        ContractionResult res = apply(g, spec);
        DualGraph dc = dual(res.graph);
        bool ok = true;
        perfect_matchings(dc, [&](const EdgeSubset& mp) {
            EdgeSubset m = lift_matching(g, res, mp);
            auto q = quadrangulation_from(g, m);
            if (!is_quadrangulation(q.graph)) ok = false;
            bool before = is_bipartite(q.graph).has_value();
            bool after = is_bipartite(quadrangulation_from(res.graph, mp).graph).has_value();
            if (before != after) ok = false;
            return ok;
        });
        if (!ok) return false;
    }
    return true;
}

bool monotri_sweep(const EmbeddedGraph& g) {
    if (!is_eulerian(g)) return true;
    if (g.vertex_count - 1 > 20) return true;
    FaceList fl = trace_faces(g);
    Coloring c;
    c.color.assign(g.vertex_count, BLACK);
    for (uint64_t mask = 0; mask < (1ull << (g.vertex_count - 1)); ++mask) {
        for (int v = 1; v < g.vertex_count; ++v) c.color[v] = (mask >> (v - 1)) & 1;
        if (monochromatic_faces(g, fl, c).size() % 2 != 0) return false;
    }
    return true;
}

bool qe_sweep(const EmbeddedGraph& g) {
    int faces = trace_faces(g).count();
    for (int f = 0; f < faces; ++f)
        if (is_quasi_eulerian(g, f).has_value() != qe_oracle(g, f)) return false;
    return true;
}

} // namespace

Report cross_validate(const Corpus& corpus) {
    Report rep;
    std::ostringstream os;
    int checked = 0, agreements = 0;
    for (const auto& [name, g] : corpus.instances) {
        checked++;
        if (g.surface == Surface::ProjectivePlane && is_triangulation(g)) {
            Certificate cert = decide_sbq(g);
            bool verdict_has = cert.verdict == Verdict::HasSbq;
            bool oracle = sbq_oracle(g);
            bool weak = weak_oracle(g);
            int mc = maxcut_oracle(g);
            BoundResult b = bipartite_subgraph_bound(g);
            bool bound_ok = 3 * b.size >= 2 * g.edge_count() - 3 &&
                            ((3 * b.size == 2 * g.edge_count()) == verdict_has) &&
                            (verdict_has || b.size == mc);
            bool parity_ok = parity_sweep(g);
            bool lifting_ok = lifting_sweep(g);
            bool existence_ok = true;
            try {
                find_reducible(g);
            } catch (const TheoremViolation&) {
                existence_ok = false;
            }
            int defsum = 0;
            for (int v = 0; v < g.vertex_count; ++v) defsum += 6 - g.degree(v);
            existence_ok &= defsum == 6;
            bool near_ok = monochromatic_faces(g, near_weak_or_weak(g)).size() <= 1;

            bool agree = (verdict_has == oracle) && (verdict_has == weak) && bound_ok && parity_ok &&
                         lifting_ok && existence_ok && near_ok;
            agreements += agree;
            os << name << " " << (verdict_has ? "HAS_SBQ" : "NO_SBQ") << " "
               << (oracle ? "has" : "no") << " " << mc << " " << (bound_ok ? "yes" : "no") << " "
               << (parity_ok ? "yes" : "no") << "\n";
            if (!agree) {
                rep.ok = false;
                rep.failures.push_back(name + ":\n" + write_pem(g));
            }
        } else if (g.surface == Surface::Sphere && is_triangulation(g)) {
            bool qe_ok = qe_sweep(g);
            bool mono_ok = monotri_sweep(g);
            agreements += qe_ok && mono_ok;
            os << name << " PLANE " << (qe_ok ? "qe_agree" : "qe_disagree") << " - "
               << (mono_ok ? "yes" : "no") << " -\n";
            if (!(qe_ok && mono_ok)) {
                rep.ok = false;
                rep.failures.push_back(name + ":\n" + write_pem(g));
            }
        } else {
            os << name << " SKIPPED - - - -\n";
            agreements++;
        }
    }
    os << "checked " << checked << "\n";
    os << "agreements " << agreements << "\n";
    os << "agreement_rate " << (checked == 0 ? 100 : 100 * agreements / checked) << "%\n";
    os << (rep.ok ? "OK" : "FAILED") << "\n";
    rep.text = os.str();
    return rep;
}

} // namespace ppquad
