#include "ppquad/embedded_graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace ppquad {

std::string to_string(Surface s) {
    return s == Surface::Sphere ? "sphere" : "pp";
}

int EmbeddedGraph::add_edge(int u, int v, int sign) {
    edges.push_back(Edge{u, v, sign});
    return edge_count() - 1;
}

std::string ValidationReport::joined() const {
    std::string out;
    for (const auto& p : problems) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

std::vector<int> FaceList::boundary_vertices(const EmbeddedGraph& g, int f) const {
    std::vector<int> vs;
    for (int i = 0; i < faces[f].length(); ++i) vs.push_back(g.dart_vertex(faces[f].dart_at(i)));
    return vs;
}

// --- face tracing ------------------------------------------------------

namespace {

// position of each dart inside its vertex rotation
std::vector<int> dart_positions(const EmbeddedGraph& g) {
    std::vector<int> pos(g.dart_count(), -1);
    for (int v = 0; v < g.vertex_count; ++v)
        for (int i = 0; i < g.degree(v); ++i) pos[g.rotation[v][i]] = i;
    return pos;
}

int next_state(const EmbeddedGraph& g, const std::vector<int>& pos, int state) {
    DartId d = state >> 1;
    int bit = state & 1;
    int e = edge_of(d);
    int nbit = bit ^ (g.edges[e].sign < 0 ? 1 : 0);
    DartId t = twin(d);
    int w = g.dart_vertex(t);
    int deg = g.degree(w);
    int p = pos[t];
    int np = nbit == 0 ? (p + 1) % deg : (p + deg - 1) % deg;
    return 2 * g.rotation[w][np] + nbit;
}

// the state whose orbit traces the same face from the opposite side
int paired_state(const EmbeddedGraph& g, int state) {
    DartId d = state >> 1;
    int bit = state & 1;
    int e = edge_of(d);
    return 2 * twin(d) + (bit ^ 1 ^ (g.edges[e].sign < 0 ? 1 : 0));
}

} // namespace

FaceWalk trace_orbit(const EmbeddedGraph& g, int start_state) {
    auto pos = dart_positions(g);
    FaceWalk w;
    int cur = start_state;
    do {
        w.states.push_back(cur);
        cur = next_state(g, pos, cur);
    } while (cur != start_state);
    return w;
}

FaceWalk partner_walk(const EmbeddedGraph& g, const FaceWalk& f) {
    FaceWalk p = trace_orbit(g, paired_state(g, f.states[0]));
    p.id = f.id;
    return p;
}

FaceList trace_faces(const EmbeddedGraph& g) {
    const int S = 2 * g.dart_count();
    auto pos = dart_positions(g);
    std::vector<int> orbit_of(S, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < S; ++s) {
        if (orbit_of[s] >= 0) continue;
        std::vector<int> orb;
        int cur = s;
        while (orbit_of[cur] < 0) {
            orbit_of[cur] = static_cast<int>(orbits.size());
            orb.push_back(cur);
            cur = next_state(g, pos, cur);
        }
        if (cur != s) throw StructureError("face tracing produced a non-closed orbit");
        orbits.push_back(std::move(orb));
    }

    FaceList out;
    out.face_of_state.assign(S, -1);
    std::vector<int> face_of_orbit(orbits.size(), -1);
    for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
        if (face_of_orbit[o] >= 0) continue;
        int partner = orbit_of[paired_state(g, orbits[o][0])];
        if (partner == o) throw StructureError("face orbit paired with itself");
        if (orbits[partner].size() != orbits[o].size())
            throw StructureError("face orbit pair with mismatched lengths");
        int id = out.count();
        face_of_orbit[o] = id;
        face_of_orbit[partner] = id;
        FaceWalk w;
        w.id = id;
        w.states = orbits[o]; // orbit starts at its least state by construction
        out.faces.push_back(std::move(w));
    }
    for (int s = 0; s < S; ++s) out.face_of_state[s] = face_of_orbit[orbit_of[s]];
    return out;
}

int expected_euler_characteristic(Surface s) {
    return s == Surface::Sphere ? 2 : 1;
}

int euler_characteristic(const EmbeddedGraph& g) {
    return g.vertex_count - g.edge_count() + trace_faces(g).count();
}

// --- validation ----------------------------------------------------------

ValidationReport validate(const EmbeddedGraph& g) {
    ValidationReport r;
    if (g.vertex_count <= 0) {
        r.problems.push_back("graph has no vertices");
        return r;
    }
    if (static_cast<int>(g.rotation.size()) != g.vertex_count) {
        r.problems.push_back("rotation table size differs from vertex count");
        return r;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.u < 0 || ed.u >= g.vertex_count || ed.v < 0 || ed.v >= g.vertex_count)
            r.problems.push_back("edge " + std::to_string(e) + " has an endpoint out of range");
        if (ed.sign != 1 && ed.sign != -1)
            r.problems.push_back("edge " + std::to_string(e) + " has sign other than +-1");
    }
    if (!r.problems.empty()) return r;

    std::vector<int> seen(g.dart_count(), 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        for (DartId d : g.rotation[v]) {
            if (d < 0 || d >= g.dart_count()) {
                r.problems.push_back("rotation references dart out of range");
                return r;
            }
            seen[d]++;
            if (g.dart_vertex(d) != v)
                r.problems.push_back("dart " + std::to_string(d) + " listed at the wrong vertex");
        }
    }
    for (int d = 0; d < g.dart_count(); ++d)
        if (seen[d] != 1)
            r.problems.push_back("dart " + std::to_string(d) + " appears " + std::to_string(seen[d]) +
                                 " times in rotations");
    if (!r.problems.empty()) return r;

    if (!is_connected(g)) r.problems.push_back("graph is not connected");
    if (!r.problems.empty()) return r;

    int chi = euler_characteristic(g);
    if (chi != expected_euler_characteristic(g.surface))
        r.problems.push_back("Euler characteristic " + std::to_string(chi) + " does not match surface " +
                             to_string(g.surface));

    if (g.surface == Surface::Sphere && !is_orientable(g))
        r.problems.push_back("sphere embedding is not orientable");

    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.edges[e].is_loop()) continue;
        if (g.edges[e].sign > 0) {
            r.problems.push_back("edge " + std::to_string(e) + " is a contractible loop");
        } else if (!g.allow_noncontractible_loops) {
            r.problems.push_back("edge " + std::to_string(e) +
                                 " is a noncontractible loop but loops are not allowed");
        }
    }
    return r;
}

void require_valid(const EmbeddedGraph& g, const std::string& context) {
    auto r = validate(g);
    if (!r.valid()) throw DomainError(context + ": " + r.joined());
}

// --- signs ----------------------------------------------------------------

void flip_vertex(EmbeddedGraph& g, int v) {
    std::reverse(g.rotation[v].begin(), g.rotation[v].end());
    for (Edge& e : g.edges)
        if (!e.is_loop() && (e.u == v || e.v == v)) e.sign = -e.sign;
}

namespace {

// BFS orientation assignment: o[v]=1 means v must be flipped to make every
// tree edge positive. Root 0 stays unflipped.
std::vector<int> orientation_assignment(const EmbeddedGraph& g) {
    std::vector<int> o(g.vertex_count, -1);
    std::queue<int> q;
    o[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (DartId d : g.rotation[v]) {
            const Edge& e = g.edges[edge_of(d)];
            if (e.is_loop()) continue;
            int w = g.other_end(edge_of(d), v);
            if (o[w] < 0) {
                o[w] = o[v] ^ (e.sign < 0 ? 1 : 0);
                q.push(w);
            }
        }
    }
    return o;
}

} // namespace

EmbeddedGraph normalize_signs(const EmbeddedGraph& g) {
    EmbeddedGraph out = g;
    auto o = orientation_assignment(g);
    for (int v = 0; v < g.vertex_count; ++v)
        if (o[v] == 1) flip_vertex(out, v);
    return out;
}

bool is_orientable(const EmbeddedGraph& g) {
    auto o = orientation_assignment(g);
    for (const Edge& e : g.edges) {
        if (e.is_loop()) {
            if (e.sign < 0) return false;
            continue;
        }
        if ((o[e.u] ^ o[e.v] ^ (e.sign < 0 ? 1 : 0)) != 0) return false;
    }
    return true;
}

int cycle_sign(const EmbeddedGraph& g, const std::vector<int>& cycle_edges) {
    if (cycle_edges.empty()) throw DomainError("cycle_sign: empty edge sequence");
    // verify the sequence is a closed walk without repeated vertices
    if (cycle_edges.size() == 1) {
        if (!g.edges[cycle_edges[0]].is_loop()) throw DomainError("cycle_sign: single edge is not a loop");
    } else {
        int start = -1, cur = -1;
        std::vector<char> used(g.vertex_count, 0);
        const Edge& e0 = g.edges[cycle_edges[0]];
        const Edge& e1 = g.edges[cycle_edges[1]];
        if (e0.u == e1.u || e0.u == e1.v) {
            start = e0.v;
            cur = e0.u;
        } else if (e0.v == e1.u || e0.v == e1.v) {
            start = e0.u;
            cur = e0.v;
        } else {
            throw DomainError("cycle_sign: consecutive edges do not share a vertex");
        }
        used[start] = 1;
        for (size_t i = 1; i < cycle_edges.size(); ++i) {
            if (used[cur]) throw DomainError("cycle_sign: repeated vertex in cycle");
            used[cur] = 1;
            const Edge& e = g.edges[cycle_edges[i]];
            if (e.u == cur)
                cur = e.v;
            else if (e.v == cur)
                cur = e.u;
            else
                throw DomainError("cycle_sign: consecutive edges do not share a vertex");
        }
        if (cur != start) throw DomainError("cycle_sign: edge sequence is not closed");
    }
    int prod = 1;
    for (int e : cycle_edges) prod *= g.edges[e].sign;
    return prod;
}

bool is_contractible(const EmbeddedGraph& g, const CycleRef& c) {
    int s = cycle_sign(g, c.edges);
    if (g.surface == Surface::Sphere) return true;
    return s > 0;
}

// --- double cover ----------------------------------------------------------

DoubleCover double_cover(const EmbeddedGraph& g) {
    DoubleCover dc;
    EmbeddedGraph& c = dc.cover;
    c.surface = Surface::Sphere;
    c.vertex_count = 2 * g.vertex_count;
    c.edges.reserve(2 * g.edge_count());
    for (const Edge& e : g.edges) {
        int tw = e.sign < 0 ? 1 : 0;
        c.add_edge(2 * e.u + 0, 2 * e.v + (0 ^ tw), +1);
        c.add_edge(2 * e.u + 1, 2 * e.v + (1 ^ tw), +1);
    }
    c.rotation.assign(c.vertex_count, {});
    for (int v = 0; v < g.vertex_count; ++v) {
        for (int s = 0; s < 2; ++s) {
            std::vector<DartId>& rot = c.rotation[2 * v + s];
            std::vector<DartId> base = g.rotation[v];
            if (s == 1) std::reverse(base.begin(), base.end());
            for (DartId d : base) {
                int e = edge_of(d);
                int tw = g.edges[e].sign < 0 ? 1 : 0;
                if ((d & 1) == 0) {
                    // u-side dart of lift s sits at (u, s)
                    rot.push_back(dart(2 * e + s, 0));
                } else {
                    // v-side dart of lift t sits at (v, t ^ tw)
                    rot.push_back(dart(2 * e + (s ^ tw), 1));
                }
            }
        }
    }
    return dc;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency_with_edges(const EmbeddedGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[g.edges[e].u].push_back({g.edges[e].v, e});
        if (!g.edges[e].is_loop()) adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
    return adj;
}

} // namespace

CycleRef shortest_noncontractible_cycle(const EmbeddedGraph& g) {
    if (g.surface != Surface::ProjectivePlane)
        throw DomainError("shortest_noncontractible_cycle: surface has no noncontractible cycle");
    DoubleCover dc = double_cover(g);
    auto adj = adjacency_with_edges(dc.cover);
    int best = -1;
    std::vector<int> best_edges;
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> dist(dc.cover.vertex_count, -1);
        std::vector<std::pair<int, int>> par(dc.cover.vertex_count, {-1, -1});
        std::queue<int> q;
        int src = 2 * v, dst = 2 * v + 1;
        dist[src] = 0;
        q.push(src);
        while (!q.empty() && dist[dst] < 0) {
            int x = q.front();
            q.pop();
            for (auto [y, e] : adj[x]) {
                if (dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                par[y] = {x, e};
                q.push(y);
            }
        }
        if (dist[dst] < 0) continue;
        if (best < 0 || dist[dst] < best) {
            best = dist[dst];
            best_edges.clear();
            for (int x = dst; x != src; x = par[x].first) best_edges.push_back(dc.base_edge(par[x].second));
            std::reverse(best_edges.begin(), best_edges.end());
        }
    }
    if (best < 0) throw TheoremViolation("projective-plane embedding without noncontractible cycle");
    CycleRef c;
    c.edges = best_edges;
    c.contractible = false;
    return c;
}

int edge_width(const EmbeddedGraph& g) {
    return static_cast<int>(shortest_noncontractible_cycle(g).edges.size());
}

// --- graph helpers ----------------------------------------------------------

std::optional<std::vector<uint8_t>> is_bipartite(const EmbeddedGraph& g) {
    std::vector<int> color(g.vertex_count, -1);
    for (int start = 0; start < g.vertex_count; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (DartId d : g.rotation[v]) {
                const Edge& e = g.edges[edge_of(d)];
                if (e.is_loop()) return std::nullopt;
                int w = g.other_end(edge_of(d), v);
                if (color[w] < 0) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::vector<uint8_t>(color.begin(), color.end());
}

bool is_connected(const EmbeddedGraph& g) {
    if (g.vertex_count == 0) return false;
    std::vector<char> vis(g.vertex_count, 0);
    std::queue<int> q;
    vis[0] = 1;
    q.push(0);
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (DartId d : g.rotation[v]) {
            int w = g.other_end(edge_of(d), v);
            if (!vis[w]) {
                vis[w] = 1;
                cnt++;
                q.push(w);
            }
        }
    }
    return cnt == g.vertex_count;
}

std::vector<std::vector<int>> simple_adjacency(const EmbeddedGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const Edge& e : g.edges) {
        if (e.is_loop()) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

bool has_edge_between(const EmbeddedGraph& g, int u, int v) {
    for (const Edge& e : g.edges)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    return false;
}

std::vector<int> edges_between(const EmbeddedGraph& g, int u, int v) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if ((g.edges[e].u == u && g.edges[e].v == v) || (g.edges[e].u == v && g.edges[e].v == u))
            out.push_back(e);
    return out;
}

// --- canonical form -----------------------------------------------------

namespace {

std::string traversal_encoding(const EmbeddedGraph& g, int root, int start_pos, int mirror) {
    const int n = g.vertex_count;
    std::vector<int> label(n, -1), orient(n, -1);
    std::vector<DartId> anchor(n, -1);
    std::vector<int> order;
    std::vector<int> dart_num(g.dart_count(), -1);

    label[root] = 0;
    orient[root] = mirror;
    anchor[root] = g.rotation[root][start_pos];
    order.push_back(root);

    std::string enc;
    enc.reserve(static_cast<size_t>(8) * g.dart_count());
    int next_label = 1;
    int next_dart = 0;

    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        int deg = g.degree(v);
        // locate the anchor inside the rotation
        int apos = 0;
        for (int i = 0; i < deg; ++i)
            if (g.rotation[v][i] == anchor[v]) {
                apos = i;
                break;
            }
        enc += 'v';
        enc += std::to_string(deg);
        for (int k = 0; k < deg; ++k) {
            int idx = orient[v] == 0 ? (apos + k) % deg : (apos - k + 2 * deg) % deg;
            DartId d = g.rotation[v][idx];
            dart_num[d] = next_dart++;
            int e = edge_of(d);
            int w = g.dart_vertex(twin(d));
            if (label[w] < 0) {
                label[w] = next_label++;
                orient[w] = orient[v] ^ (g.edges[e].sign < 0 ? 1 : 0);
                anchor[w] = twin(d);
                order.push_back(w);
            }
            if (dart_num[twin(d)] >= 0) {
                int lam = (g.edges[e].sign < 0 ? 1 : 0) ^ orient[v] ^ orient[w];
                enc += 't';
                enc += std::to_string(dart_num[twin(d)]);
                enc += lam ? '-' : '+';
            } else {
                enc += 'f';
            }
        }
    }
    enc += '|';
    enc += std::to_string(static_cast<int>(order.size()));
    return enc;
}

} // namespace

std::string canonical_form(const EmbeddedGraph& g) {
    if (g.vertex_count == 0) return "empty";
    if (g.edge_count() == 0) return "trivial" + std::to_string(g.vertex_count);
    std::string best;
    for (int v = 0; v < g.vertex_count; ++v) {
        for (int p = 0; p < g.degree(v); ++p) {
            for (int m = 0; m < 2; ++m) {
                std::string enc = traversal_encoding(g, v, p, m);
                if (best.empty() || enc < best) best = std::move(enc);
            }
        }
    }
    return best;
}

bool isomorphic_embeddings(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

// --- construction from face walks ----------------------------------------

EmbeddedGraph from_face_walks(int vertex_count, const std::vector<std::vector<int>>& walks) {
    EmbeddedGraph g;
    g.vertex_count = vertex_count;

    std::map<std::pair<int, int>, int> edge_id;
    auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (const auto& w : walks) {
        if (w.size() < 3) throw StructureError("face walk shorter than 3");
        for (size_t i = 0; i < w.size(); ++i) {
            int a = w[i], b = w[(i + 1) % w.size()];
            if (a == b) throw StructureError("face walk repeats a vertex consecutively");
            if (a < 0 || a >= vertex_count) throw StructureError("face walk vertex out of range");
            if (!edge_id.count(key(a, b))) {
                edge_id[key(a, b)] = g.add_edge(key(a, b).first, key(a, b).second, +1);
            }
        }
    }

    // corners: per vertex, each face passing through v joins its two arms
    const int m = g.edge_count();
    std::vector<int> cover_count(m, 0);
    std::vector<std::vector<std::pair<int, int>>> link(vertex_count); // vertex -> corner edge pairs
    for (const auto& w : walks) {
        const int L = static_cast<int>(w.size());
        for (int i = 0; i < L; ++i) {
            int prev = w[(i + L - 1) % L], cur = w[i], next = w[(i + 1) % L];
            int ein = edge_id.at(key(prev, cur));
            int eout = edge_id.at(key(cur, next));
            link[cur].push_back({ein, eout});
        }
        for (int i = 0; i < L; ++i) cover_count[edge_id.at(key(w[i], w[(i + 1) % L]))]++;
    }
    for (int e = 0; e < m; ++e)
        if (cover_count[e] != 2)
            throw StructureError("edge covered by " + std::to_string(cover_count[e]) + " walks, want 2");

    // chain corners into one rotation cycle per vertex
    g.rotation.assign(vertex_count, {});
    for (int v = 0; v < vertex_count; ++v) {
        std::map<int, std::vector<int>> nbr; // edge -> corner-neighbors (2 each)
        for (auto [a, b] : link[v]) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        if (nbr.empty()) throw StructureError("isolated vertex in face walks");
        for (auto& [e, ns] : nbr)
            if (ns.size() != 2) throw StructureError("vertex corners do not chain (edge degree != 2)");
        int start = nbr.begin()->first;
        std::vector<int> cyc{start};
        int prev = -1, cur = start;
        do {
            auto& ns = nbr[cur];
            int nxt = (ns[0] != prev) ? ns[0] : ns[1];
            // parallel corners: if both neighbors equal prev, take it
            if (ns[0] == prev && ns[1] == prev) nxt = prev;
            prev = cur;
            cur = nxt;
            if (cur != start) cyc.push_back(cur);
            if (cyc.size() > nbr.size()) throw StructureError("vertex corners do not form a single cycle");
        } while (cur != start);
        if (cyc.size() != nbr.size()) throw StructureError("vertex corners form more than one cycle");
        for (int e : cyc) {
            int end = (g.edges[e].u == v && g.edges[e].v == v) ? 0 : (g.edges[e].u == v ? 0 : 1);
            g.rotation[v].push_back(dart(e, end));
        }
    }

    // edge signs: solve the trace-sign chain over GF(2). Variables are the
    // m edge signs plus one sign per walk slot; a slot at a vertex of degree
    // >= 3 is pinned by the rotation, degree-2 slots stay free.
    auto dart_at_vertex = [&](int e, int v) { return g.edges[e].u == v ? dart(e, 0) : dart(e, 1); };
    int slot_count = 0;
    for (const auto& w : walks) slot_count += static_cast<int>(w.size());
    const int nvars = m + slot_count;
    std::vector<std::vector<uint64_t>> rows; // bit i = variable i, last bit = constant
    const int words = (nvars + 1 + 63) / 64;
    auto make_row = [&]() { return std::vector<uint64_t>(words, 0); };
    auto set_bit = [&](std::vector<uint64_t>& r, int b) { r[b / 64] ^= 1ull << (b % 64); };

    int slot_base = m;
    for (const auto& w : walks) {
        const int L = static_cast<int>(w.size());
        for (int i = 0; i < L; ++i) {
            int u = w[i], v = w[(i + 1) % L];
            int e = edge_id.at(key(u, v));
            // chain: slot(i) ^ slot(i+1) ^ sign(e) = 0
            std::vector<uint64_t> r = make_row();
            set_bit(r, slot_base + i);
            set_bit(r, slot_base + (i + 1) % L);
            set_bit(r, e);
            rows.push_back(std::move(r));
            // pin the slot where the rotation disambiguates
            if (g.degree(u) >= 3) {
                int a = w[(i + L - 1) % L];
                DartId arrive = dart_at_vertex(edge_id.at(key(a, u)), u);
                DartId depart = dart_at_vertex(e, u);
                const auto& rot = g.rotation[u];
                int deg = static_cast<int>(rot.size());
                int pos = -1;
                for (int k = 0; k < deg; ++k)
                    if (rot[k] == arrive) pos = k;
                int val;
                if (rot[(pos + 1) % deg] == depart)
                    val = 0;
                else if (rot[(pos + deg - 1) % deg] == depart)
                    val = 1;
                else
                    throw StructureError("walk corner does not match the rotation");
                std::vector<uint64_t> p = make_row();
                set_bit(p, slot_base + i);
                if (val) set_bit(p, nvars);
                rows.push_back(std::move(p));
            }
        }
        slot_base += L;
    }
    // gaussian elimination
    auto test_bit = [&](const std::vector<uint64_t>& r, int b) {
        return (r[b / 64] >> (b % 64)) & 1ull;
    };
    std::vector<std::vector<uint64_t>> pivots; // echelon rows, leading bit = pivot
    std::vector<int> pivot_var;
    for (auto& r : rows) {
        for (size_t p = 0; p < pivots.size(); ++p)
            if (test_bit(r, pivot_var[p]))
                for (int k = 0; k < words; ++k) r[k] ^= pivots[p][k];
        int lead = -1;
        for (int v = 0; v < nvars && lead < 0; ++v)
            if (test_bit(r, v)) lead = v;
        if (lead < 0) {
            if (test_bit(r, nvars))
                throw StructureError("face walks are not realizable by any sign assignment");
            continue;
        }
        pivot_var.push_back(lead);
        pivots.push_back(r);
    }
    // back-substitute with free variables set to 0
    std::vector<int> value(nvars, 0);
    for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
        int rhs = test_bit(pivots[p], nvars) ? 1 : 0;
        for (int v = pivot_var[p] + 1; v < nvars; ++v)
            if (test_bit(pivots[p], v)) rhs ^= value[v];
        value[pivot_var[p]] = rhs;
    }
    for (int e = 0; e < m; ++e) g.edges[e].sign = value[e] == 1 ? -1 : +1;

    int chi = g.vertex_count - g.edge_count() + static_cast<int>(walks.size());
    if (chi == 2)
        g.surface = Surface::Sphere;
    else if (chi == 1)
        g.surface = Surface::ProjectivePlane;
    else
        throw StructureError("face walks give Euler characteristic " + std::to_string(chi));

    // the traced faces must reproduce the input walks
    FaceList fl = trace_faces(g);
    if (fl.count() != static_cast<int>(walks.size()))
        throw StructureError("face walk reconstruction traced a different face count");
    auto face_key = [](std::vector<int> es) {
        std::sort(es.begin(), es.end());
        return es;
    };
    std::multiset<std::vector<int>> want, got;
    for (const auto& w : walks) {
        std::vector<int> es;
        for (size_t i = 0; i < w.size(); ++i) es.push_back(edge_id.at(key(w[i], w[(i + 1) % w.size()])));
        want.insert(face_key(es));
    }
    for (const auto& f : fl.faces) {
        std::vector<int> es;
        for (int i = 0; i < f.length(); ++i) es.push_back(edge_of(f.dart_at(i)));
        got.insert(face_key(es));
    }
    if (want != got) throw StructureError("face walk reconstruction traced different faces");
    return g;
}

EmbeddedGraph restrict_to_edges(const EmbeddedGraph& g, const std::vector<char>& keep_edge,
                                Surface declared_surface) {
    EmbeddedGraph out;
    out.surface = declared_surface;
    out.allow_noncontractible_loops = g.allow_noncontractible_loops;
    out.vertex_count = g.vertex_count;
    std::vector<int> new_id(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (keep_edge[e]) new_id[e] = out.add_edge(g.edges[e].u, g.edges[e].v, g.edges[e].sign);
    out.rotation.assign(g.vertex_count, {});
    for (int v = 0; v < g.vertex_count; ++v)
        for (DartId d : g.rotation[v])
            if (keep_edge[edge_of(d)]) out.rotation[v].push_back(dart(new_id[edge_of(d)], d & 1));
    return out;
}

// --- pem ---------------------------------------------------------------

std::string write_pem(const EmbeddedGraph& g) {
    std::ostringstream os;
    os << "surface " << to_string(g.surface) << "\n";
    os << "vertices " << g.vertex_count << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        os << "edge " << e << " " << g.edges[e].u << " " << g.edges[e].v << " "
           << (g.edges[e].sign > 0 ? '+' : '-') << "\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        os << "rot " << v;
        // canonical anchor: start the cyclic order at the least dart
        const auto& rot = g.rotation[v];
        int best = 0;
        for (int i = 1; i < static_cast<int>(rot.size()); ++i)
            if (rot[i] < rot[best]) best = i;
        for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
            DartId d = rot[(best + k) % rot.size()];
            os << " " << edge_of(d) << "." << (d & 1);
        }
        os << "\n";
    }
    return os.str();
}

EmbeddedGraph read_pem(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    EmbeddedGraph g;
    bool have_surface = false, have_vertices = false;
    std::vector<char> edge_seen;
    std::vector<char> rot_seen;
    while (is >> word) {
        if (word == "surface") {
            std::string s;
            if (!(is >> s)) throw StructureError("pem: missing surface value");
            if (s == "sphere")
                g.surface = Surface::Sphere;
            else if (s == "pp")
                g.surface = Surface::ProjectivePlane;
            else
                throw StructureError("pem: unknown surface '" + s + "'");
            have_surface = true;
        } else if (word == "vertices") {
            if (!(is >> g.vertex_count) || g.vertex_count <= 0)
                throw StructureError("pem: bad vertex count");
            g.rotation.assign(g.vertex_count, {});
            rot_seen.assign(g.vertex_count, 0);
            have_vertices = true;
        } else if (word == "edge") {
            if (!have_vertices) throw StructureError("pem: edge before vertices");
            int id, u, v;
            std::string sg;
            if (!(is >> id >> u >> v >> sg)) throw StructureError("pem: malformed edge line");
            if (sg != "+" && sg != "-") throw StructureError("pem: edge sign must be + or -");
            if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
                throw StructureError("pem: edge endpoint references undeclared vertex");
            if (id < 0) throw StructureError("pem: negative edge id");
            if (id >= static_cast<int>(g.edges.size())) {
                g.edges.resize(id + 1);
                edge_seen.resize(id + 1, 0);
            }
            if (edge_seen[id]) throw StructureError("pem: duplicate edge id " + std::to_string(id));
            edge_seen[id] = 1;
            g.edges[id] = Edge{u, v, sg == "+" ? +1 : -1};
        } else if (word == "rot") {
            if (!have_vertices) throw StructureError("pem: rot before vertices");
            int v;
            if (!(is >> v)) throw StructureError("pem: malformed rot line");
            if (v < 0 || v >= g.vertex_count) throw StructureError("pem: rot references undeclared vertex");
            if (rot_seen[v]) throw StructureError("pem: duplicate rotation for vertex " + std::to_string(v));
            rot_seen[v] = 1;
            std::string rest;
            std::getline(is, rest);
            std::istringstream rs(rest);
            std::string tok;
            while (rs >> tok) {
                auto dotpos = tok.find('.');
                if (dotpos == std::string::npos) throw StructureError("pem: dart token without dot");
                int e = std::stoi(tok.substr(0, dotpos));
                int end = std::stoi(tok.substr(dotpos + 1));
                if (end != 0 && end != 1) throw StructureError("pem: dart end must be 0 or 1");
                if (e < 0 || e >= static_cast<int>(g.edges.size()))
                    throw StructureError("pem: dart references unknown edge");
                g.rotation[v].push_back(dart(e, end));
            }
        } else {
            throw StructureError("pem: unknown keyword '" + word + "'");
        }
    }
    if (!have_surface || !have_vertices) throw StructureError("pem: missing header");
    for (size_t e = 0; e < edge_seen.size(); ++e)
        if (!edge_seen[e]) throw StructureError("pem: edge ids are not contiguous");
    // duplicate/missing darts
    std::vector<int> cnt(g.dart_count(), 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (g.rotation[v].empty()) throw StructureError("pem: missing rotation for vertex " + std::to_string(v));
        for (DartId d : g.rotation[v]) {
            if (g.dart_vertex(d) != v)
                throw StructureError("pem: dart " + std::to_string(edge_of(d)) + "." + std::to_string(d & 1) +
                                     " listed at wrong vertex");
            if (++cnt[d] > 1) throw StructureError("pem: duplicate dart in rotations");
        }
    }
    for (int d = 0; d < g.dart_count(); ++d)
        if (cnt[d] != 1) throw StructureError("pem: dart missing from rotations");
    // canonical anchoring, matching the writer
    for (int v = 0; v < g.vertex_count; ++v) {
        auto& rot = g.rotation[v];
        int best = 0;
        for (int i = 1; i < static_cast<int>(rot.size()); ++i)
            if (rot[i] < rot[best]) best = i;
        std::rotate(rot.begin(), rot.begin() + best, rot.end());
    }
    bool has_loop = false;
    for (const Edge& e : g.edges) has_loop |= e.is_loop();
    g.allow_noncontractible_loops = has_loop;
    return g;
}

EmbeddedGraph read_pem_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw StructureError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return read_pem(ss.str());
}

void write_pem_file(const EmbeddedGraph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw StructureError("cannot write " + path);
    f << write_pem(g);
}

} // namespace ppquad
