#include "ppquad/factor_match.hpp"

#include <algorithm>
#include <cassert>

namespace ppquad {

EdgeSubset EdgeSubset::of(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return EdgeSubset{std::move(v)};
}

bool EdgeSubset::contains(int e) const {
    return std::binary_search(ids.begin(), ids.end(), e);
}

std::string EdgeSubset::to_string() const {
    std::string s;
    for (int e : ids) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e);
    }
    return s;
}

// --- perfect matchings ------------------------------------------------------

namespace {

struct MatchState {
    const DualGraph* d;
    std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (edge, other)
    std::vector<char> matched;
    std::vector<int> chosen;
    const std::function<bool(const EdgeSubset&)>* cb;
    int emitted = 0;
    bool stopped = false;
};

bool match_rec(MatchState& st) {
    int v = -1;
    for (int i = 0; i < st.d->face_count; ++i)
        if (!st.matched[i]) {
            v = i;
            break;
        }
    if (v < 0) {
        st.emitted++;
        if (!(*st.cb)(EdgeSubset::of(st.chosen))) st.stopped = true;
        return !st.stopped;
    }
    for (auto [e, w] : st.adj[v]) {
        if (w == v || st.matched[w]) continue;
        st.matched[v] = st.matched[w] = 1;
        st.chosen.push_back(e);
        bool go = match_rec(st);
        st.chosen.pop_back();
        st.matched[v] = st.matched[w] = 0;
        if (!go) return false;
    }
    return true;
}

} // namespace

int perfect_matchings(const DualGraph& d, const std::function<bool(const EdgeSubset&)>& cb) {
    if (d.face_count % 2 != 0) return 0;
    MatchState st;
    st.d = &d;
    st.adj.assign(d.face_count, {});
    for (int e = 0; e < d.edge_count(); ++e) {
        st.adj[d.ends[e][0]].push_back({e, d.ends[e][1]});
        if (d.ends[e][1] != d.ends[e][0]) st.adj[d.ends[e][1]].push_back({e, d.ends[e][0]});
    }
    for (auto& a : st.adj) std::sort(a.begin(), a.end());
    st.matched.assign(d.face_count, 0);
    st.cb = &cb;
    match_rec(st);
    return st.emitted;
}

std::vector<EdgeSubset> all_perfect_matchings(const DualGraph& d, int limit) {
    std::vector<EdgeSubset> out;
    perfect_matchings(d, [&](const EdgeSubset& m) {
        out.push_back(m);
        return limit < 0 || static_cast<int>(out.size()) < limit;
    });
    return out;
}

EdgeSubset matching_through(const DualGraph& d, int e) {
    if (e < 0 || e >= d.edge_count()) throw DomainError("matching_through: edge out of range");
    if (d.ends[e][0] == d.ends[e][1])
        throw DomainError("matching_through: dual edge is a loop");
    MatchState st;
    st.d = &d;
    st.adj.assign(d.face_count, {});
    for (int i = 0; i < d.edge_count(); ++i) {
        st.adj[d.ends[i][0]].push_back({i, d.ends[i][1]});
        if (d.ends[i][1] != d.ends[i][0]) st.adj[d.ends[i][1]].push_back({i, d.ends[i][0]});
    }
    for (auto& a : st.adj) std::sort(a.begin(), a.end());
    st.matched.assign(d.face_count, 0);
    st.matched[d.ends[e][0]] = st.matched[d.ends[e][1]] = 1;
    st.chosen.push_back(e);
    std::optional<EdgeSubset> found;
    std::function<bool(const EdgeSubset&)> cb = [&](const EdgeSubset& m) {
        found = m;
        return false;
    };
    st.cb = &cb;
    match_rec(st);
    if (!found) throw TheoremViolation("2-connected cubic graph without a perfect matching through an edge");
    return *found;
}

// --- degree-constrained factors -----------------------------------------------

std::vector<int> dual_degrees(const DualGraph& d, const EdgeSubset& f) {
    std::vector<int> deg(d.face_count, 0);
    for (int e : f.ids) {
        deg[d.ends[e][0]]++;
        deg[d.ends[e][1]]++;
    }
    return deg;
}

bool is_factor_with_degrees(const DualGraph& d, const EdgeSubset& f, const std::vector<int>& allowed) {
    for (int k : dual_degrees(d, f))
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) return false;
    return true;
}

int enumerate_factors(const DualGraph& d, const std::vector<int>& allowed,
                      const std::function<bool(const EdgeSubset&)>& cb) {
    const int m = d.edge_count();
    int maxdeg = 0;
    for (int a : allowed) maxdeg = std::max(maxdeg, a);
    // remaining undecided edges per vertex, for feasibility pruning
    std::vector<std::vector<int>> incident(d.face_count);
    for (int e = 0; e < m; ++e) {
        incident[d.ends[e][0]].push_back(e);
        if (d.ends[e][1] != d.ends[e][0]) incident[d.ends[e][1]].push_back(e);
    }
    std::vector<int> deg(d.face_count, 0), remaining(d.face_count, 0);
    for (int v = 0; v < d.face_count; ++v) remaining[v] = static_cast<int>(incident[v].size());
    std::vector<int> chosen;
    int emitted = 0;
    bool stopped = false;

    auto feasible = [&](int v) {
        for (int a : allowed)
            if (a >= deg[v] && a <= deg[v] + remaining[v]) return true;
        return false;
    };
    std::function<void(int)> rec = [&](int e) {
        if (stopped) return;
        if (e == m) {
            for (int v = 0; v < d.face_count; ++v)
                if (std::find(allowed.begin(), allowed.end(), deg[v]) == allowed.end()) return;
            emitted++;
            if (!cb(EdgeSubset::of(chosen))) stopped = true;
            return;
        }
        int a = d.ends[e][0], b = d.ends[e][1];
        int delta = a == b ? 2 : 1;
        // skip the edge
        remaining[a] -= delta;
        if (a != b) remaining[b] -= delta;
        if (feasible(a) && feasible(b)) rec(e + 1);
        // take the edge
        deg[a] += delta;
        if (a != b) deg[b] += delta;
        if (deg[a] <= maxdeg && deg[b] <= maxdeg && feasible(a) && feasible(b)) {
            chosen.push_back(e);
            rec(e + 1);
            chosen.pop_back();
        }
        deg[a] -= delta;
        if (a != b) deg[b] -= delta;
        remaining[a] += delta;
        if (a != b) remaining[b] += delta;
    };
    rec(0);
    return emitted;
}

// --- quadrangulation extraction ---------------------------------------------

QuadrangulationResult quadrangulation_from(const EmbeddedGraph& t, const EdgeSubset& m) {
    DualGraph d = dual(t);
    std::vector<int> deg = dual_degrees(d, m);
    for (int v = 0; v < d.face_count; ++v)
        if (deg[v] != 1)
            throw DomainError("quadrangulation_from: dual edge set is not a perfect matching");
    std::vector<char> keep(t.edge_count(), 1);
    for (int e : m.ids) keep[e] = 0;
    QuadrangulationResult out;
    EmbeddedGraph q = restrict_to_edges(t, keep, t.surface);
    // compact edge ids, drop nothing else
    out.orig_edge.reserve(q.edge_count());
    for (int e = 0; e < t.edge_count(); ++e)
        if (keep[e]) out.orig_edge.push_back(e);
    out.graph = std::move(q);
    auto rep = validate(out.graph);
    if (!rep.valid())
        throw TheoremViolation("removing a dual perfect matching broke the embedding: " + rep.joined());
    if (!is_quadrangulation(out.graph))
        throw TheoremViolation("removing a dual perfect matching did not give a quadrangulation");
    return out;
}

bool parity_bipartite(const EmbeddedGraph& t, const EdgeSubset& m) {
    if (t.surface == Surface::Sphere) return true;
    CycleRef c = shortest_noncontractible_cycle(t);
    int inter = 0;
    for (int e : c.edges) inter += m.contains(e);
    return (inter - static_cast<int>(c.edges.size())) % 2 == 0;
}

// --- coloring <-> factor ------------------------------------------------------

EdgeSubset coloring_to_factor(const EmbeddedGraph& t, const Coloring& c) {
    std::vector<int> mono;
    for (int e = 0; e < t.edge_count(); ++e)
        if (c[t.edges[e].u] == c[t.edges[e].v]) mono.push_back(e);
    return EdgeSubset::of(std::move(mono));
}

Coloring factor_to_coloring(const EmbeddedGraph& t, const EdgeSubset& f) {
    if (t.surface != Surface::Sphere)
        throw DomainError("factor_to_coloring: supported on the sphere only");
    DualGraph d = dual(t);
    if (!is_factor_with_degrees(d, f, {1, 3}))
        throw DomainError("factor_to_coloring: dual edge set is not a {1,3}-factor");
    // same color across factor edges, opposite across the rest
    std::vector<int> col(t.vertex_count, -1);
    col[0] = BLACK;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (DartId dd : t.rotation[v]) {
            int e = edge_of(dd);
            int w = t.other_end(e, v);
            int want = f.contains(e) ? col[v] : (col[v] ^ 1);
            if (col[w] < 0) {
                col[w] = want;
                stack.push_back(w);
            } else if (col[w] != want) {
                throw TheoremViolation("plane {1,3}-factor gave an inconsistent coloring");
            }
        }
    }
    Coloring out;
    out.color.assign(col.begin(), col.end());
    return out;
}

// --- maximum cut ----------------------------------------------------------------

namespace {

MaxCutResult max_cut_impl(const EmbeddedGraph& g) {
    const int n = g.vertex_count;
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges)
        if (!e.is_loop()) es.push_back({e.u, e.v});

    MaxCutResult best;
    best.size = -1;
    if (n <= 24) {
        for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            uint32_t full = mask << 1; // vertex 0 stays black
            int cut = 0;
            for (auto [u, v] : es) cut += ((full >> u) ^ (full >> v)) & 1;
            if (cut > best.size) {
                best.size = cut;
                best.part.color.assign(n, BLACK);
                for (int v = 1; v < n; ++v) best.part.color[v] = (full >> v) & 1;
            }
        }
        return best;
    }
    if (n > 40) throw BudgetExceeded("max cut beyond the branch-and-bound budget");

    // branch and bound: assign vertices in order, bound by undecided edges
    std::vector<uint8_t> col(n, 0);
    std::vector<int> undecided_after(n + 1, 0);
    // edges whose larger endpoint is >= k are undecided once k-1 vertices fixed
    for (auto [u, v] : es) undecided_after[std::max(u, v)]++;
    std::vector<int> suffix(n + 2, 0);
    for (int k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + undecided_after[k];

    std::function<void(int, int)> rec = [&](int k, int cut) {
        if (k == n) {
            if (cut > best.size) {
                best.size = cut;
                best.part.color.assign(col.begin(), col.end());
            }
            return;
        }
        if (cut + suffix[k] <= best.size) return;
        for (uint8_t c = 0; c <= (k == 0 ? 0 : 1); ++c) {
            col[k] = c;
            int add = 0;
            for (auto [u, v] : es) {
                int hi = std::max(u, v), lo = std::min(u, v);
                if (hi == k) add += col[lo] != c;
            }
            rec(k + 1, cut + add);
        }
    };
    rec(0, 0);
    return best;
}

} // namespace

MaxCutResult max_cut(const EmbeddedGraph& g) {
    return max_cut_impl(g);
}

MaxCutResult max_bipartite_subgraph(const EmbeddedGraph& g) {
    if (g.surface != Surface::ProjectivePlane || !is_triangulation(g))
        throw DomainError("max_bipartite_subgraph: projective-plane triangulation required");
    return max_cut_impl(g);
}

} // namespace ppquad
