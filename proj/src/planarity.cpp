#include <algorithm>
#include <vector>

#include "dpcolor/graph.hpp"

// Left-right planarity test (de Fraysseix / Rosenstiehl, formulation following
// Brandes' lecture notes). Decision only; no embedding is produced.

namespace dpcolor {

namespace {

constexpr int NIL = -1;

struct LRTest {
    int n, m;
    // undirected edge e: endpoints end0/end1; after orientation src -> dst
    std::vector<int> src, dst;
    std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (neighbor, edge id)
    std::vector<int> height, parent_edge;
    std::vector<int> lowpt, lowpt2, nesting;
    std::vector<int> ref, lowpt_edge;
    std::vector<std::vector<int>> ordered_out; // oriented adjacency, sorted by nesting depth

    struct Interval {
        int lo = NIL, hi = NIL;
        bool empty() const { return lo == NIL && hi == NIL; }
    };
    struct ConflictPair {
        Interval L, R;
    };
    std::vector<ConflictPair> S;
    std::vector<int> stack_bottom; // per edge: stack height at traversal time
    bool planar = true;

    explicit LRTest(const Graph& g) : n(g.vertex_count()), m(g.edge_count()) {
        src.assign(m, NIL);
        dst.assign(m, NIL);
        adj.assign(n, {});
        int eid = 0;
        for (auto [u, v] : g.edges()) {
            adj[u].emplace_back(v, eid);
            adj[v].emplace_back(u, eid);
            ++eid;
        }
        height.assign(n, NIL);
        parent_edge.assign(n, NIL);
        lowpt.assign(m, 0);
        lowpt2.assign(m, 0);
        nesting.assign(m, 0);
        ref.assign(m, NIL);
        lowpt_edge.assign(m, NIL);
        stack_bottom.assign(m, 0);
        ordered_out.assign(n, {});
    }

    void dfs1(int v) {
        int e = parent_edge[v];
        for (auto [w, id] : adj[v]) {
            if (src[id] != NIL) continue; // already oriented
            src[id] = v;
            dst[id] = w;
            lowpt[id] = height[v];
            lowpt2[id] = height[v];
            if (height[w] == NIL) { // tree edge
                parent_edge[w] = id;
                height[w] = height[v] + 1;
                dfs1(w);
            } else { // back edge
                lowpt[id] = height[w];
            }
            nesting[id] = 2 * lowpt[id];
            if (lowpt2[id] < height[v]) nesting[id] += 1; // chordal
            if (e != NIL) {
                if (lowpt[id] < lowpt[e]) {
                    lowpt2[e] = std::min(lowpt[e], lowpt2[id]);
                    lowpt[e] = lowpt[id];
                } else if (lowpt[id] > lowpt[e]) {
                    lowpt2[e] = std::min(lowpt2[e], lowpt[id]);
                } else {
                    lowpt2[e] = std::min(lowpt2[e], lowpt2[id]);
                }
            }
        }
    }

    bool conflicting(const Interval& I, int b) const {
        return !I.empty() && lowpt[I.hi] > lowpt[b];
    }

    int lowest(const ConflictPair& P) const {
        if (P.L.empty()) return lowpt[P.R.lo];
        if (P.R.empty()) return lowpt[P.L.lo];
        return std::min(lowpt[P.L.lo], lowpt[P.R.lo]);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair P;
        // merge return edges of ei into P.R
        do {
            if (S.empty()) break;
            ConflictPair Q = S.back();
            S.pop_back();
            if (!Q.L.empty()) std::swap(Q.L, Q.R);
            if (!Q.L.empty()) return false;
            if (lowpt[Q.R.lo] > lowpt[e]) { // merge interval
                if (P.R.empty())
                    P.R.hi = Q.R.hi;
                else
                    ref[P.R.lo] = Q.R.hi;
                P.R.lo = Q.R.lo;
            } else {
                ref[Q.R.lo] = lowpt_edge[e];
            }
        } while (static_cast<int>(S.size()) != stack_bottom[ei]);
        // merge conflicting return edges of e1..e(i-1) into P.L
        while (!S.empty() && (conflicting(S.back().L, ei) || conflicting(S.back().R, ei))) {
            ConflictPair Q = S.back();
            S.pop_back();
            if (conflicting(Q.R, ei)) std::swap(Q.L, Q.R);
            if (conflicting(Q.R, ei)) return false;
            // merge interval below lowpt(ei) into P.R
            ref[P.R.lo] = Q.R.hi;
            if (Q.R.lo != NIL) P.R.lo = Q.R.lo;
            if (P.L.empty())
                P.L.hi = Q.L.hi;
            else
                ref[P.L.lo] = Q.L.hi;
            P.L.lo = Q.L.lo;
        }
        if (!P.L.empty() || !P.R.empty()) S.push_back(P);
        return true;
    }

    void trim_back_edges(int u) {
        // drop entirely obsolete conflict pairs
        while (!S.empty() && lowest(S.back()) == height[u]) S.pop_back();
        if (S.empty()) return;
        ConflictPair P = S.back();
        S.pop_back();
        while (P.L.hi != NIL && dst[P.L.hi] == u) P.L.hi = ref[P.L.hi];
        if (P.L.hi == NIL && P.L.lo != NIL) {
            ref[P.L.lo] = P.R.lo;
            P.L.lo = NIL;
        }
        while (P.R.hi != NIL && dst[P.R.hi] == u) P.R.hi = ref[P.R.hi];
        if (P.R.hi == NIL && P.R.lo != NIL) {
            ref[P.R.lo] = P.L.lo;
            P.R.lo = NIL;
        }
        if (!P.L.empty() || !P.R.empty()) S.push_back(P);
    }

    bool dfs2(int v) {
        int e = parent_edge[v];
        bool first = true;
        for (int ei : ordered_out[v]) {
            stack_bottom[ei] = static_cast<int>(S.size());
            int w = dst[ei];
            if (ei == parent_edge[w]) { // tree edge
                if (!dfs2(w)) return false;
            } else { // back edge
                lowpt_edge[ei] = ei;
                ConflictPair P;
                P.R.lo = P.R.hi = ei;
                S.push_back(P);
            }
            if (lowpt[ei] < height[v]) { // ei has a return edge
                if (first) {
                    if (e != NIL) lowpt_edge[e] = lowpt_edge[ei];
                } else {
                    if (!add_constraints(ei, e)) return false;
                }
            }
            first = false;
        }
        if (e != NIL) {
            int u = src[e];
            trim_back_edges(u);
        }
        return true;
    }

    bool run() {
        for (int v = 0; v < n; ++v)
            if (height[v] == NIL) {
                height[v] = 0;
                dfs1(v);
            }
        for (int id = 0; id < m; ++id)
            if (src[id] != NIL) ordered_out[src[id]].push_back(id);
        for (int v = 0; v < n; ++v)
            std::stable_sort(ordered_out[v].begin(), ordered_out[v].end(),
                             [&](int a, int b) { return nesting[a] < nesting[b]; });
        for (int v = 0; v < n; ++v)
            if (parent_edge[v] == NIL && height[v] == 0) {
                if (!dfs2(v)) return false;
            }
        return true;
    }
};

} // namespace

bool lr_planarity(const Graph& g) {
    if (g.vertex_count() <= 2 || g.edge_count() == 0) return true;
    LRTest t(g);
    return t.run();
}

bool is_planar(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 4) return true;
    if (g.edge_count() > 3 * n - 6) return false;
    return lr_planarity(g);
}

} // namespace dpcolor
