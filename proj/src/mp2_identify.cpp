#include <algorithm>

#include "dpcolor/errors.hpp"
#include "dpcolor/mp2.hpp"

namespace dpcolor {

namespace {

// invariant per vertex: (degree, sorted neighbor degrees)
std::vector<std::pair<int, std::vector<int>>> signatures(const Graph& g) {
    std::vector<std::pair<int, std::vector<int>>> sig(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> nd;
        for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        sig[v] = {g.degree(v), std::move(nd)};
    }
    return sig;
}

struct IsoSearch {
    const Graph &a, &b;
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    std::vector<Vertex> order;          // vertices of a, most-constrained first
    std::vector<Vertex> map_ab;         // a -> b or -1
    std::vector<bool> used_b;

    IsoSearch(const Graph& ga, const Graph& gb) : a(ga), b(gb) {
        sa = signatures(a);
        sb = signatures(b);
        order.resize(a.vertex_count());
        for (Vertex v = 0; v < a.vertex_count(); ++v) order[v] = v;
        // BFS-ish order keeps mapped neighborhoods connected, pruning early
        std::vector<Vertex> out;
        std::vector<bool> seen(a.vertex_count(), false);
        std::sort(order.begin(), order.end(),
                  [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
        for (Vertex s : order) {
            if (seen[s]) continue;
            std::vector<Vertex> q{s};
            seen[s] = true;
            for (size_t h = 0; h < q.size(); ++h) {
                out.push_back(q[h]);
                for (Vertex w : a.neighbors(q[h]))
                    if (!seen[w]) {
                        seen[w] = true;
                        q.push_back(w);
                    }
            }
        }
        order = out;
        map_ab.assign(a.vertex_count(), -1);
        used_b.assign(b.vertex_count(), false);
    }

    bool feasible(Vertex va, Vertex vb) {
        if (sa[va] != sb[vb]) return false;
        for (Vertex u : a.neighbors(va)) {
            if (map_ab[u] == -1) continue;
            if (!b.has_edge(vb, map_ab[u])) return false;
        }
        // non-adjacency must be preserved too (same edge counts make the
        // converse implied, but check keeps the search correct for any input)
        for (Vertex u = 0; u < a.vertex_count(); ++u) {
            if (map_ab[u] == -1 || u == va) continue;
            if (!a.has_edge(va, u) && b.has_edge(vb, map_ab[u])) return false;
        }
        return true;
    }

    bool run(size_t i) {
        if (i == order.size()) return true;
        Vertex va = order[i];
        for (Vertex vb = 0; vb < b.vertex_count(); ++vb) {
            if (used_b[vb] || !feasible(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = true;
            if (run(i + 1)) return true;
            map_ab[va] = -1;
            used_b[vb] = false;
        }
        return false;
    }
};

} // namespace

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    {
        auto da = signatures(a), db = signatures(b);
        auto ca = da, cb = db;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return std::nullopt;
    }
    IsoSearch s(a, b);
    if (!s.run(0)) return std::nullopt;
    std::map<Vertex, Vertex> out;
    for (Vertex v = 0; v < a.vertex_count(); ++v) out[v] = s.map_ab[v];
    return out;
}

std::optional<Identification> identify_catalog(const Graph& g) {
    if (!is_mp2(g)) throw RefusalError("identify_catalog requires an MP2 graph");
    if (g.degree_stats().min_degree != 4)
        throw RefusalError("identify_catalog requires minimum degree 4");
    int n = g.vertex_count();
    std::vector<std::pair<std::string, CatalogParams>> candidates;
    for (const auto& fam : catalog_families()) {
        if (fam.param_names.empty()) {
            candidates.emplace_back(fam.name, CatalogParams{});
        } else if (fam.name == "G1") {
            if (n - 2 >= 4) candidates.emplace_back("G1", CatalogParams{{"n", n - 2}});
        } else if (fam.name == "G5") {
            if (n - 6 >= 2) candidates.emplace_back("G5", CatalogParams{{"n", n - 6}});
        } else if (fam.name == "G6") {
            for (int a = 1; a + 1 <= n - 6 - 0; ++a) {
                int b = n - 6 - a;
                if (b >= 1) candidates.emplace_back("G6", CatalogParams{{"n", a}, {"m", b}});
            }
        } else if (fam.name == "G7") {
            for (int a = 1; a <= n - 7; ++a)
                for (int b = 1; a + b <= n - 7; ++b) {
                    int l = n - 7 - a - b;
                    if (l >= 2) candidates.emplace_back("G7", CatalogParams{{"n", a}, {"m", b}, {"l", l}});
                }
        } else if (fam.name == "G8") {
            for (int a = 1; a + 1 <= n - 9; ++a) {
                int b = n - 9 - a;
                if (b >= 1) candidates.emplace_back("G8", CatalogParams{{"n", a}, {"m", b}});
            }
        } else if (fam.name == "G9") {
            if (n - 9 >= 1) candidates.emplace_back("G9", CatalogParams{{"n", n - 9}});
        }
    }
    for (auto& [name, params] : candidates) {
        CatalogEntry e;
        try {
            e = catalog_entry(name, params);
        } catch (const RefusalError&) {
            continue;
        }
        if (e.graph.vertex_count() != n) continue;
        auto iso = find_isomorphism(g, e.graph);
        if (iso) {
            Identification id;
            id.entry = std::move(e);
            id.iso = std::move(*iso);
            return id;
        }
    }
    return std::nullopt;
}

Graph reduce_degree3(const Graph& g, Vertex v) {
    if (g.degree(v) != 3)
        throw RefusalError("reduce_degree3 requires a degree-3 vertex, got degree " +
                           std::to_string(g.degree(v)));
    if (!is_mp2(g)) throw RefusalError("reduce_degree3 requires an MP2 graph");
    Graph out = g.without_vertex(v);
    if (!is_mp2(out))
        throw InternalConsistencyError("removing degree-3 vertex " + g.name(v) +
                                       " did not yield an MP2 graph");
    return out;
}

} // namespace dpcolor
