#include <algorithm>

#include "dpcolor/errors.hpp"
#include "dpcolor/mp2.hpp"
#include "json.hpp"

namespace dpcolor {

using json = nlohmann::json;

namespace {

void note(ColoringTrace& t, const std::string& name) {
    t.steps.push_back({"branch", json{{"name", name}}.dump()});
}

void record_assign(ColoringTrace& t, const Graph& g, Vertex v, int color) {
    t.steps.push_back({"assign", json{{"v", g.name(v)}, {"color", color}}.dump()});
}

// ascending-vertex greedy used for the tiny graphs in the pipeline
void greedy_all(const MatchingAssignment& m, Coloring& c, ColoringTrace& t,
                const std::vector<Vertex>& order) {
    for (Vertex v : order) {
        auto r = m.residual(v, c);
        if (r.empty())
            throw InternalConsistencyError("greedy completion stuck at " + m.graph().name(v),
                                           serialize_trace(t));
        c[v] = r.front();
        record_assign(t, m.graph(), v, r.front());
    }
}

std::pair<Coloring, ColoringTrace> base_case_k5e(const Graph& g, const MatchingAssignment& m) {
    ColoringTrace trace;
    note(trace, "mp2.base.K5-e");
    // the unique non-adjacent pair
    Vertex u = -1, v = -1;
    for (Vertex a = 0; a < 5 && u < 0; ++a)
        for (Vertex b = a + 1; b < 5 && u < 0; ++b)
            if (!g.has_edge(a, b)) {
                u = a;
                v = b;
            }
    if (u < 0) throw InternalConsistencyError("5-vertex MP2 graph has no missing edge");
    Vertex w1 = -1;
    for (Vertex x = 0; x < 5; ++x)
        if (x != u && x != v && g.has_edge(u, x) && g.has_edge(v, x)) {
            w1 = x;
            break;
        }
    auto [renamed, s] = straighten_tree(m, {{u, w1}, {w1, v}});
    trace.steps.push_back(
        {"straighten",
         json{{"edges", {{g.name(u), g.name(w1)}, {g.name(w1), g.name(v)}}}}.dump()});
    Coloring c(5, 0);
    // same color on the two straightened ends
    int alpha = 0;
    for (int col : renamed.list(u)) {
        auto lv = renamed.list(v);
        if (std::find(lv.begin(), lv.end(), col) != lv.end()) {
            alpha = col;
            break;
        }
    }
    if (alpha == 0) throw InternalConsistencyError("no common color after straightening");
    c[u] = alpha;
    c[v] = alpha;
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < 5; ++x)
        if (x != u && x != v && x != w1) rest.push_back(x);
    std::vector<Vertex> order = {rest[0], rest[1], w1};
    for (Vertex x : order) {
        auto r = renamed.residual(x, c);
        if (r.empty())
            throw InternalConsistencyError("K5-e base case stuck at " + g.name(x),
                                           serialize_trace(trace));
        c[x] = r.front();
    }
    // back to original tokens
    Coloring out = s.unmap(c);
    for (Vertex x : {u, v, rest[0], rest[1], w1}) record_assign(trace, g, x, out[x]);
    if (!verify_coloring(m, out))
        throw InternalConsistencyError("K5-e base case failed verification", serialize_trace(trace));
    return {out, trace};
}

} // namespace

std::pair<Coloring, ColoringTrace> color_mp2(const Graph& g, const MatchingAssignment& m) {
    if (!(m.graph() == g)) throw RefusalError("assignment is not over the given graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (m.list(v).size() != 4) throw RefusalError("color_mp2 requires 4-lists");
    if (!m.all_perfect()) throw RefusalError("color_mp2 requires perfect matchings");

    int n = g.vertex_count();
    if (n < 5) {
        // K3 or K4 handed over by the pipeline: any order works with 4-lists
        ColoringTrace trace;
        note(trace, "mp2.small");
        Coloring c(n, 0);
        std::vector<Vertex> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        greedy_all(m, c, trace, order);
        if (!verify_coloring(m, c))
            throw InternalConsistencyError("small-graph coloring failed verification",
                                           serialize_trace(trace));
        return {c, trace};
    }
    if (!is_mp2(g)) throw RefusalError("color_mp2 requires an MP2 graph");
    if (n == 5) return base_case_k5e(g, m);

    auto stats = g.degree_stats();
    if (stats.min_degree == 3) {
        // remove a degree-3 vertex, color the rest, extend greedily
        Vertex drop = -1;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) == 3 && (drop < 0 || g.name(v) < g.name(drop))) drop = v;
        ColoringTrace trace;
        note(trace, "mp2.reduce." + g.name(drop));
        Graph reduced = reduce_degree3(g, drop);
        std::vector<std::vector<int>> lists(reduced.vertex_count());
        for (Vertex v = 0; v < reduced.vertex_count(); ++v)
            lists[v] = m.list(g.vertex(reduced.name(v)));
        MatchingAssignment sub(reduced, std::move(lists));
        for (auto [a, b] : reduced.edges())
            sub.set_matching(a, b,
                             m.matching(g.vertex(reduced.name(a)), g.vertex(reduced.name(b))));
        auto [c_sub, t_sub] = color_mp2(reduced, sub);
        for (auto& s : t_sub.steps) trace.steps.push_back(s);
        Coloring c(n, 0);
        for (Vertex v = 0; v < reduced.vertex_count(); ++v)
            c[g.vertex(reduced.name(v))] = c_sub[v];
        auto r = m.residual(drop, c);
        if (r.empty())
            throw InternalConsistencyError("degree-3 extension stuck at " + g.name(drop),
                                           serialize_trace(trace));
        c[drop] = r.front();
        record_assign(trace, g, drop, c[drop]);
        if (!verify_coloring(m, c))
            throw InternalConsistencyError("degree-3 extension failed verification",
                                           serialize_trace(trace));
        return {c, trace};
    }

    auto ident = identify_catalog(g);
    if (!ident)
        throw InternalConsistencyError(
            "MP2 graph with minimum degree 4 is outside the reconstructed catalog (" +
            std::to_string(n) + " vertices)");
    ColoringTrace trace;
    note(trace, "mp2.catalog." + ident->entry.name);
    const Graph& h = ident->entry.graph;
    std::vector<std::vector<int>> lists(h.vertex_count());
    for (Vertex v = 0; v < n; ++v) lists[ident->iso.at(v)] = m.list(v);
    MatchingAssignment transported(h, std::move(lists));
    for (auto [a, b] : g.edges())
        transported.set_matching(ident->iso.at(a), ident->iso.at(b), m.matching(a, b));
    auto [c_h, t_h] = case_procedure(ident->entry, transported);
    // fold the case trace back through the isomorphism
    std::map<std::string, std::string> back;
    for (auto& [gv, hv] : ident->iso) back[h.name(hv)] = g.name(gv);
    for (auto& s : t_h.steps) {
        json d = json::parse(s.detail);
        auto ren = [&](const std::string& x) {
            auto it = back.find(x);
            return it == back.end() ? x : it->second;
        };
        for (auto key : {"v", "target"})
            if (d.contains(key) && d[key].is_string()) d[key] = ren(d[key]);
        for (auto key : {"vs", "order", "triangle", "edge"})
            if (d.contains(key))
                for (auto& x : d[key])
                    if (x.is_string()) x = ren(x);
        if (d.contains("edges"))
            for (auto& e : d["edges"])
                for (auto& x : e) x = ren(x);
        trace.steps.push_back({s.action, d.dump()});
    }
    Coloring c(n, 0);
    for (Vertex v = 0; v < n; ++v) c[v] = c_h[ident->iso.at(v)];
    if (!verify_coloring(m, c))
        throw InternalConsistencyError("catalog coloring failed verification",
                                       serialize_trace(trace));
    return {c, trace};
}

} // namespace dpcolor
