#include "dpcolor/pipeline.hpp"

#include <algorithm>
#include <array>

#include "dpcolor/errors.hpp"
#include "dpcolor/rng.hpp"
#include "json.hpp"

namespace dpcolor {

Completion triangulate_diam2(const Graph& g) {
    if (g.vertex_count() < 3) throw RefusalError("triangulation requires at least 3 vertices");
    if (!g.connected()) throw RefusalError("triangulation requires a connected graph");
    auto diam = g.diameter();
    if (!diam || *diam > 2) throw RefusalError("graph has diameter greater than 2");
    if (!is_planar(g)) throw RefusalError("graph is not planar");

    Completion comp;
    comp.original = g;
    Graph work = g;
    int want = 3 * g.vertex_count() - 6;
    while (work.edge_count() < want) {
        bool added = false;
        for (Vertex u = 0; u < work.vertex_count() && !added; ++u)
            for (Vertex v = u + 1; v < work.vertex_count() && !added; ++v) {
                if (work.has_edge(u, v)) continue;
                work.add_edge(u, v);
                if (is_planar(work)) {
                    comp.added_edges.emplace_back(u, v);
                    added = true;
                } else {
                    work.remove_edge(u, v);
                }
            }
        if (!added)
            throw InternalConsistencyError("no planarity-preserving edge available below 3n-6");
    }
    comp.completed = work;
    if (!is_maximal_planar(comp.completed))
        throw InternalConsistencyError("completion is not maximal planar");
    auto d2 = comp.completed.diameter();
    if (!d2 || *d2 > *diam)
        throw InternalConsistencyError("completion increased the diameter");
    return comp;
}

PipelineResult color_diam2(const Graph& g, const MatchingAssignment& m) {
    if (!(m.graph() == g)) throw RefusalError("assignment is not over the given graph");
    if (g.vertex_count() < 1) throw RefusalError("empty graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (m.list(v).size() != 4) throw RefusalError("color_diam2 requires 4-lists");

    PipelineResult out;
    if (g.vertex_count() < 3) {
        // nothing to triangulate; greedy is enough with 4-lists
        out.completion.original = g;
        out.completion.completed = g;
        Coloring c(g.vertex_count(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto r = m.residual(v, c);
            if (r.empty()) throw InternalConsistencyError("tiny-graph coloring stuck");
            c[v] = r.front();
            out.trace.steps.push_back(
                {"assign", nlohmann::json{{"v", g.name(v)}, {"color", c[v]}}.dump()});
        }
        out.coloring = c;
        if (!verify_coloring(m, out.coloring))
            throw InternalConsistencyError("pipeline coloring failed verification");
        return out;
    }

    out.completion = triangulate_diam2(g);
    const Graph& big = out.completion.completed;
    std::vector<std::vector<int>> lists(big.vertex_count());
    for (Vertex v = 0; v < big.vertex_count(); ++v) lists[v] = m.list(v);
    MatchingAssignment extended(big, std::move(lists));
    for (auto [u, v] : big.edges()) {
        if (g.has_edge(u, v)) {
            extended.set_matching(u, v, m.matching(u, v));
        } else {
            // identity over shared colors, padded to perfect in ascending order
            std::vector<std::pair<int, int>> pairs;
            std::vector<int> uu, vv;
            for (int c : extended.list(u)) {
                if (std::binary_search(extended.list(v).begin(), extended.list(v).end(), c))
                    pairs.emplace_back(c, c);
                else
                    uu.push_back(c);
            }
            for (int c : extended.list(v))
                if (!std::binary_search(extended.list(u).begin(), extended.list(u).end(), c))
                    vv.push_back(c);
            for (size_t i = 0; i < uu.size(); ++i) pairs.emplace_back(uu[i], vv[i]);
            extended.set_matching(u, v, std::move(pairs));
        }
    }
    MatchingAssignment solvable = normalize_perfect(extended);
    auto [c_big, trace] = color_mp2(big, solvable);
    out.trace = std::move(trace);
    out.coloring = c_big; // same vertex set
    if (!verify_coloring(solvable, out.coloring))
        throw InternalConsistencyError("completed-cover verification failed",
                                       serialize_trace(out.trace));
    if (!verify_coloring(m, out.coloring))
        throw InternalConsistencyError("restriction to the original cover failed",
                                       serialize_trace(out.trace));
    return out;
}

Graph random_planar_diam2(int target_vertices, uint64_t seed, bool delete_edges) {
    if (target_vertices < 4) throw RefusalError("corpus graphs need at least 4 vertices");
    RandomSource rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        // stacked triangulation
        Graph g;
        for (int i = 0; i < 4; ++i) g.add_vertex("v" + std::to_string(i));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
        std::vector<std::array<Vertex, 3>> faces = {
            {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        for (int i = 4; i < target_vertices; ++i) {
            size_t f = static_cast<size_t>(rng.below(faces.size()));
            auto [a, b, cc] = faces[f];
            Vertex nv = g.add_vertex("v" + std::to_string(i));
            g.add_edge(nv, a);
            g.add_edge(nv, b);
            g.add_edge(nv, cc);
            faces[f] = {a, b, nv};
            faces.push_back({a, cc, nv});
            faces.push_back({b, cc, nv});
        }
        auto d = g.diameter();
        if (!d || *d > 2) continue;
        if (delete_edges) {
            auto edges = g.edges();
            rng.shuffle(edges);
            for (auto [u, v] : edges) {
                if (rng.below(2) == 0) continue;
                g.remove_edge(u, v);
                auto dd = g.diameter();
                if (!dd || *dd > 2) g.add_edge(u, v);
            }
        }
        return g;
    }
    throw RefusalError("failed to sample a diameter-2 triangulation of the requested size");
}

} // namespace dpcolor
