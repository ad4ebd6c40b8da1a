#include "dpcolor/transform.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "dpcolor/errors.hpp"
#include "json.hpp"

namespace dpcolor {

int Straightening::map_color(Vertex v, int c) const {
    auto it = renames.find(v);
    if (it == renames.end()) return c;
    auto jt = it->second.find(c);
    return jt == it->second.end() ? c : jt->second;
}

int Straightening::unmap_color(Vertex v, int c) const {
    auto it = renames.find(v);
    if (it == renames.end()) return c;
    for (auto [from, to] : it->second)
        if (to == c) return from;
    return c;
}

Straightening Straightening::after(const Straightening& first) const {
    Straightening out = first;
    for (auto& [v, perm] : renames) {
        auto it = out.renames.find(v);
        if (it == out.renames.end()) {
            out.renames[v] = perm;
            continue;
        }
        std::map<int, int> composed;
        std::set<int> domain;
        for (auto [a, b] : it->second) domain.insert(a);
        for (auto [a, b] : perm) domain.insert(first.unmap_color(v, a));
        for (int a : domain) composed[a] = map_color(v, first.map_color(v, a));
        it->second = std::move(composed);
    }
    return out;
}

Coloring Straightening::unmap(const Coloring& c) const {
    Coloring out = c;
    for (Vertex v = 0; v < static_cast<Vertex>(out.size()); ++v)
        if (out[v] != 0) out[v] = unmap_color(v, out[v]);
    return out;
}

MatchingAssignment apply_renaming(const MatchingAssignment& m, const Straightening& s) {
    const Graph& g = m.graph();
    std::vector<std::vector<int>> lists(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (int c : m.list(v)) lists[v].push_back(s.map_color(v, c));
        std::sort(lists[v].begin(), lists[v].end());
        if (std::adjacent_find(lists[v].begin(), lists[v].end()) != lists[v].end())
            throw RefusalError("renaming is not a bijection on the list of " + g.name(v));
    }
    MatchingAssignment out(g, std::move(lists));
    for (auto [u, v] : g.edges()) {
        std::vector<std::pair<int, int>> pairs;
        for (auto [a, b] : m.matching(u, v))
            pairs.emplace_back(s.map_color(u, a), s.map_color(v, b));
        out.set_matching(u, v, std::move(pairs));
    }
    return out;
}

bool edge_is_straight(const MatchingAssignment& m, Vertex u, Vertex v) {
    for (auto [a, b] : m.matching(u, v))
        if (a != b) return false;
    return true;
}

std::vector<std::pair<Vertex, Vertex>> straight_edges(const MatchingAssignment& m) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto [u, v] : m.graph().edges())
        if (edge_is_straight(m, u, v)) out.emplace_back(u, v);
    return out;
}

namespace {

// Full matching as a map, oriented u -> v; requires a perfect matching.
std::map<int, int> matching_map(const MatchingAssignment& m, Vertex u, Vertex v) {
    if (!m.matching_is_perfect(u, v))
        throw RefusalError("edge " + m.graph().name(u) + " " + m.graph().name(v) +
                           " does not carry a perfect matching");
    std::map<int, int> f;
    for (auto [a, b] : m.matching(u, v)) f[a] = b;
    return f;
}

} // namespace

std::pair<MatchingAssignment, Straightening>
straighten_tree(const MatchingAssignment& m, const std::vector<std::pair<Vertex, Vertex>>& tree) {
    const Graph& g = m.graph();
    std::set<Vertex> verts;
    std::map<Vertex, std::vector<Vertex>> tadj;
    std::set<std::pair<Vertex, Vertex>> seen;
    std::map<Vertex, Vertex> uf;
    std::function<Vertex(Vertex)> find = [&](Vertex a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };
    for (auto [u, v] : tree) {
        if (!g.has_edge(u, v))
            throw RefusalError("tree edge " + g.name(u) + " " + g.name(v) + " is not in the graph");
        auto k = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (!seen.insert(k).second) continue;
        if (!uf.count(u)) uf[u] = u;
        if (!uf.count(v)) uf[v] = v;
        if (find(u) == find(v)) throw RefusalError("edge set is not acyclic");
        uf[find(u)] = find(v);
        verts.insert(u);
        verts.insert(v);
        tadj[u].push_back(v);
        tadj[v].push_back(u);
    }
    size_t k = verts.empty() ? 0 : m.list(*verts.begin()).size();
    for (Vertex v : verts)
        if (m.list(v).size() != k)
            throw RefusalError("straighten_tree requires equal list sizes");

    Straightening s;
    std::set<Vertex> visited;
    // deterministic roots: lexicographically least name per component
    std::vector<Vertex> order(verts.begin(), verts.end());
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return g.name(a) < g.name(b); });
    for (Vertex root : order) {
        if (visited.count(root)) continue;
        // identity on the root
        std::map<int, int> id;
        for (int c : m.list(root)) id[c] = c;
        s.renames[root] = id;
        visited.insert(root);
        std::deque<Vertex> q{root};
        while (!q.empty()) {
            Vertex p = q.front();
            q.pop_front();
            auto kids = tadj[p];
            std::sort(kids.begin(), kids.end(),
                      [&](Vertex a, Vertex b) { return g.name(a) < g.name(b); });
            for (Vertex c : kids) {
                if (visited.count(c)) continue;
                visited.insert(c);
                // child color x pairs with parent color f_inv(x); send it where
                // the parent's renaming sends that color, making the edge straight
                auto f = matching_map(m, p, c); // parent color -> child color
                std::map<int, int> perm;
                for (auto [pc, cc] : f) perm[cc] = s.renames[p][pc];
                s.renames[c] = perm;
                q.push_back(c);
            }
        }
    }
    auto renamed = apply_renaming(m, s);
    for (auto [u, v] : tree)
        if (!edge_is_straight(renamed, u, v))
            throw InternalConsistencyError("straighten_tree failed to straighten " + g.name(u) +
                                           " " + g.name(v));
    return {std::move(renamed), std::move(s)};
}

bool has_property_P(const MatchingAssignment& m, Vertex v1, Vertex v2, Vertex v3) {
    const Graph& g = m.graph();
    if (!g.has_edge(v1, v2) || !g.has_edge(v2, v3) || !g.has_edge(v1, v3))
        throw RefusalError("property P requires a triangle");
    auto f12 = matching_map(m, v1, v2);
    auto f23 = matching_map(m, v2, v3);
    auto f13 = matching_map(m, v1, v3);
    for (auto [a, b] : f12)
        if (f13[a] != f23[b]) return false;
    return true;
}

std::pair<int, int> exploit_non_property_P(const MatchingAssignment& m,
                                           Vertex v1, Vertex v2, Vertex v3) {
    if (has_property_P(m, v1, v2, v3))
        throw RefusalError("triangle has property P; nothing to exploit");
    int want = static_cast<int>(m.list(v3).size()) - 1;
    Coloring partial(m.graph().vertex_count(), 0);
    for (int a1 : m.list(v1)) {
        auto blocked2 = m.partner(v1, v2, a1);
        for (int a2 : m.list(v2)) {
            if (blocked2 && *blocked2 == a2) continue; // pair not independent
            partial[v1] = a1;
            partial[v2] = a2;
            int res = m.residual_size(v3, partial);
            partial[v1] = partial[v2] = 0;
            if (res >= want) return {a1, a2};
        }
    }
    throw InternalConsistencyError("non-P triangle admitted no exploiting pair");
}

std::pair<int, int> color_path_ends(const MatchingAssignment& m, Vertex x, Vertex y, Vertex z,
                                    const Coloring& partial) {
    const Graph& g = m.graph();
    if (!g.has_edge(x, y) || !g.has_edge(y, z))
        throw RefusalError("color_path_ends requires edges xy and yz");
    if (g.has_edge(x, z)) throw RefusalError("color_path_ends requires xz to be a non-edge");
    if (is_colored(partial, x) || is_colored(partial, z))
        throw RefusalError("path ends must be uncolored");
    auto rx = m.residual(x, partial);
    auto rz = m.residual(z, partial);
    int ry = m.residual_size(y, partial);
    if (static_cast<int>(rx.size() + rz.size()) <= ry)
        throw RefusalError("color_path_ends requires |res(x)| + |res(z)| > |res(y)|");
    Coloring work = partial;
    for (int a1 : rx)
        for (int a2 : rz) {
            work[x] = a1;
            work[z] = a2;
            int after = m.residual_size(y, work);
            work[x] = work[z] = 0;
            if (after >= ry - 1) return {a1, a2};
        }
    throw InternalConsistencyError("path observation failed: no pair spares y");
}

std::string serialize_straightening(const Graph& g, const Straightening& s) {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [v, perm] : s.renames) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto [from, to] : perm) arr.push_back(nlohmann::json::array({from, to}));
        j[g.name(v)] = arr;
    }
    return j.dump() + "\n";
}

} // namespace dpcolor
