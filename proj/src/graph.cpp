#include "dpcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "dpcolor/errors.hpp"

namespace dpcolor {

Graph Graph::from_edge_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::set<std::string> names;
    for (const auto& [a, b] : pairs) {
        if (a == b) throw RefusalError("self-loop on vertex '" + a + "'");
        names.insert(a);
        names.insert(b);
    }
    Graph g;
    for (const auto& n : names) g.add_vertex(n);
    for (const auto& [a, b] : pairs) {
        Vertex u = g.vertex(a), v = g.vertex(b);
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

Vertex Graph::add_vertex(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    Vertex v = static_cast<Vertex>(names_.size());
    names_.push_back(name);
    index_[name] = v;
    adj_.emplace_back();
    return v;
}

Vertex Graph::vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw RefusalError("unknown vertex '" + name + "'");
    return it->second;
}

bool Graph::has_vertex(const std::string& name) const { return index_.count(name) != 0; }

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw RefusalError("self-loop on vertex '" + names_[u] + "'");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    Vertex a = add_vertex(u), b = add_vertex(v);
    add_edge(a, b);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) return;
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex t = (&a == &adj_[u]) ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::bfs_distances(Vertex src) const {
    std::vector<int> dist(vertex_count(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : adj_[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

bool Graph::connected() const {
    if (vertex_count() == 0) return true;
    auto d = bfs_distances(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

std::optional<int> Graph::diameter() const {
    int n = vertex_count();
    if (n <= 1) return 0;
    int best = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto d = bfs_distances(v);
        for (int x : d) {
            if (x < 0) return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

GraphMetrics Graph::degree_stats() const {
    GraphMetrics ms;
    ms.diameter = diameter();
    int n = vertex_count();
    if (n == 0) return ms;
    ms.min_degree = degree(0);
    ms.max_degree = degree(0);
    for (Vertex v = 1; v < n; ++v) {
        ms.min_degree = std::min(ms.min_degree, degree(v));
        ms.max_degree = std::max(ms.max_degree, degree(v));
    }
    return ms;
}

Graph Graph::without_vertex(Vertex drop) const {
    Graph g;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (v != drop) g.add_vertex(names_[v]);
    for (auto [u, v] : edges())
        if (u != drop && v != drop) g.add_edge(names_[u], names_[v]);
    return g;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
    std::set<Vertex> ks(keep.begin(), keep.end());
    Graph g;
    for (Vertex v : keep) g.add_vertex(names_[v]);
    for (auto [u, v] : edges())
        if (ks.count(u) && ks.count(v)) g.add_edge(names_[u], names_[v]);
    return g;
}

bool Graph::operator==(const Graph& o) const {
    if (names_ != o.names_) return false;
    return adj_ == o.adj_;
}

bool is_maximal_planar(const Graph& g) {
    if (g.vertex_count() < 3) throw RefusalError("is_maximal_planar requires at least 3 vertices");
    return g.edge_count() == 3 * g.vertex_count() - 6 && is_planar(g);
}

bool is_mp2(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_maximal_planar(g)) return false;
    auto diam = g.diameter();
    if (!diam || *diam > 2) return false;
    if (g.vertex_count() >= 5) {
        auto ms = g.degree_stats();
        if (ms.min_degree < 3 || ms.min_degree > 4)
            throw InternalConsistencyError(
                "MP2 predicate accepted a graph with min degree " + std::to_string(ms.min_degree) +
                "; bound 3..4 must hold");
    }
    return true;
}

} // namespace dpcolor
