#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpcolor {

using Vertex = int;

struct GraphMetrics {
    std::optional<int> diameter; // nullopt = infinite (disconnected)
    int min_degree = 0;
    int max_degree = 0;
};

// Simple undirected graph with stable string identifiers. Vertex ids are
// dense ints in insertion order; from_edge_pairs inserts names in sorted
// order so ids are reproducible from the edge list alone.
class Graph {
public:
    Graph() = default;

    // Rejects self-loops, collapses duplicate edges.
    static Graph from_edge_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

    Vertex add_vertex(const std::string& name);
    Vertex vertex(const std::string& name) const; // throws RefusalError if absent
    bool has_vertex(const std::string& name) const;
    const std::string& name(Vertex v) const { return names_[v]; }

    void add_edge(Vertex u, Vertex v);
    void add_edge(const std::string& u, const std::string& v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    // Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    std::vector<int> bfs_distances(Vertex src) const; // -1 = unreachable
    bool connected() const;
    std::optional<int> diameter() const;
    GraphMetrics degree_stats() const;

    Graph without_vertex(Vertex v) const;
    Graph induced(const std::vector<Vertex>& keep) const;

    bool operator==(const Graph& o) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

// Planarity (left-right criterion, linear time). is_planar applies the
// |E| <= 3|V|-6 cutoff first; lr_planarity is the bare algorithm.
bool lr_planarity(const Graph& g);
bool is_planar(const Graph& g);

// Maximality checked arithmetically: planar and |E| = 3|V|-6. Requires |V| >= 3.
bool is_maximal_planar(const Graph& g);

// Maximal planar with diameter <= 2. For |V| >= 5 additionally cross-checks
// 3 <= min degree <= 4 and reports violation as an internal-consistency error.
bool is_mp2(const Graph& g);

} // namespace dpcolor
