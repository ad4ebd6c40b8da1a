#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpcolor {

// Partial or complete vertex coloring; 0 = uncolored, colors are >= 1.
using Coloring = std::vector<int>;

inline bool is_colored(const Coloring& c, Vertex v) { return c[v] != 0; }

// Per-vertex color lists plus per-edge matchings between endpoint lists.
// Matchings are stored once per edge, oriented from the smaller vertex id;
// lookups work in either orientation so callers never see the convention.
class MatchingAssignment {
public:
    MatchingAssignment(Graph g, std::vector<std::vector<int>> lists);

    const Graph& graph() const { return g_; }
    const std::vector<int>& list(Vertex v) const { return lists_[v]; }
    const std::vector<std::vector<int>>& lists() const { return lists_; }

    // pairs oriented u -> v; replaces any existing matching on the edge
    void set_matching(Vertex u, Vertex v, std::vector<std::pair<int, int>> pairs);
    // matching oriented u -> v, sorted by first component
    std::vector<std::pair<int, int>> matching(Vertex u, Vertex v) const;
    // color of v matched to (u, cu), if any
    std::optional<int> partner(Vertex u, Vertex v, int cu) const;

    bool matching_is_perfect(Vertex u, Vertex v) const;
    bool all_perfect() const;

    // Structural violations (matching property, list membership, missing
    // edges). Empty means valid.
    std::vector<std::string> validate() const;

    // Colors of v not blocked through matchings by the partial coloring.
    std::vector<int> residual(Vertex v, const Coloring& partial) const;
    int residual_size(Vertex v, const Coloring& partial) const;

private:
    std::pair<Vertex, Vertex> key(Vertex u, Vertex v) const {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    }
    Graph g_;
    std::vector<std::vector<int>> lists_;
    std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<int, int>>> matchings_;
};

// Identity matchings over shared colors: the list-coloring reduction.
// With pad=true, equal-size lists are padded to perfect matchings by pairing
// the unmatched colors in ascending order (the WLOG normalization; note that
// padding can only add constraints).
MatchingAssignment identity_assignment(const Graph& g, std::vector<std::vector<int>> lists,
                                       bool pad = false);

// Pads every equal-size-list edge matching to a perfect one (ascending order).
MatchingAssignment normalize_perfect(const MatchingAssignment& m);

// Lists {1..k} everywhere, an independently uniform random perfect matching
// (random permutation) on each edge; reproducible from the seed.
MatchingAssignment random_assignment(const Graph& g, int k, uint64_t seed);

// The cover graph of a matching assignment: nodes are (vertex, color) pairs,
// each fiber is a clique, cross edges follow the matchings exactly.
struct CoverGraph {
    std::vector<std::pair<Vertex, int>> nodes; // sorted
    std::vector<std::pair<int, int>> edges;    // node-index pairs, a < b, sorted
    const Graph* origin = nullptr;

    int node_index(Vertex v, int c) const;
    bool has_edge(int a, int b) const;
};

CoverGraph build_cover(const MatchingAssignment& m);

// True iff the chosen coloring is complete, uses list colors only, and no
// edge's matching contains the chosen pair.
bool verify_coloring(const MatchingAssignment& m, const Coloring& c);

} // namespace dpcolor
