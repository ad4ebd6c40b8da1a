#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/cover.hpp"

namespace dpcolor {

// Per-vertex color renamings. Vertices not present map identically.
struct Straightening {
    std::map<Vertex, std::map<int, int>> renames;

    int map_color(Vertex v, int c) const;
    int unmap_color(Vertex v, int c) const;
    // this after `first`: apply(first) then apply(*this)
    Straightening after(const Straightening& first) const;
    Coloring unmap(const Coloring& c) const;
};

// Applies renames to an assignment (lists keep the same token sets only when
// each rename permutes the vertex's own list, which straighten_tree ensures).
MatchingAssignment apply_renaming(const MatchingAssignment& m, const Straightening& s);

// Edges whose matching is the identity on color tokens.
std::vector<std::pair<Vertex, Vertex>> straight_edges(const MatchingAssignment& m);

bool edge_is_straight(const MatchingAssignment& m, Vertex u, Vertex v);

// Renames lists along an acyclic edge set so every tree edge becomes
// straight. Each tree component is rooted at its lexicographically least
// vertex and processed in breadth-first order. Requires equal list sizes and
// perfect matchings on the tree edges.
std::pair<MatchingAssignment, Straightening>
straighten_tree(const MatchingAssignment& m, const std::vector<std::pair<Vertex, Vertex>>& tree);

// A triangle has property P when its three matchings compose consistently,
// i.e. all three edges are simultaneously straightenable. Order-invariant.
// Requires the three edges to exist with perfect, equal-size matchings.
bool has_property_P(const MatchingAssignment& m, Vertex v1, Vertex v2, Vertex v3);

// For a triangle without property P: the lexicographically least pair
// (a1 in L(v1), a2 in L(v2)) that is independent in the cover and leaves
// v3 with at least |L(v3)| - 1 residual colors.
std::pair<int, int> exploit_non_property_P(const MatchingAssignment& m,
                                           Vertex v1, Vertex v2, Vertex v3);

// For a path x-y-z with xz not an edge and |res(x)| + |res(z)| > |res(y)|:
// the lexicographically least residual pair (a1 for x, a2 for z) whose
// assignment removes at most one color from y's residual.
std::pair<int, int> color_path_ends(const MatchingAssignment& m, Vertex x, Vertex y, Vertex z,
                                    const Coloring& partial);

std::string serialize_straightening(const Graph& g, const Straightening& s);

} // namespace dpcolor
