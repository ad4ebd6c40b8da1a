#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/mp2.hpp"

namespace dpcolor {

struct Completion {
    Graph original;
    Graph completed;
    std::vector<std::pair<Vertex, Vertex>> added_edges;
};

// Extends a connected planar graph of diameter <= 2 (|V| >= 3) to a maximal
// planar supergraph on the same vertex set by greedy planarity-preserving
// edge insertion. Diameter cannot grow, so the completion stays at <= 2.
Completion triangulate_diam2(const Graph& g);

struct PipelineResult {
    Completion completion;
    Coloring coloring; // valid for the original graph's cover
    ColoringTrace trace;
};

// Colors any planar diameter-<=2 graph from a 4-list assignment:
// triangulate, extend the assignment with identity matchings (padded to
// perfect), color the completion, restrict. The result is verified against
// both covers.
PipelineResult color_diam2(const Graph& g, const MatchingAssignment& m);

// Random maximal planar graph by iterated vertex stacking into faces, then
// random edge deletions that keep the diameter at <= 2. Test corpus source.
Graph random_planar_diam2(int target_vertices, uint64_t seed, bool delete_edges = true);

} // namespace dpcolor
