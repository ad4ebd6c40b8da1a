#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/transform.hpp"

namespace dpcolor {

using CatalogParams = std::map<std::string, int>;

// One member of the maximal-planar diameter-2 minimum-degree-4 catalog.
// Vertex labels and the named triangles follow the coloring procedures.
struct CatalogEntry {
    std::string name;
    CatalogParams params;
    Graph graph;
    std::map<std::string, std::array<std::string, 3>> named_triangles;
};

struct CatalogFamily {
    std::string name;
    std::vector<std::string> param_names; // empty for fixed graphs
    CatalogParams min_params;
};

const std::vector<CatalogFamily>& catalog_families();
CatalogEntry catalog_entry(const std::string& name, const CatalogParams& params = {});
// The three smallest validated parameter tuples (just {} for fixed graphs).
std::vector<CatalogParams> smallest_params(const std::string& name, int count = 3);

struct Identification {
    CatalogEntry entry;
    std::map<Vertex, Vertex> iso; // input vertex -> entry.graph vertex
};

// Finds the first catalog member isomorphic to g, in catalog order.
// Requires g to pass is_mp2 with minimum degree 4.
std::optional<Identification> identify_catalog(const Graph& g);

// Graph isomorphism by labeled backtracking with degree pruning.
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Graph& a, const Graph& b);

// Removes a degree-3 vertex from an MP2 graph; checks the result is again MP2.
Graph reduce_degree3(const Graph& g, Vertex v);

// Auditable record of one coloring run.
struct TraceStep {
    std::string action; // normalize | test_P | branch | straighten | assign |
                        // unassign | same_color | path_ends | assert_residual |
                        // assert_straight | greedy
    std::string detail; // JSON payload
};

struct ColoringTrace {
    std::vector<TraceStep> steps;
    bool branch_taken(const std::string& name) const;
};

std::string serialize_trace(const ColoringTrace& t);

// Re-executes the assignments recorded in a trace against the assignment and
// returns the reproduced coloring.
Coloring replay_trace(const MatchingAssignment& m, const ColoringTrace& t);

// Runs the entry's constructive case procedure on a 4-list perfect matching
// assignment over entry.graph. Every residual bound claimed along the way is
// asserted; failures raise InternalConsistencyError carrying the trace.
std::pair<Coloring, ColoringTrace> case_procedure(const CatalogEntry& entry,
                                                  const MatchingAssignment& m);

// Colors any MP2 graph: K5-e base case, degree-3 reduction, or catalog
// dispatch; graphs on fewer than 5 vertices are colored greedily.
std::pair<Coloring, ColoringTrace> color_mp2(const Graph& g, const MatchingAssignment& m);

} // namespace dpcolor
