#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dpcolor/cover.hpp"

namespace dpcolor {

struct SolveResult {
    enum class Status { Sat, Unsat };
    Status status = Status::Unsat;
    Coloring coloring; // populated when Sat; always passes verify_coloring
    uint64_t nodes = 0;
};

// Complete backtracking search over residual lists with minimum-remaining-
// values vertex selection (ties by vertex id, colors ascending). Residuals
// are maintained incrementally with undo. Deterministic.
SolveResult solve_exact(const MatchingAssignment& m);

struct GreedyOutcome {
    bool ok = false;
    Coloring coloring;
    Vertex stuck = -1;
    // residual size of the stuck vertex after each assignment that preceded
    // the failure, for diagnosis
    std::vector<std::pair<Vertex, int>> residual_history;
};

// Colors `order` in sequence, lowest residual color first; `order` must list
// exactly the uncolored vertices. Fails at the first empty residual.
GreedyOutcome extend_greedy(const MatchingAssignment& m, const Coloring& partial,
                            const std::vector<Vertex>& order);

struct AdversaryResult {
    bool colorable = false;
    std::optional<MatchingAssignment> counterexample; // first in canonical order
    uint64_t instances = 0;
};

// Decides whether every k-list perfect matching assignment admits a coloring.
// A BFS spanning forest is fixed to identity matchings (losing no generality:
// any assignment can be renamed to straighten a forest), so only
// k!^(|E|-|V|+components) instances are enumerated. Refuses when that count
// exceeds `budget`.
AdversaryResult dp_colorable_for_all(const Graph& g, int k, uint64_t budget = 100000000ULL);

// Least k <= k_max with dp_colorable_for_all true; nullopt if none.
std::optional<int> dp_chromatic_number_exact(const Graph& g, int k_max,
                                             uint64_t budget = 100000000ULL);

// Number of adversary instances the canonical enumeration would visit.
// Returns nullopt on overflow past `cap`.
std::optional<uint64_t> adversary_instance_count(const Graph& g, int k, uint64_t cap);

} // namespace dpcolor
