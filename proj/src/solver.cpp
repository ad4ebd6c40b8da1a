#include "dpcolor/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dpcolor/errors.hpp"

namespace dpcolor {

namespace {

// Position-indexed view of an assignment for the search kernel: colors become
// list positions, matchings become partner-position tables.
struct Compiled {
    int n;
    std::vector<std::vector<int>> colors;              // position -> color token
    std::vector<std::vector<int>> nbr;                 // adjacency
    std::vector<std::vector<std::vector<int>>> partner; // [v][nbr index][pos] -> pos in nbr or -1

    explicit Compiled(const MatchingAssignment& m) {
        const Graph& g = m.graph();
        n = g.vertex_count();
        colors.resize(n);
        nbr.resize(n);
        partner.resize(n);
        for (Vertex v = 0; v < n; ++v) colors[v] = m.list(v);
        auto pos_of = [&](Vertex v, int c) {
            auto& l = colors[v];
            return static_cast<int>(std::lower_bound(l.begin(), l.end(), c) - l.begin());
        };
        for (Vertex v = 0; v < n; ++v) {
            nbr[v] = g.neighbors(v);
            partner[v].resize(nbr[v].size());
            for (size_t i = 0; i < nbr[v].size(); ++i) {
                Vertex u = nbr[v][i];
                partner[v][i].assign(colors[v].size(), -1);
                for (auto [cv, cu] : m.matching(v, u))
                    partner[v][i][pos_of(v, cv)] = pos_of(u, cu);
            }
        }
    }
};

struct Searcher {
    const Compiled& c;
    std::vector<uint32_t> residual; // bitmask over list positions
    std::vector<int> chosen;        // position or -1
    uint64_t nodes = 0;
    std::vector<std::pair<Vertex, int>> undo; // (vertex, position) removals

    explicit Searcher(const Compiled& cc) : c(cc) {
        residual.resize(c.n);
        chosen.assign(c.n, -1);
        for (int v = 0; v < c.n; ++v)
            residual[v] = (c.colors[v].size() >= 32) ? ~0u : ((1u << c.colors[v].size()) - 1);
    }

    bool assign(int v, int pos, size_t& mark) {
        chosen[v] = pos;
        mark = undo.size();
        for (size_t i = 0; i < c.nbr[v].size(); ++i) {
            int u = c.nbr[v][i];
            if (chosen[u] >= 0) continue;
            int p = c.partner[v][i][pos];
            if (p >= 0 && (residual[u] >> p & 1u)) {
                residual[u] &= ~(1u << p);
                undo.emplace_back(u, p);
                if (residual[u] == 0) return false;
            }
        }
        return true;
    }

    void unassign(int v, size_t mark) {
        chosen[v] = -1;
        while (undo.size() > mark) {
            auto [u, p] = undo.back();
            undo.pop_back();
            residual[u] |= 1u << p;
        }
    }

    int pick() const { // MRV, ties by vertex id
        int best = -1, best_count = 1 << 30;
        for (int v = 0; v < c.n; ++v) {
            if (chosen[v] >= 0) continue;
            int cnt = __builtin_popcount(residual[v]);
            if (cnt < best_count) {
                best_count = cnt;
                best = v;
            }
        }
        return best;
    }

    bool search() {
        ++nodes;
        int v = pick();
        if (v < 0) return true;
        uint32_t mask = residual[v];
        while (mask) {
            int pos = __builtin_ctz(mask);
            mask &= mask - 1;
            size_t mark;
            bool ok = assign(v, pos, mark);
            if (ok && search()) return true;
            unassign(v, mark);
        }
        return false;
    }
};

} // namespace

SolveResult solve_exact(const MatchingAssignment& m) {
    Compiled c(m);
    Searcher s(c);
    SolveResult r;
    if (s.search()) {
        r.status = SolveResult::Status::Sat;
        r.coloring.assign(c.n, 0);
        for (int v = 0; v < c.n; ++v) r.coloring[v] = c.colors[v][s.chosen[v]];
        if (!verify_coloring(m, r.coloring))
            throw InternalConsistencyError("solver produced a coloring that fails verification");
    }
    r.nodes = s.nodes;
    return r;
}

GreedyOutcome extend_greedy(const MatchingAssignment& m, const Coloring& partial,
                            const std::vector<Vertex>& order) {
    const Graph& g = m.graph();
    std::vector<bool> in_order(g.vertex_count(), false);
    for (Vertex v : order) {
        if (is_colored(partial, v)) throw RefusalError("greedy order revisits colored vertex " + g.name(v));
        if (in_order[v]) throw RefusalError("greedy order repeats vertex " + g.name(v));
        in_order[v] = true;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!is_colored(partial, v) && !in_order[v])
            throw RefusalError("greedy order misses vertex " + g.name(v));

    GreedyOutcome out;
    out.coloring = partial;
    for (size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        auto res = m.residual(v, out.coloring);
        if (res.empty()) {
            out.ok = false;
            out.stuck = v;
            // replay residual sizes of the stuck vertex along the order
            Coloring replay = partial;
            for (size_t j = 0; j < i; ++j) {
                replay[order[j]] = out.coloring[order[j]];
                out.residual_history.emplace_back(order[j], m.residual_size(v, replay));
            }
            out.coloring = partial;
            return out;
        }
        out.coloring[v] = res.front();
    }
    out.ok = true;
    return out;
}

std::optional<uint64_t> adversary_instance_count(const Graph& g, int k, uint64_t cap) {
    uint64_t fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    int components = 0;
    {
        std::vector<bool> seen(g.vertex_count(), false);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!seen[v]) {
                ++components;
                auto d = g.bfs_distances(v);
                for (Vertex u = 0; u < g.vertex_count(); ++u)
                    if (d[u] >= 0) seen[u] = true;
            }
    }
    int free_edges = g.edge_count() - (g.vertex_count() - components);
    uint64_t total = 1;
    for (int i = 0; i < free_edges; ++i) {
        if (total > cap / std::max<uint64_t>(fact, 1)) return std::nullopt;
        total *= fact;
    }
    return total;
}

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

AdversaryResult dp_colorable_for_all(const Graph& g, int k, uint64_t budget) {
    if (k < 1) throw RefusalError("k must be at least 1");
    auto count = adversary_instance_count(g, k, budget);
    if (!count)
        throw RefusalError("adversary search over budget: k!^(|E|-|V|+c) exceeds " +
                           std::to_string(budget) + " (|V|=" + std::to_string(g.vertex_count()) +
                           ", |E|=" + std::to_string(g.edge_count()) + ", k=" + std::to_string(k) + ")");

    // spanning forest via BFS from least vertex of each component
    std::vector<bool> in_tree_vertex(g.vertex_count(), false);
    std::set<std::pair<Vertex, Vertex>> tree;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        if (in_tree_vertex[r]) continue;
        in_tree_vertex[r] = true;
        std::vector<Vertex> q{r};
        for (size_t h = 0; h < q.size(); ++h) {
            Vertex u = q[h];
            for (Vertex w : g.neighbors(u))
                if (!in_tree_vertex[w]) {
                    in_tree_vertex[w] = true;
                    tree.insert({std::min(u, w), std::max(u, w)});
                    q.push_back(w);
                }
        }
    }
    std::vector<std::pair<Vertex, Vertex>> free_edges;
    for (auto e : g.edges())
        if (!tree.count(e)) free_edges.push_back(e);

    auto perms = all_permutations(k);
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> lists(g.vertex_count(), base);

    AdversaryResult result;
    std::vector<size_t> odo(free_edges.size(), 0);
    while (true) {
        MatchingAssignment m(g, lists);
        for (auto [u, v] : g.edges()) {
            std::vector<std::pair<int, int>> pairs;
            auto it = std::find(free_edges.begin(), free_edges.end(), std::make_pair(u, v));
            if (it == free_edges.end()) {
                for (int c = 1; c <= k; ++c) pairs.emplace_back(c, c);
            } else {
                const auto& p = perms[odo[it - free_edges.begin()]];
                for (int c = 1; c <= k; ++c) pairs.emplace_back(c, p[c - 1]);
            }
            m.set_matching(u, v, std::move(pairs));
        }
        ++result.instances;
        if (solve_exact(m).status == SolveResult::Status::Unsat) {
            result.colorable = false;
            result.counterexample = std::move(m);
            return result;
        }
        // advance odometer (last edge fastest)
        size_t i = odo.size();
        while (i > 0) {
            --i;
            if (++odo[i] < perms.size()) break;
            odo[i] = 0;
            if (i == 0) {
                result.colorable = true;
                return result;
            }
        }
        if (odo.empty()) {
            result.colorable = true;
            return result;
        }
    }
}

std::optional<int> dp_chromatic_number_exact(const Graph& g, int k_max, uint64_t budget) {
    for (int k = 1; k <= k_max; ++k)
        if (dp_colorable_for_all(g, k, budget).colorable) return k;
    return std::nullopt;
}

} // namespace dpcolor
