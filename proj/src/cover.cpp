#include "dpcolor/cover.hpp"

#include <algorithm>
#include <set>

#include "dpcolor/errors.hpp"
#include "dpcolor/rng.hpp"

namespace dpcolor {

MatchingAssignment::MatchingAssignment(Graph g, std::vector<std::vector<int>> lists)
    : g_(std::move(g)), lists_(std::move(lists)) {
    if (static_cast<int>(lists_.size()) != g_.vertex_count())
        throw RefusalError("list assignment must cover every vertex");
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        if (l.empty()) throw RefusalError("empty color list");
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw RefusalError("duplicate color in list");
    }
    for (auto [u, v] : g_.edges()) matchings_[{u, v}] = {};
}

void MatchingAssignment::set_matching(Vertex u, Vertex v, std::vector<std::pair<int, int>> pairs) {
    if (!g_.has_edge(u, v))
        throw RefusalError("no edge " + g_.name(u) + " " + g_.name(v));
    if (u > v) {
        for (auto& p : pairs) std::swap(p.first, p.second);
        std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    matchings_[{u, v}] = std::move(pairs);
}

std::vector<std::pair<int, int>> MatchingAssignment::matching(Vertex u, Vertex v) const {
    auto it = matchings_.find(key(u, v));
    if (it == matchings_.end())
        throw RefusalError("no edge " + g_.name(u) + " " + g_.name(v));
    if (u < v) return it->second;
    auto flipped = it->second;
    for (auto& p : flipped) std::swap(p.first, p.second);
    std::sort(flipped.begin(), flipped.end());
    return flipped;
}

std::optional<int> MatchingAssignment::partner(Vertex u, Vertex v, int cu) const {
    auto it = matchings_.find(key(u, v));
    if (it == matchings_.end())
        throw RefusalError("no edge " + g_.name(u) + " " + g_.name(v));
    if (u < v) {
        for (auto [a, b] : it->second)
            if (a == cu) return b;
    } else {
        for (auto [a, b] : it->second)
            if (b == cu) return a;
    }
    return std::nullopt;
}

bool MatchingAssignment::matching_is_perfect(Vertex u, Vertex v) const {
    auto it = matchings_.find(key(u, v));
    if (it == matchings_.end()) return false;
    size_t k = lists_[u].size();
    return lists_[v].size() == k && it->second.size() == k;
}

bool MatchingAssignment::all_perfect() const {
    for (auto [u, v] : g_.edges())
        if (!matching_is_perfect(u, v)) return false;
    return true;
}

std::vector<std::string> MatchingAssignment::validate() const {
    std::vector<std::string> out;
    auto in_list = [&](Vertex v, int c) {
        return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
    };
    for (auto& [k, pairs] : matchings_) {
        auto [u, v] = k;
        std::string edge = g_.name(u) + " " + g_.name(v);
        std::set<int> us, vs;
        for (auto [a, b] : pairs) {
            if (!us.insert(a).second)
                out.push_back("edge " + edge + ": color " + std::to_string(a) + " of " +
                              g_.name(u) + " matched twice");
            if (!vs.insert(b).second)
                out.push_back("edge " + edge + ": color " + std::to_string(b) + " of " +
                              g_.name(v) + " matched twice");
            if (!in_list(u, a))
                out.push_back("edge " + edge + ": color " + std::to_string(a) +
                              " not in list of " + g_.name(u));
            if (!in_list(v, b))
                out.push_back("edge " + edge + ": color " + std::to_string(b) +
                              " not in list of " + g_.name(v));
        }
    }
    return out;
}

std::vector<int> MatchingAssignment::residual(Vertex v, const Coloring& partial) const {
    if (is_colored(partial, v))
        throw RefusalError("residual requested for colored vertex " + g_.name(v));
    std::vector<int> res = lists_[v];
    for (Vertex u : g_.neighbors(v)) {
        if (!is_colored(partial, u)) continue;
        auto blocked = partner(u, v, partial[u]);
        if (blocked) {
            auto it = std::find(res.begin(), res.end(), *blocked);
            if (it != res.end()) res.erase(it);
        }
    }
    return res;
}

int MatchingAssignment::residual_size(Vertex v, const Coloring& partial) const {
    return static_cast<int>(residual(v, partial).size());
}

MatchingAssignment identity_assignment(const Graph& g, std::vector<std::vector<int>> lists,
                                       bool pad) {
    MatchingAssignment m(g, std::move(lists));
    for (auto [u, v] : g.edges()) {
        std::vector<std::pair<int, int>> pairs;
        for (int c : m.list(u))
            if (std::binary_search(m.list(v).begin(), m.list(v).end(), c)) pairs.emplace_back(c, c);
        if (pad && m.list(u).size() == m.list(v).size()) {
            std::vector<int> uu, vv;
            for (int c : m.list(u))
                if (!std::binary_search(m.list(v).begin(), m.list(v).end(), c)) uu.push_back(c);
            for (int c : m.list(v))
                if (!std::binary_search(m.list(u).begin(), m.list(u).end(), c)) vv.push_back(c);
            for (size_t i = 0; i < uu.size(); ++i) pairs.emplace_back(uu[i], vv[i]);
        }
        m.set_matching(u, v, std::move(pairs));
    }
    return m;
}

MatchingAssignment normalize_perfect(const MatchingAssignment& in) {
    MatchingAssignment m = in;
    const Graph& g = in.graph();
    for (auto [u, v] : g.edges()) {
        if (in.list(u).size() != in.list(v).size()) continue;
        auto pairs = in.matching(u, v);
        std::set<int> mu, mv;
        for (auto [a, b] : pairs) {
            mu.insert(a);
            mv.insert(b);
        }
        std::vector<int> uu, vv;
        for (int c : in.list(u))
            if (!mu.count(c)) uu.push_back(c);
        for (int c : in.list(v))
            if (!mv.count(c)) vv.push_back(c);
        for (size_t i = 0; i < uu.size(); ++i) pairs.emplace_back(uu[i], vv[i]);
        m.set_matching(u, v, std::move(pairs));
    }
    return m;
}

MatchingAssignment random_assignment(const Graph& g, int k, uint64_t seed) {
    if (k < 1) throw RefusalError("k must be at least 1");
    std::vector<int> base(k);
    for (int i = 0; i < k; ++i) base[i] = i + 1;
    std::vector<std::vector<int>> lists(g.vertex_count(), base);
    MatchingAssignment m(g, std::move(lists));
    RandomSource rng(seed);
    for (auto [u, v] : g.edges()) {
        std::vector<int> perm = base;
        rng.shuffle(perm);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i) pairs.emplace_back(i + 1, perm[i]);
        m.set_matching(u, v, std::move(pairs));
    }
    return m;
}

int CoverGraph::node_index(Vertex v, int c) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), std::make_pair(v, c));
    if (it == nodes.end() || *it != std::make_pair(v, c)) return -1;
    return static_cast<int>(it - nodes.begin());
}

bool CoverGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

CoverGraph build_cover(const MatchingAssignment& m) {
    auto violations = m.validate();
    if (!violations.empty())
        throw RefusalError("invalid matching assignment: " + violations.front());
    CoverGraph h;
    h.origin = &m.graph();
    const Graph& g = m.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int c : m.list(v)) h.nodes.emplace_back(v, c);
    std::sort(h.nodes.begin(), h.nodes.end());
    auto idx = [&](Vertex v, int c) { return h.node_index(v, c); };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& l = m.list(v);
        for (size_t i = 0; i < l.size(); ++i)
            for (size_t j = i + 1; j < l.size(); ++j)
                h.edges.emplace_back(idx(v, l[i]), idx(v, l[j]));
    }
    for (auto [u, v] : g.edges())
        for (auto [a, b] : m.matching(u, v)) {
            int x = idx(u, a), y = idx(v, b);
            h.edges.emplace_back(std::min(x, y), std::max(x, y));
        }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

bool verify_coloring(const MatchingAssignment& m, const Coloring& c) {
    const Graph& g = m.graph();
    if (static_cast<int>(c.size()) != g.vertex_count()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!is_colored(c, v)) return false;
        if (!std::binary_search(m.list(v).begin(), m.list(v).end(), c[v])) return false;
    }
    for (auto [u, v] : g.edges()) {
        auto p = m.partner(u, v, c[u]);
        if (p && *p == c[v]) return false;
    }
    return true;
}

} // namespace dpcolor
