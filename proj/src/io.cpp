#include "dpcolor/io.hpp"

#include <sstream>

#include "dpcolor/errors.hpp"
#include "json.hpp"

namespace dpcolor {

using nlohmann::json;

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ls >> b)) throw RefusalError("line " + std::to_string(lineno) + ": expected two vertex tokens");
        if (ls >> extra && extra[0] != '#')
            throw RefusalError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        pairs.emplace_back(a, b);
    }
    return Graph::from_edge_pairs(pairs);
}

std::string serialize_edge_list(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> lines;
    for (auto [u, v] : g.edges()) {
        std::string a = g.name(u), b = g.name(v);
        if (b < a) std::swap(a, b);
        lines.emplace_back(a, b);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (auto& [a, b] : lines) out += a + " " + b + "\n";
    return out;
}

MatchingAssignment parse_assignment(const Graph& g, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw RefusalError(std::string("assignment parse error: ") + e.what());
    }
    if (!j.contains("lists") || !j["lists"].is_object())
        throw RefusalError("assignment missing 'lists' object");
    std::vector<std::vector<int>> lists(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    for (auto& [name, arr] : j["lists"].items()) {
        Vertex v = g.vertex(name);
        lists[v] = arr.get<std::vector<int>>();
        seen[v] = true;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!seen[v]) throw RefusalError("no list for vertex '" + g.name(v) + "'");
    MatchingAssignment m(g, std::move(lists));
    if (j.contains("matchings")) {
        for (auto& [ekey, arr] : j["matchings"].items()) {
            std::istringstream ks(ekey);
            std::string a, b;
            if (!(ks >> a >> b)) throw RefusalError("bad matching key '" + ekey + "'");
            Vertex u = g.vertex(a), v = g.vertex(b);
            std::vector<std::pair<int, int>> pairs;
            for (auto& p : arr) {
                if (!p.is_array() || p.size() != 2) throw RefusalError("bad pair in matching '" + ekey + "'");
                pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
            }
            m.set_matching(u, v, std::move(pairs));
        }
    }
    auto violations = m.validate();
    if (!violations.empty()) throw RefusalError("invalid assignment: " + violations.front());
    return m;
}

std::string serialize_assignment(const MatchingAssignment& m) {
    const Graph& g = m.graph();
    json lists = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) lists[g.name(v)] = m.list(v);
    json matchings = json::object();
    for (auto [u, v] : g.edges()) {
        std::string a = g.name(u), b = g.name(v);
        Vertex x = u, y = v;
        if (b < a) {
            std::swap(a, b);
            std::swap(x, y);
        }
        json arr = json::array();
        for (auto [cu, cv] : m.matching(x, y)) arr.push_back(json::array({cu, cv}));
        matchings[a + " " + b] = arr;
    }
    json out;
    out["lists"] = lists;
    out["matchings"] = matchings;
    return out.dump(2) + "\n";
}

Coloring parse_coloring(const Graph& g, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw RefusalError(std::string("coloring parse error: ") + e.what());
    }
    Coloring c(g.vertex_count(), 0);
    for (auto& [name, val] : j.items()) c[g.vertex(name)] = val.get<int>();
    return c;
}

std::string serialize_coloring(const Graph& g, const Coloring& c) {
    json j = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (is_colored(c, v)) j[g.name(v)] = c[v];
    return j.dump() + "\n";
}

} // namespace dpcolor
