#include <algorithm>

#include "dpcolor/errors.hpp"
#include "dpcolor/mp2.hpp"

// The catalog graphs. The adjacency of each entry is reconstructed from the
// coloring procedure that handles it: the named triangles and edges it tests,
// the straightened paths, the protected-choice steps, and the greedy orders,
// together with the class invariants (maximal planar, diameter two, minimum
// degree four) pin the structure down. Each reconstruction is validated by
// the test suite: class invariants, fuzzed totality of its procedure, and
// exact-solver cross-checks.

namespace dpcolor {

namespace {

std::string lbl(const std::string& base, int i) { return base + std::to_string(i); }

using Tri = std::array<std::string, 3>;

Graph build_h1() {
    Graph g;
    for (auto n : {"y1", "y2", "y3", "x1", "x2", "x3", "z1", "z2", "z3"}) g.add_vertex(n);
    const char* edges[] = {"y1 y2", "y1 y3", "y2 y3",
                           "x1 y1", "x1 y3", "x1 x2", "x1 x3",
                           "x2 y1", "x2 y2", "x2 x3",
                           "x3 y2", "x3 y3",
                           "z1 y1", "z1 y2", "z1 z2", "z1 z3",
                           "z2 y2", "z2 y3", "z2 z3",
                           "z3 y1", "z3 y3"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_h2() {
    Graph g;
    for (auto n : {"y1", "y2", "y3", "z1", "z2", "z3"}) g.add_vertex(n);
    const char* edges[] = {"y1 y2", "y1 y3", "y2 y3", "z1 z2", "z1 z3", "z2 z3",
                           "y1 z1", "y1 z3", "y2 z1", "y2 z2", "y3 z2", "y3 z3"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g1(int n) {
    Graph g;
    g.add_vertex("y");
    g.add_vertex("z");
    for (int i = 0; i < n; ++i) g.add_vertex(lbl("x", i));
    for (int i = 0; i < n; ++i) {
        g.add_edge("y", lbl("x", i));
        g.add_edge("z", lbl("x", i));
        g.add_edge(lbl("x", i), lbl("x", (i + 1) % n));
    }
    return g;
}

Graph build_g2() {
    Graph g;
    for (auto n : {"v", "w", "v1", "v2", "v3", "v4", "z", "x1", "x2", "y1", "y2"}) g.add_vertex(n);
    const char* edges[] = {"v v1", "v v2", "v v3", "v v4", "v x1", "v y1", "v y2",
                           "w v1", "w v2", "w v3", "w z", "w x2", "w y1", "w y2",
                           "v1 v2", "v1 y1", "v2 v3", "v3 v4", "v3 z",
                           "v4 y2", "v4 z", "z y2",
                           "x1 x2", "x1 y1", "x1 y2", "x2 y1", "x2 y2"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g3() {
    Graph g;
    for (auto n : {"v", "w", "v1", "v2", "v3", "z", "x1", "x2", "y1", "y2"}) g.add_vertex(n);
    const char* edges[] = {"v v1", "v v2", "v v3", "v x1", "v y1", "v y2",
                           "w v1", "w v2", "w z", "w x2", "w y1", "w y2",
                           "v1 v2", "v1 y1", "v2 v3", "v2 z", "v3 z", "v3 y2", "z y2",
                           "x1 x2", "x1 y1", "x1 y2", "x2 y1", "x2 y2"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g4() {
    Graph g;
    for (auto n : {"v", "v1", "v2", "v3", "p", "w", "z", "x1", "x2", "y1", "y2"}) g.add_vertex(n);
    const char* edges[] = {"v v1", "v v2", "v v3", "v x1", "v y1", "v y2",
                           "v1 v2", "v1 p", "v1 y1",
                           "v2 p", "v2 w", "v2 z", "v2 v3",
                           "v3 z", "v3 y2",
                           "p y1", "p w",
                           "w z", "w y1", "w y2", "w x2",
                           "z y2",
                           "x1 y1", "x1 y2", "x1 x2", "x2 y1", "x2 y2"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

void add_ladder(Graph& g, const std::string& base, int n, const std::string& hub1,
                const std::string& hub2, const std::string& first_anchor,
                const std::string& last_anchor) {
    for (int i = 1; i <= n; ++i) {
        g.add_edge(lbl(base, i), hub1);
        g.add_edge(lbl(base, i), hub2);
        if (i > 1) g.add_edge(lbl(base, i - 1), lbl(base, i));
    }
    g.add_edge(lbl(base, 1), first_anchor);
    g.add_edge(lbl(base, n), last_anchor);
}

Graph build_g5(int n) {
    Graph g;
    for (auto s : {"y1", "y2", "v", "v1", "v2", "w"}) g.add_vertex(s);
    for (int i = 1; i <= n; ++i) g.add_vertex(lbl("x", i));
    add_ladder(g, "x", n, "y1", "y2", "v", "w");
    const char* edges[] = {"v y1", "v y2", "v v1", "v v2", "w y1", "w y2", "w v1", "w v2",
                           "v1 y1", "v1 v2", "v2 y2"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g6(int n, int m) {
    Graph g;
    for (auto s : {"y1", "y2", "v", "v1", "v2", "w"}) g.add_vertex(s);
    for (int i = 1; i <= n; ++i) g.add_vertex(lbl("x", i));
    for (int j = 1; j <= m; ++j) g.add_vertex(lbl("z", j));
    add_ladder(g, "x", n, "y1", "y2", "v", "w");
    add_ladder(g, "z", m, "y1", "v2", "v1", "w");
    const char* edges[] = {"v y1", "v y2", "v v1", "v v2",
                           "w y1", "w y2", "w v2",
                           "v1 y1", "v1 v2", "v2 y2"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g7(int n, int m, int l) {
    Graph g;
    for (auto s : {"y1", "y2", "v", "v1", "v2", "w", "z1"}) g.add_vertex(s);
    for (int i = 1; i <= n; ++i) g.add_vertex(lbl("x", i));
    for (int i = 1; i <= l; ++i) g.add_vertex(lbl("p", i));
    for (int j = 1; j <= m; ++j) g.add_vertex(lbl("q", j));
    add_ladder(g, "x", n, "y1", "y2", "v", "w");
    add_ladder(g, "p", l, "y2", "v1", "v2", lbl("q", m));
    add_ladder(g, "q", m, "y2", "z1", "w", lbl("p", l));
    g.add_edge(lbl("p", l), "z1");
    const char* edges[] = {"v y1", "v y2", "v v1", "v v2",
                           "v1 y1", "v1 v2", "v1 z1",
                           "v2 y2",
                           "w y1", "w y2", "w z1",
                           "z1 y1"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g8(int n, int m) {
    Graph g;
    for (auto s : {"y1", "y2", "v", "v1", "v2", "w", "p", "p1", "p2"}) g.add_vertex(s);
    for (int i = 1; i <= n; ++i) g.add_vertex(lbl("x", i));
    for (int j = 1; j <= m; ++j) g.add_vertex(lbl("z", j));
    add_ladder(g, "x", n, "y1", "y2", "v", "w");
    add_ladder(g, "z", m, "y1", "p", "v1", "p1");
    const char* edges[] = {"v y1", "v y2", "v v1", "v v2",
                           "v1 y1", "v1 v2", "v1 p",
                           "v2 y2", "v2 p",
                           "p y2", "p p1", "p p2",
                           "p1 y1", "p1 p2", "p1 w",
                           "p2 y2", "p2 w",
                           "w y1", "w y2"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g9(int n) {
    Graph g;
    for (auto s : {"y1", "y2", "v", "v1", "v2", "w", "z1", "p1", "p2"}) g.add_vertex(s);
    for (int i = 1; i <= n; ++i) g.add_vertex(lbl("x", i));
    add_ladder(g, "x", n, "y1", "y2", "v", "w");
    const char* edges[] = {"v y1", "v y2", "v v1", "v v2",
                           "v1 y1", "v1 z1", "v1 v2",
                           "v2 y2", "v2 z1",
                           "z1 y1", "z1 y2", "z1 p1", "z1 p2",
                           "p1 y1", "p1 w", "p1 p2",
                           "p2 y2", "p2 w",
                           "w y1", "w y2"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_wheel_core() {
    Graph g;
    for (auto s : {"u", "u0", "u1", "u2", "u3"}) g.add_vertex(s);
    for (auto e : {"u u0", "u u1", "u u2", "u u3", "u0 u1", "u1 u2", "u2 u3", "u3 u0"}) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g10() {
    Graph g = build_wheel_core();
    for (auto s : {"x", "y", "z", "w"}) g.add_vertex(s);
    const char* edges[] = {"y u0", "y u1", "z u1", "z u2", "w u2", "w u3", "x u3", "x u0",
                           "x y", "y z", "z w", "w x", "x z"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g11() {
    Graph g = build_wheel_core();
    for (auto s : {"x", "x1", "y", "z", "w"}) g.add_vertex(s);
    const char* edges[] = {"u0 x", "u0 x1", "u0 y", "u1 y", "u1 z", "u2 z", "u2 w",
                           "u3 x", "u3 w", "x x1", "x w", "x1 y", "x1 z", "x1 w",
                           "y z", "z w"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g12() {
    Graph g = build_wheel_core();
    for (auto s : {"x", "x1", "y", "y1", "z", "w"}) g.add_vertex(s);
    const char* edges[] = {"u0 y", "u0 x", "u0 x1", "u1 y", "u1 y1", "u1 z",
                           "u2 z", "u2 w", "u3 w", "u3 x",
                           "y y1", "y x1", "y1 z", "y1 x1", "y1 w",
                           "z w", "w x", "w x1", "x x1"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

Graph build_g13() {
    Graph g = build_wheel_core();
    for (auto s : {"x", "x1", "y", "z", "z1", "w"}) g.add_vertex(s);
    const char* edges[] = {"u0 y", "u0 x", "u0 x1", "u1 y", "u1 z",
                           "u2 z", "u2 z1", "u2 w", "u3 w", "u3 x",
                           "y z", "y z1", "y x1", "z z1",
                           "z1 w", "z1 x", "z1 x1", "w x", "x x1"};
    for (auto e : edges) {
        std::string s(e);
        auto sp = s.find(' ');
        g.add_edge(s.substr(0, sp), s.substr(sp + 1));
    }
    return g;
}

int need(const CatalogParams& p, const std::string& key, const std::string& name, int minimum) {
    auto it = p.find(key);
    if (it == p.end())
        throw RefusalError(name + " requires parameter '" + key + "' (minimum " +
                           std::to_string(minimum) + ")");
    if (it->second < minimum)
        throw RefusalError(name + " parameter " + key + "=" + std::to_string(it->second) +
                           " below validated minimum " + std::to_string(minimum));
    if (it->second > 60) throw RefusalError(name + " parameter " + key + " above supported bound 60");
    return it->second;
}

} // namespace

const std::vector<CatalogFamily>& catalog_families() {
    static const std::vector<CatalogFamily> fams = {
        {"H1", {}, {}},
        {"H2", {}, {}},
        {"G1", {"n"}, {{"n", 4}}},
        {"G2", {}, {}},
        {"G3", {}, {}},
        {"G4", {}, {}},
        {"G5", {"n"}, {{"n", 2}}},
        {"G6", {"n", "m"}, {{"n", 1}, {"m", 1}}},
        {"G7", {"n", "m", "l"}, {{"n", 1}, {"m", 1}, {"l", 2}}},
        {"G8", {"n", "m"}, {{"n", 1}, {"m", 1}}},
        {"G9", {"n"}, {{"n", 1}}},
        {"G10", {}, {}},
        {"G11", {}, {}},
        {"G12", {}, {}},
        {"G13", {}, {}},
    };
    return fams;
}

CatalogEntry catalog_entry(const std::string& name, const CatalogParams& params) {
    CatalogEntry e;
    e.name = name;
    e.params = params;
    auto tri = [&](const std::string& key, Tri t) { e.named_triangles[key] = t; };
    if (name == "H1") {
        e.graph = build_h1();
        tri("C1", {"y1", "y2", "y3"});
        tri("C2", {"x3", "y2", "y3"});
        tri("C3", {"z2", "y2", "y3"});
        tri("C4", {"x2", "y1", "y2"});
        tri("C5", {"z1", "y1", "y2"});
        tri("C6", {"x1", "y1", "y3"});
        tri("C7", {"z3", "y1", "y3"});
    } else if (name == "H2") {
        e.graph = build_h2();
    } else if (name == "G1") {
        e.graph = build_g1(need(params, "n", name, 4));
    } else if (name == "G2") {
        e.graph = build_g2();
        tri("C1", {"v", "v2", "v3"});
        tri("C2", {"w", "v2", "v3"});
    } else if (name == "G3") {
        e.graph = build_g3();
        tri("C1", {"v", "v1", "v2"});
        tri("C2", {"w", "v1", "v2"});
    } else if (name == "G4") {
        e.graph = build_g4();
        tri("C1", {"v", "y1", "x1"});
        tri("C2", {"v", "y2", "x1"});
    } else if (name == "G5") {
        e.graph = build_g5(need(params, "n", name, 2));
    } else if (name == "G6") {
        e.graph = build_g6(need(params, "n", name, 1), need(params, "m", name, 1));
    } else if (name == "G7") {
        int l = need(params, "l", name, 2);
        e.graph = build_g7(need(params, "n", name, 1), need(params, "m", name, 1), l);
        tri("C1", {lbl("p", l), "y2", lbl("p", l - 1)});
        tri("C2", {"v1", lbl("p", l), lbl("p", l - 1)});
    } else if (name == "G8") {
        e.graph = build_g8(need(params, "n", name, 1), need(params, "m", name, 1));
        tri("C1", {"p", "y2", "v2"});
        tri("C2", {"v", "y2", "v2"});
        tri("C3", {"w", "y2", "p2"});
        tri("C4", {"p", "y2", "p2"});
    } else if (name == "G9") {
        e.graph = build_g9(need(params, "n", name, 1));
        tri("C1", {"v", "y1", "x1"});
        tri("C2", {"v", "y2", "x1"});
    } else if (name == "G10") {
        e.graph = build_g10();
        tri("C1", {"y", "u0", "u1"});
        tri("C2", {"x", "y", "u0"});
    } else if (name == "G11") {
        e.graph = build_g11();
        tri("C1", {"x", "u0", "u3"});
        tri("C2", {"x", "u0", "x1"});
        tri("C3", {"u", "u0", "u3"});
        tri("C4", {"y", "u0", "x1"});
        tri("C5", {"y", "u0", "u1"});
        tri("C6", {"u", "u0", "u1"});
        tri("C7", {"u", "u3", "u2"});
        tri("C8", {"u", "u1", "u2"});
    } else if (name == "G12") {
        e.graph = build_g12();
        tri("C1", {"y", "u0", "u1"});
        tri("C2", {"u", "u0", "u1"});
        tri("C3", {"y", "u1", "y1"});
    } else if (name == "G13") {
        e.graph = build_g13();
        tri("C1", {"z", "z1", "u2"});
        tri("C2", {"w", "z1", "u2"});
    } else {
        throw RefusalError("unknown catalog name '" + name + "'");
    }
    for (auto& [key, t] : e.named_triangles) {
        Vertex a = e.graph.vertex(t[0]), b = e.graph.vertex(t[1]), c = e.graph.vertex(t[2]);
        if (!e.graph.has_edge(a, b) || !e.graph.has_edge(b, c) || !e.graph.has_edge(a, c))
            throw InternalConsistencyError("catalog " + name + ": named triangle " + key +
                                           " is not a triangle");
    }
    return e;
}

std::vector<CatalogParams> smallest_params(const std::string& name, int count) {
    std::vector<CatalogParams> out;
    if (name == "G1") {
        for (int n = 4; n < 4 + count; ++n) out.push_back({{"n", n}});
    } else if (name == "G5") {
        for (int n = 2; n < 2 + count; ++n) out.push_back({{"n", n}});
    } else if (name == "G9") {
        for (int n = 1; n < 1 + count; ++n) out.push_back({{"n", n}});
    } else if (name == "G6" || name == "G8") {
        std::vector<CatalogParams> cand = {{{"n", 1}, {"m", 1}},
                                           {{"n", 1}, {"m", 2}},
                                           {{"n", 2}, {"m", 1}},
                                           {{"n", 2}, {"m", 2}}};
        for (int i = 0; i < count && i < static_cast<int>(cand.size()); ++i)
            out.push_back(cand[i]);
    } else if (name == "G7") {
        std::vector<CatalogParams> cand = {{{"n", 1}, {"m", 1}, {"l", 2}},
                                           {{"n", 1}, {"m", 2}, {"l", 2}},
                                           {{"n", 2}, {"m", 1}, {"l", 2}},
                                           {{"n", 1}, {"m", 1}, {"l", 3}}};
        for (int i = 0; i < count && i < static_cast<int>(cand.size()); ++i)
            out.push_back(cand[i]);
    } else {
        out.push_back({});
    }
    return out;
}

} // namespace dpcolor
