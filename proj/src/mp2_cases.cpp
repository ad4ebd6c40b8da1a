#include <algorithm>
#include <functional>
#include <set>

#include "dpcolor/errors.hpp"
#include "dpcolor/mp2.hpp"
#include "json.hpp"

// The per-entry coloring procedures. Each follows the decision tree for its
// graph: property-P tests on the named triangles, tree straightenings,
// forced same-color steps, protected choices, and greedy completion in fixed
// orders. Every residual bound the procedure relies on is asserted at
// runtime, so a wrong catalog reconstruction fails loudly instead of
// producing an invalid coloring.

namespace dpcolor {

using json = nlohmann::json;

namespace {

std::string lbl(const std::string& base, int i) { return base + std::to_string(i); }

using NameMap = std::map<std::string, std::string>;

NameMap invert(const NameMap& f) {
    NameMap out;
    for (auto& [a, b] : f) out[b] = a;
    return out;
}

// f after g: x -> f(g(x)); names absent from a map are fixed points
NameMap compose(const NameMap& f, const NameMap& g) {
    auto app = [](const NameMap& m, const std::string& x) {
        auto it = m.find(x);
        return it == m.end() ? x : it->second;
    };
    NameMap out;
    std::set<std::string> domain;
    for (auto& [a, b] : g) {
        domain.insert(a);
        domain.insert(b);
    }
    for (auto& [a, b] : f) {
        domain.insert(a);
        domain.insert(b);
    }
    for (auto& x : domain) out[x] = app(f, app(g, x));
    return out;
}

struct CaseCtx {
    const CatalogEntry& entry;
    const Graph& g;
    const MatchingAssignment original;
    MatchingAssignment m;
    Coloring partial;
    Straightening total; // original tokens -> current tokens
    ColoringTrace trace;

    CaseCtx(const CatalogEntry& e, const MatchingAssignment& input)
        : entry(e), g(e.graph), original(input), m(input) {
        if (!(input.graph() == e.graph))
            throw RefusalError("assignment is not over the catalog graph " + e.name);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (input.list(v).size() != 4)
                throw RefusalError("case procedure requires 4-lists");
        if (!input.all_perfect())
            throw RefusalError("case procedure requires perfect matchings");
        partial.assign(g.vertex_count(), 0);
        // normalize every palette to {1,2,3,4}
        Straightening norm;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::map<int, int> p;
            int next = 1;
            for (int c : input.list(v)) p[c] = next++;
            norm.renames[v] = std::move(p);
        }
        m = apply_renaming(m, norm);
        total = norm;
        step("normalize", json::object());
    }

    Vertex V(const std::string& l) const { return g.vertex(l); }
    Vertex Vx(const std::string& base, int i) const { return g.vertex(lbl(base, i)); }

    void step(const std::string& action, json detail) {
        trace.steps.push_back({action, detail.dump()});
    }

    [[noreturn]] void fail(const std::string& what) {
        throw InternalConsistencyError("case " + entry.name + ": " + what, serialize_trace(trace));
    }

    std::vector<int> residual(Vertex v) { return m.residual(v, partial); }
    int res(Vertex v) { return static_cast<int>(residual(v).size()); }

    void require(Vertex v, int k) {
        int got = res(v);
        step("assert_residual", {{"v", g.name(v)}, {"bound", k}, {"size", got}});
        if (got < k)
            fail("claimed |L(" + g.name(v) + ", I)| >= " + std::to_string(k) + " but it is " +
                 std::to_string(got));
    }

    bool test_P(const std::string& key, Vertex a, Vertex b, Vertex c) {
        bool p = has_property_P(m, a, b, c);
        step("test_P", {{"name", key},
                        {"triangle", {g.name(a), g.name(b), g.name(c)}},
                        {"result", p}});
        return p;
    }

    bool test_P(const std::string& key) {
        auto& t = entry.named_triangles.at(key);
        return test_P(key, V(t[0]), V(t[1]), V(t[2]));
    }

    void branch(const std::string& name) { step("branch", {{"name", name}}); }

    void assign(Vertex v, int color) {
        auto r = residual(v);
        if (std::find(r.begin(), r.end(), color) == r.end())
            fail("color " + std::to_string(color) + " not available for " + g.name(v));
        partial[v] = color;
        step("assign", {{"v", g.name(v)}, {"color", total.unmap_color(v, color)}});
    }

    void unassign(Vertex v) {
        partial[v] = 0;
        step("unassign", {{"v", g.name(v)}});
    }

    // straighten with explicit roots that keep their tokens
    void straighten(const std::vector<std::pair<std::string, std::string>>& tree_labels,
                    const std::vector<std::string>& root_labels) {
        std::vector<std::pair<Vertex, Vertex>> tree;
        json edges = json::array();
        for (auto& [a, b] : tree_labels) {
            tree.emplace_back(V(a), V(b));
            edges.push_back({a, b});
        }
        std::map<Vertex, std::vector<Vertex>> tadj;
        std::set<Vertex> verts;
        for (auto [u, v] : tree) {
            if (!g.has_edge(u, v)) fail("straightening a non-edge");
            tadj[u].push_back(v);
            tadj[v].push_back(u);
            verts.insert(u);
            verts.insert(v);
        }
        std::vector<Vertex> order;
        for (auto& r : root_labels)
            if (verts.count(V(r))) order.push_back(V(r));
        for (Vertex v : verts) order.push_back(v);
        Straightening s;
        std::set<Vertex> visited;
        for (Vertex root : order) {
            if (visited.count(root)) continue;
            std::map<int, int> id;
            for (int c : m.list(root)) id[c] = c;
            s.renames[root] = id;
            visited.insert(root);
            std::vector<Vertex> q{root};
            for (size_t h = 0; h < q.size(); ++h) {
                Vertex p = q[h];
                auto kids = tadj[p];
                std::sort(kids.begin(), kids.end(),
                          [&](Vertex a, Vertex b) { return g.name(a) < g.name(b); });
                for (Vertex child : kids) {
                    if (visited.count(child)) continue;
                    visited.insert(child);
                    std::map<int, int> perm;
                    for (auto [cu, cv] : m.matching(p, child)) perm[cv] = s.renames[p][cu];
                    s.renames[child] = perm;
                    q.push_back(child);
                }
            }
        }
        m = apply_renaming(m, s);
        for (auto [u, v] : tree)
            if (!edge_is_straight(m, u, v))
                fail("failed to straighten " + g.name(u) + " " + g.name(v));
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (partial[v] != 0) partial[v] = s.map_color(v, partial[v]);
        total = s.after(total);
        step("straighten", {{"edges", edges}});
    }

    void assert_straight(const std::string& a, const std::string& b) {
        step("assert_straight", {{"edge", {a, b}}});
        if (!edge_is_straight(m, V(a), V(b)))
            fail("edge " + a + " " + b + " expected straight");
    }

    // the non-P exploitation: colors a and b, leaves c with >= 3 residual colors
    std::pair<int, int> exploit(Vertex a, Vertex b, Vertex c) {
        auto [ca, cb] = exploit_non_property_P(m, a, b, c);
        step("exploit_P",
             {{"triangle", {g.name(a), g.name(b), g.name(c)}},
              {"colors", {total.unmap_color(a, ca), total.unmap_color(b, cb)}}});
        assign(a, ca);
        assign(b, cb);
        require(c, 3);
        return {ca, cb};
    }

    // least color of a that keeps b's residual at >= bound
    int protect(Vertex a, Vertex b, int bound) {
        for (int c : residual(a)) {
            partial[a] = c;
            int after = res(b);
            partial[a] = 0;
            if (after >= bound) {
                step("protect", {{"v", g.name(a)}, {"target", g.name(b)}, {"bound", bound}});
                assign(a, c);
                return c;
            }
        }
        fail("no color of " + g.name(a) + " keeps " + g.name(b) + " at >= " + std::to_string(bound));
    }

    std::pair<int, int> path_ends(Vertex x, Vertex y, Vertex z) {
        auto [cx, cz] = color_path_ends(m, x, y, z, partial);
        step("path_ends", {{"order", {g.name(x), g.name(y), g.name(z)}}});
        assign(x, cx);
        assign(z, cz);
        return {cx, cz};
    }

    // all vertices get one common color; they must be pairwise non-adjacent
    // and the witness edges must already be straight
    int same_color(const std::vector<Vertex>& vs,
                   const std::vector<std::pair<std::string, std::string>>& witness,
                   std::optional<int> forced = std::nullopt) {
        for (auto& [a, b] : witness) assert_straight(a, b);
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (g.has_edge(vs[i], vs[j]))
                    fail("same-color set contains adjacent vertices " + g.name(vs[i]) + ", " +
                         g.name(vs[j]));
        auto usable = [&](int c) {
            for (Vertex v : vs) {
                auto r = residual(v);
                if (std::find(r.begin(), r.end(), c) == r.end()) return false;
            }
            return true;
        };
        int chosen = -1;
        if (forced) {
            if (!usable(*forced)) fail("forced same-color value unavailable");
            chosen = *forced;
        } else {
            for (int c : residual(vs[0]))
                if (usable(c)) {
                    chosen = c;
                    break;
                }
            if (chosen < 0) fail("no common color for the same-color step");
        }
        json names = json::array();
        for (Vertex v : vs) names.push_back(g.name(v));
        step("same_color", {{"vs", names}, {"color", total.unmap_color(vs[0], chosen)}});
        for (Vertex v : vs) assign(v, chosen);
        return chosen;
    }

    void greedy(const std::vector<Vertex>& order) {
        json names = json::array();
        for (Vertex v : order) names.push_back(g.name(v));
        step("greedy", {{"order", names}});
        for (Vertex v : order) {
            auto r = residual(v);
            if (r.empty()) fail("greedy stuck at " + g.name(v));
            assign(v, r.front());
        }
    }

    int partner_or_fail(Vertex u, Vertex v, int cu) {
        auto p = m.partner(u, v, cu);
        if (!p) fail("perfect matching lookup failed on " + g.name(u) + " " + g.name(v));
        return *p;
    }

    // color of u matched to (v, cv) across edge uv
    int inverse_partner(Vertex u, Vertex v, int cv) {
        for (int cu : m.list(u))
            if (partner_or_fail(u, v, cu) == cv) return cu;
        fail("no inverse partner on " + g.name(u) + " " + g.name(v));
    }

    void reset_colors() {
        partial.assign(g.vertex_count(), 0);
        step("reset", json::object());
    }

    std::vector<Vertex> asc(const std::string& base, int lo, int hi) const {
        std::vector<Vertex> out;
        for (int i = lo; i <= hi; ++i) out.push_back(Vx(base, i));
        return out;
    }
    std::vector<Vertex> desc(const std::string& base, int hi, int lo) const {
        std::vector<Vertex> out;
        for (int i = hi; i >= lo; --i) out.push_back(Vx(base, i));
        return out;
    }
    static std::vector<Vertex> cat(std::initializer_list<std::vector<Vertex>> parts) {
        std::vector<Vertex> out;
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }
    std::vector<Vertex> named(const std::vector<std::string>& ls) const {
        std::vector<Vertex> out;
        for (auto& l : ls) out.push_back(g.vertex(l));
        return out;
    }

    Coloring finish() {
        Coloring c = total.unmap(partial);
        if (!verify_coloring(original, c)) fail("final coloring failed verification");
        return c;
    }
};

void remap_trace(ColoringTrace& t, const NameMap& to_original) {
    auto ren = [&](const std::string& n) {
        auto it = to_original.find(n);
        return it == to_original.end() ? n : it->second;
    };
    for (auto& s : t.steps) {
        json d = json::parse(s.detail);
        for (auto key : {"v", "target"})
            if (d.contains(key) && d[key].is_string()) d[key] = ren(d[key]);
        for (auto key : {"vs", "order", "triangle", "edge"})
            if (d.contains(key))
                for (auto& x : d[key])
                    if (x.is_string()) x = ren(x);
        if (d.contains("edges"))
            for (auto& e : d["edges"])
                for (auto& x : e) x = ren(x);
        s.detail = d.dump();
    }
}

using CaseFn = std::function<void(CaseCtx&)>;

// Runs `fn` on the current instance relabeled by the graph automorphism sigma
// and pulls the resulting coloring back: m'(s(u), s(v)) = m(u, v) and
// c(v) = c'(s(v)). Color tokens live in the current (renamed) space of ctx.
void mirror(CaseCtx& ctx, const NameMap& sigma, const CaseFn& fn) {
    const Graph& g = ctx.g;
    auto s = [&](Vertex v) {
        auto it = sigma.find(g.name(v));
        return it == sigma.end() ? v : g.vertex(it->second);
    };
    std::vector<std::vector<int>> lists(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) lists[s(v)] = ctx.m.list(v);
    MatchingAssignment relabeled(g, std::move(lists));
    for (auto [u, v] : g.edges())
        relabeled.set_matching(s(u), s(v), ctx.m.matching(u, v));
    ctx.step("mirror", {{"map", sigma}});
    CaseCtx sub(ctx.entry, relabeled);
    fn(sub);
    Coloring c_sub = sub.finish(); // tokens of ctx's current space
    ctx.partial.assign(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) ctx.partial[v] = c_sub[s(v)];
    // fold the sub-trace back: remap names, convert colors to original tokens
    remap_trace(sub.trace, invert(sigma));
    for (auto& st : sub.trace.steps) {
        if (st.action == "assign" || st.action == "same_color" || st.action == "exploit_P") {
            json d = json::parse(st.detail);
            if (d.contains("color") && d.contains("v")) {
                Vertex v = g.vertex(d["v"].get<std::string>());
                d["color"] = ctx.total.unmap_color(v, d["color"].get<int>());
            } else if (d.contains("color") && d.contains("vs")) {
                Vertex v = g.vertex(d["vs"][0].get<std::string>());
                d["color"] = ctx.total.unmap_color(v, d["color"].get<int>());
            } else if (d.contains("colors") && d.contains("triangle")) {
                Vertex a = g.vertex(d["triangle"][0].get<std::string>());
                Vertex b = g.vertex(d["triangle"][1].get<std::string>());
                d["colors"][0] = ctx.total.unmap_color(a, d["colors"][0].get<int>());
                d["colors"][1] = ctx.total.unmap_color(b, d["colors"][1].get<int>());
            }
            st.detail = d.dump();
        }
        ctx.trace.steps.push_back(st);
    }
}

// ---------------------------------------------------------------- Case 1: H1

void case_h1(CaseCtx& c) {
    Vertex y1 = c.V("y1"), y2 = c.V("y2"), y3 = c.V("y3");
    Vertex x1 = c.V("x1"), x2 = c.V("x2"), x3 = c.V("x3");
    Vertex z1 = c.V("z1"), z2 = c.V("z2"), z3 = c.V("z3");
    if (!c.test_P("C1")) {
        c.branch("H1.C1.nonP");
        c.exploit(y3, y2, y1);
        c.require(z2, 2);
        c.require(z1, 3);
        c.protect(z1, z2, 2);
        c.require(x2, 3);
        c.protect(x2, x3, 2);
        c.greedy(c.named({"y1", "x1", "x3", "z3", "z2"}));
        return;
    }
    c.branch("H1.C1.P");
    static const NameMap tau = {{"x1", "z3"}, {"z3", "x1"}, {"x2", "z1"},
                                {"z1", "x2"}, {"x3", "z2"}, {"z2", "x3"}};
    static const NameMap rho = {{"y1", "y3"}, {"y3", "y2"}, {"y2", "y1"},
                                {"x1", "x3"}, {"x3", "x2"}, {"x2", "x1"},
                                {"z1", "z3"}, {"z3", "z2"}, {"z2", "z1"}};
    const std::vector<std::pair<std::string, NameMap>> mirrors = {
        {"C2", {}},
        {"C3", tau},
        {"C4", rho},
        {"C5", compose(tau, rho)},
        {"C6", compose(rho, rho)},
        {"C7", compose(tau, compose(rho, rho))}};
    for (auto& [key, map] : mirrors) {
        if (c.test_P(key)) continue;
        c.branch("H1." + key + ".nonP");
        if (!map.empty()) {
            mirror(c, map, case_h1);
            return;
        }
        // C2 = x3 y2 y3 without property P
        c.exploit(y3, y2, x3);
        c.require(y1, 2);
        c.require(z1, 3);
        c.require(z2, 2);
        c.path_ends(y1, z1, z2);
        c.require(z1, 2);
        c.greedy(c.named({"z3", "z1", "x1", "x2", "x3"}));
        return;
    }
    c.branch("H1.allP");
    c.straighten({{"y1", "y2"}, {"y2", "y3"}, {"y2", "x3"}, {"y2", "z2"},
                  {"y1", "x2"}, {"y1", "z1"}, {"y1", "x1"}, {"y1", "z3"}},
                 {"y1"});
    c.assert_straight("y1", "y3");
    c.assert_straight("x3", "y3");
    c.assert_straight("z2", "y3");
    c.assert_straight("x2", "y2");
    c.assert_straight("z1", "y2");
    c.assert_straight("x1", "y3");
    c.assert_straight("z3", "y3");
    c.same_color({y2, x1, z3},
                 {{"y1", "y2"}, {"y1", "x1"}, {"y1", "z3"}, {"y2", "y3"}, {"x1", "y3"}, {"z3", "y3"}});
    c.require(z1, 2);
    c.require(y1, 3);
    c.require(x2, 2);
    c.path_ends(z1, y1, x2);
    c.require(y1, 2);
    c.require(y3, 3);
    c.greedy(c.named({"x3", "z2", "y3", "y1"}));
}

// ------------------------------------------------------- Case 2: H2 inside H1

// H2 sits inside H1: extend the assignment with fresh vertices carrying
// identity matchings, color H1, restrict.
std::pair<Coloring, ColoringTrace> run_h2(const CatalogEntry& entry, const MatchingAssignment& m) {
    (void)entry;
    CatalogEntry h1 = catalog_entry("H1");
    ColoringTrace trace;
    trace.steps.push_back({"branch", json{{"name", "H2.embed_H1"}}.dump()});
    Straightening norm;
    for (Vertex v = 0; v < m.graph().vertex_count(); ++v) {
        std::map<int, int> p;
        int next = 1;
        for (int col : m.list(v)) p[col] = next++;
        norm.renames[v] = std::move(p);
    }
    MatchingAssignment normalized = apply_renaming(m, norm);
    std::vector<std::vector<int>> lists(h1.graph.vertex_count(), std::vector<int>{1, 2, 3, 4});
    MatchingAssignment big(h1.graph, std::move(lists));
    for (auto [u, v] : h1.graph.edges()) {
        const std::string &nu = h1.graph.name(u), &nv = h1.graph.name(v);
        if (m.graph().has_vertex(nu) && m.graph().has_vertex(nv))
            big.set_matching(u, v,
                             normalized.matching(m.graph().vertex(nu), m.graph().vertex(nv)));
        else
            big.set_matching(u, v, {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    }
    auto [c_big, t_big] = case_procedure(h1, big);
    Coloring c(m.graph().vertex_count(), 0);
    for (Vertex v = 0; v < m.graph().vertex_count(); ++v) {
        int token = c_big[h1.graph.vertex(m.graph().name(v))];
        for (auto [orig, renamed] : norm.renames[v])
            if (renamed == token) c[v] = orig;
    }
    // keep only the steps that concern H2's vertices in the replayable record
    for (auto& s : t_big.steps) {
        if (s.action == "assign" || s.action == "unassign") {
            json d = json::parse(s.detail);
            std::string name = d["v"].get<std::string>();
            if (!m.graph().has_vertex(name)) continue;
            if (s.action == "assign") {
                Vertex v = m.graph().vertex(name);
                int token = d["color"].get<int>();
                for (auto [orig, renamed] : norm.renames[v])
                    if (renamed == token) d["color"] = orig;
                trace.steps.push_back({s.action, d.dump()});
                continue;
            }
        }
        trace.steps.push_back(s);
    }
    if (!verify_coloring(m, c))
        throw InternalConsistencyError("case H2: restricted coloring failed verification",
                                       serialize_trace(trace));
    return {c, trace};
}

// ---------------------------------------------------------------- Case 3: G1

void case_g1(CaseCtx& c) {
    int n = c.entry.params.at("n");
    c.branch("G1.straighten");
    c.straighten({{"y", "x1"}, {"x1", "z"}}, {"y"});
    c.same_color({c.V("y"), c.V("z")}, {{"y", "x1"}, {"x1", "z"}});
    auto order = c.asc("x", 2, n - 1);
    order.push_back(c.Vx("x", 0));
    order.push_back(c.Vx("x", 1));
    c.greedy(order);
}

// ---------------------------------------------------------------- Case 4: G2

void case_g2(CaseCtx& c) {
    if (!c.test_P("C1")) {
        c.branch("G2.C1.nonP");
        c.exploit(c.V("v"), c.V("v3"), c.V("v2"));
        c.require(c.V("v4"), 2);
        c.require(c.V("y2"), 3);
        c.protect(c.V("y2"), c.V("v4"), 2);
        c.require(c.V("y1"), 3);
        c.protect(c.V("y1"), c.V("x1"), 2);
        c.greedy(c.named({"w", "z", "v4", "x2", "x1", "v1", "v2"}));
        return;
    }
    c.branch("G2.C1.P");
    if (!c.test_P("C2")) {
        c.branch("G2.C2.nonP");
        mirror(c, {{"v", "w"}, {"w", "v"}, {"v4", "z"}, {"z", "v4"}, {"x1", "x2"}, {"x2", "x1"}},
               case_g2);
        return;
    }
    c.branch("G2.allP");
    c.straighten({{"v", "v2"}, {"v2", "v3"}, {"v2", "w"}}, {"v"});
    c.assert_straight("v", "v3");
    c.assert_straight("w", "v3");
    c.same_color({c.V("v"), c.V("w")}, {{"v", "v2"}, {"w", "v2"}, {"v", "v3"}, {"w", "v3"}});
    c.require(c.V("y1"), 2);
    c.require(c.V("x1"), 3);
    c.require(c.V("y2"), 2);
    c.path_ends(c.V("y1"), c.V("x1"), c.V("y2"));
    c.require(c.V("x1"), 2);
    c.require(c.V("v2"), 3);
    c.require(c.V("v3"), 3);
    c.greedy(c.named({"x2", "x1", "v1", "z", "v4", "v3", "v2"}));
}

// ---------------------------------------------------------------- Case 5: G3

void case_g3(CaseCtx& c) {
    if (!c.test_P("C1")) {
        c.branch("G3.C1.nonP");
        c.exploit(c.V("v"), c.V("v2"), c.V("v1"));
        c.require(c.V("v3"), 2);
        c.require(c.V("y2"), 3);
        c.protect(c.V("y2"), c.V("v3"), 2);
        c.require(c.V("y1"), 3);
        c.protect(c.V("y1"), c.V("x1"), 2);
        c.greedy(c.named({"w", "v1", "x2", "x1", "z", "v3"}));
        return;
    }
    c.branch("G3.C1.P");
    if (!c.test_P("C2")) {
        c.branch("G3.C2.nonP");
        mirror(c, {{"v", "w"}, {"w", "v"}, {"v3", "z"}, {"z", "v3"}, {"x1", "x2"}, {"x2", "x1"}},
               case_g3);
        return;
    }
    c.branch("G3.allP");
    c.straighten({{"v", "v1"}, {"v1", "v2"}, {"v1", "w"}}, {"v"});
    c.assert_straight("v", "v2");
    c.assert_straight("w", "v2");
    c.same_color({c.V("v"), c.V("w")}, {{"v", "v1"}, {"w", "v1"}, {"v", "v2"}, {"w", "v2"}});
    c.require(c.V("y1"), 2);
    c.require(c.V("x1"), 3);
    c.require(c.V("y2"), 2);
    c.path_ends(c.V("y1"), c.V("x1"), c.V("y2"));
    c.require(c.V("x1"), 2);
    c.require(c.V("v1"), 2);
    c.require(c.V("v2"), 3);
    c.greedy(c.named({"x2", "x1", "z", "v3", "v2", "v1"}));
}

// ---------------------------------------------------------------- Case 6: G4

void case_g4(CaseCtx& c) {
    if (!c.test_P("C1")) {
        c.branch("G4.C1.nonP");
        c.exploit(c.V("v"), c.V("y1"), c.V("x1"));
        c.require(c.V("v1"), 2);
        c.require(c.V("v2"), 3);
        c.protect(c.V("v2"), c.V("v1"), 2);
        c.require(c.V("y2"), 3);
        c.protect(c.V("y2"), c.V("v3"), 2);
        c.greedy(c.named({"w", "x2", "x1", "z", "v3", "p", "v1"}));
        return;
    }
    c.branch("G4.C1.P");
    if (!c.test_P("C2")) {
        c.branch("G4.C2.nonP");
        mirror(c, {{"y1", "y2"}, {"y2", "y1"}, {"v1", "v3"}, {"v3", "v1"}, {"p", "z"}, {"z", "p"}},
               case_g4);
        return;
    }
    c.branch("G4.allP");
    c.straighten({{"v", "y1"}, {"v", "x1"}, {"v", "y2"}, {"y1", "v1"}, {"v1", "v2"}}, {"v"});
    c.assert_straight("y1", "x1");
    c.assert_straight("y2", "x1");
    c.same_color({c.V("y1"), c.V("y2"), c.V("v2")},
                 {{"v", "y1"}, {"v", "y2"}, {"y1", "v1"}, {"v1", "v2"}});
    c.require(c.V("v1"), 3);
    c.require(c.V("v"), 2);
    c.require(c.V("x1"), 3);
    c.greedy(c.named({"w", "x2", "z", "v3", "v", "x1", "p", "v1"}));
}

// ---------------------------------------------------------------- Case 7: G5

void case_g5(CaseCtx& c) {
    int n = c.entry.params.at("n");
    c.branch("G5.straighten");
    c.straighten({{"y1", "x1"}, {"x1", "y2"}}, {"y1"});
    c.same_color({c.V("y1"), c.V("y2")}, {{"y1", "x1"}, {"x1", "y2"}});
    c.require(c.V("v"), 2);
    c.require(c.V("v2"), 3);
    c.require(c.V("w"), 2);
    c.path_ends(c.V("v"), c.V("v2"), c.V("w"));
    c.require(c.V("v2"), 2);
    c.require(c.V("x1"), 2);
    c.greedy(CaseCtx::cat({c.desc("x", n, 1), c.named({"v1", "v2"})}));
}

// ---------------------------------------------------------------- Case 8: G6

void case_g6(CaseCtx& c) {
    int n = c.entry.params.at("n"), mm = c.entry.params.at("m");
    c.branch("G6.straighten");
    c.straighten({{"y1", "x1"}, {"x1", "y2"}}, {"y1"});
    c.same_color({c.V("y1"), c.V("y2")}, {{"y1", "x1"}, {"x1", "y2"}});
    c.require(c.V("w"), 2);
    c.require(c.V("v2"), 3);
    c.protect(c.V("v2"), c.V("w"), 2);
    c.require(c.V("x1"), 3);
    c.greedy(CaseCtx::cat(
        {c.named({"v", "v1"}), c.asc("z", 1, mm), c.named({"w"}), c.desc("x", n, 1)}));
}

// ---------------------------------------------------------------- Case 9: G7

void case_g7(CaseCtx& c) {
    int n = c.entry.params.at("n"), mm = c.entry.params.at("m"), l = c.entry.params.at("l");
    Vertex y1 = c.V("y1"), y2 = c.V("y2"), v = c.V("v"), v1 = c.V("v1"), w = c.V("w"),
           z1 = c.V("z1");
    Vertex pl = c.Vx("p", l), pl1 = c.Vx("p", l - 1), qm = c.Vx("q", mm);
    if (!c.test_P("C1")) {
        c.branch("G7.C1.nonP");
        c.exploit(pl, y2, pl1);
        c.require(qm, 2);
        c.require(z1, 3);
        c.protect(z1, qm, 2);
        c.require(y1, 3);
        c.protect(y1, w, 2);
        c.greedy(CaseCtx::cat({c.named({"v1", "v"}), c.asc("x", 1, n), c.named({"w"}),
                               c.asc("q", 1, mm), c.named({"v2"}), c.asc("p", 1, l - 1)}));
        return;
    }
    c.branch("G7.C1.P");
    if (c.test_P("C2")) {
        c.branch("G7.C2.P");
        c.straighten({{lbl("p", l), "y2"}, {lbl("p", l), lbl("p", l - 1)}, {lbl("p", l), "v1"}},
                     {lbl("p", l)});
        c.assert_straight(lbl("p", l - 1), "y2");
        c.assert_straight(lbl("p", l - 1), "v1");
        c.same_color({v1, y2}, {{"v1", lbl("p", l)}, {lbl("p", l), "y2"},
                                {"v1", lbl("p", l - 1)}, {lbl("p", l - 1), "y2"}});
        c.require(pl, 3);
        c.require(pl1, 3);
        c.require(v, 2);
        c.require(y1, 3);
        c.protect(y1, v, 2);
        c.greedy(CaseCtx::cat({c.named({"z1", "w"}), c.desc("x", n, 1), c.named({"v", "v2"}),
                               c.asc("p", 1, l - 2), c.asc("q", 1, mm), {pl, pl1}}));
        return;
    }
    c.branch("G7.C2.nonP");
    c.straighten({{"y1", "v"}, {"v", "v1"}, {"v", "y2"}, {"y2", "w"},
                  {"y2", lbl("p", l)}, {lbl("p", l), lbl("p", l - 1)}},
                 {"y1"});
    c.assert_straight(lbl("p", l - 1), "y2");
    auto [a1, a2] = c.exploit(v1, pl, pl1);
    if (a1 == a2) {
        c.branch("G7.C2.nonP.equal");
        if (c.partner_or_fail(v1, pl1, a1) != a1)
            c.fail("expected the exploited pair to collide on p_{l-1}");
        c.unassign(pl);
        c.assign(y2, a1);
        c.require(pl1, 3);
        c.require(v, 3);
        c.require(pl, 2);
        c.require(z1, 3);
        c.protect(z1, pl, 2);
        c.greedy(CaseCtx::cat({c.named({"y1", "w"}), c.desc("x", n, 1), c.named({"v", "v2"}),
                               c.asc("p", 1, l - 2), c.asc("q", 1, mm), {pl, pl1}}));
    } else {
        c.branch("G7.C2.nonP.distinct");
        c.assign(y2, a1);
        c.require(v, 3);
        c.require(pl1, 2);
        c.greedy(CaseCtx::cat({c.named({"z1"}), c.desc("q", mm, 1), c.named({"w", "y1"}),
                               c.desc("x", n, 1), c.named({"v", "v2"}), c.asc("p", 1, l - 1)}));
    }
}

// --------------------------------------------------------------- Case 10: G8

NameMap sigma_g8(int n, int mm) {
    NameMap s = {{"v", "w"}, {"w", "v"}, {"v1", "p1"}, {"p1", "v1"}, {"v2", "p2"}, {"p2", "v2"}};
    for (int i = 1; i <= n; ++i)
        if (i != n + 1 - i) s[lbl("x", i)] = lbl("x", n + 1 - i);
    for (int j = 1; j <= mm; ++j)
        if (j != mm + 1 - j) s[lbl("z", j)] = lbl("z", mm + 1 - j);
    return s;
}

void case_g8(CaseCtx& c);

struct G8 {
    CaseCtx& c;
    int n, mm;
    Vertex y1, y2, v, v1, v2, w, p, p1, p2, xn, zm;

    explicit G8(CaseCtx& ctx) : c(ctx) {
        n = c.entry.params.at("n");
        mm = c.entry.params.at("m");
        y1 = c.V("y1"); y2 = c.V("y2"); v = c.V("v"); v1 = c.V("v1"); v2 = c.V("v2");
        w = c.V("w"); p = c.V("p"); p1 = c.V("p1"); p2 = c.V("p2");
        xn = c.Vx("x", n); zm = c.Vx("z", mm);
    }

    // Claim 1: C1 = p y2 v2 without property P colors the whole graph.
    void claim1() {
        c.branch("G8.claim1");
        c.exploit(p, y2, v2);
        c.require(p2, 2);
        c.require(w, 3);
        c.protect(w, p2, 2);
        c.require(y1, 3);
        c.protect(y1, xn, 2);
        c.greedy(CaseCtx::cat({c.named({"p1", "p2"}), c.desc("z", mm, 1),
                               c.named({"v1", "v", "v2"}), c.asc("x", 1, n)}));
    }

    // Claim 2: a1@y1, a2@y2 leaving x_i and w (side_w) or v with >= 3 colors.
    void claim2(int a1, int a2, int i, bool side_w) {
        if (!side_w) {
            int j = n + 1 - i;
            mirror(c, sigma_g8(n, mm), [a1, a2, j](CaseCtx& sub) {
                G8 h(sub);
                h.claim2(a1, a2, j, true);
            });
            return;
        }
        c.branch("G8.claim2");
        c.assign(y1, a1);
        c.assign(y2, a2);
        c.require(c.Vx("x", i), 3);
        c.require(w, 3);
        c.require(v, 2);
        c.require(v2, 3);
        c.protect(v2, v, 2);
        c.greedy(CaseCtx::cat({c.named({"p", "v1", "v"}), c.asc("x", 1, i - 1),
                               c.asc("z", 1, mm), c.named({"p1", "p2", "w"}),
                               c.desc("x", n, i)}));
    }

    // Claim 3: a1@y1, a2@p leaving z_i and p1 (side_p1) or v1 with >= 3 colors.
    void claim3(int a1, int a2, int i, bool side_p1) {
        if (!side_p1) {
            int j = mm + 1 - i;
            mirror(c, sigma_g8(n, mm), [a1, a2, j](CaseCtx& sub) {
                G8 h(sub);
                h.claim3(a1, a2, j, true);
            });
            return;
        }
        c.branch("G8.claim3");
        c.assign(y1, a1);
        c.assign(p, a2);
        c.require(c.Vx("z", i), 3);
        c.require(p1, 3);
        c.require(v1, 2);
        c.require(v2, 3);
        c.protect(v2, v1, 2);
        c.greedy(CaseCtx::cat({c.named({"y2", "v", "v1"}), c.asc("z", 1, i - 1),
                               c.asc("x", 1, n), c.named({"w", "p2", "p1"}),
                               c.desc("z", mm, i)}));
    }

    // Claim 4: a1@y1, a2@y2 leaving v and w with >= 3 colors.
    void claim4(int a1, int a2) {
        c.branch("G8.claim4");
        c.assign(y1, a1);
        c.assign(y2, a2);
        c.require(v, 3);
        c.require(w, 3);
        c.require(xn, 2);
        c.protect(w, xn, 2);
        c.require(p, 3);
        c.protect(p, p1, 2);
        c.greedy(CaseCtx::cat({c.named({"p2", "p1"}), c.desc("z", mm, 1),
                               c.named({"v1", "v2", "v"}), c.asc("x", 1, n)}));
    }

    // Claim 5: a1@y1, a2@p leaving v1 and p1 with >= 3 colors.
    void claim5(int a1, int a2) {
        c.branch("G8.claim5");
        c.assign(y1, a1);
        c.assign(p, a2);
        c.require(v1, 3);
        c.require(p1, 3);
        c.require(zm, 2);
        c.protect(p1, zm, 2);
        c.require(y2, 3);
        c.protect(y2, w, 2);
        c.greedy(CaseCtx::cat({c.named({"p2", "w"}), c.desc("x", n, 1),
                               c.named({"v2", "v", "v1"}), c.asc("z", 1, mm)}));
    }

    void straighten_big_tree() {
        c.straighten({{"y1", "v1"}, {"y1", lbl("z", mm)}, {"y1", "p1"}, {"y1", "w"},
                      {"w", "y2"}, {"y2", lbl("x", n)}, {"y2", "v"}, {"y2", "v2"},
                      {"y2", "p2"}, {"y2", "p"}},
                     {"y1"});
        c.assert_straight("v2", "p");
        c.assert_straight("p2", "p");
    }

    void run() {
        if (!c.test_P("C2")) {
            c.branch("G8.C2.nonP");
            if (!c.test_P("C1")) return claim1();
            if (!c.test_P("C4")) {
                mirror(c, sigma_g8(n, mm), [](CaseCtx& sub) { G8(sub).claim1(); });
                return;
            }
            straighten_big_tree();
            case_10_1();
            return;
        }
        c.branch("G8.C2.P");
        if (!c.test_P("C3")) {
            c.branch("G8.C3.nonP");
            mirror(c, sigma_g8(n, mm), case_g8);
            return;
        }
        c.branch("G8.C3.P");
        if (!c.test_P("C1")) return claim1();
        if (!c.test_P("C4")) {
            mirror(c, sigma_g8(n, mm), [](CaseCtx& sub) { G8(sub).claim1(); });
            return;
        }
        straighten_big_tree();
        c.assert_straight("v", "v2");
        c.assert_straight("w", "p2");
        case_10_2();
    }

    // C2 without property P; C1 and C4 with it; the big tree is straight.
    void case_10_1() {
        auto [alpha1, alpha2] = c.exploit(y2, v, v2); // alpha1@y2, alpha2@v
        if (c.partner_or_fail(v, y1, alpha2) != alpha1)
            case_10_1_1(alpha1);
        else
            case_10_1_2(alpha1);
    }

    void case_10_1_1(int alpha1) {
        c.branch("G8.10.1.1");
        c.assign(y1, alpha1);
        c.require(w, 3);
        if (c.res(xn) >= 3) {
            c.reset_colors();
            claim2(alpha1, alpha1, n, true);
            return;
        }
        int beta1 = c.partner_or_fail(y1, xn, alpha1);
        if (beta1 == alpha1) c.fail("expected beta1 distinct from alpha1 at x_n");
        if (c.partner_or_fail(w, p2, alpha1) == alpha1) {
            if (c.partner_or_fail(p1, p2, alpha1) == alpha1) {
                c.branch("G8.10.1.1.recolor");
                c.unassign(y2);
                c.unassign(v);
                c.assign(p2, alpha1);
                c.assign(y2, beta1);
                c.require(p1, 3);
                c.require(xn, 3);
                c.require(w, 2);
                c.require(v2, 3);
                c.require(p, 2);
                c.protect(v2, p, 2);
                c.greedy(CaseCtx::cat({c.named({"v", "v1", "p"}), c.asc("z", 1, mm),
                                       c.named({"p1", "w"}), c.asc("x", 1, n)}));
                return;
            }
            int beta2 = c.partner_or_fail(p1, p2, alpha1);
            c.branch("G8.10.1.1.beta2");
            c.assign(p2, beta2);
            c.require(p1, 3);
            c.require(w, 2);
            int alpha = c.partner_or_fail(p1, p, alpha1);
            if (alpha != alpha1 && alpha != beta2) {
                c.assign(p, alpha);
                c.require(p1, 3);
                c.require(v2, 2);
                c.greedy(CaseCtx::cat({c.named({"v1", "v2"}), c.asc("z", 1, mm),
                                       c.asc("x", 1, n), c.named({"w", "p1"})}));
                return;
            }
            int betap = c.partner_or_fail(zm, p, alpha1);
            if (betap == alpha) {
                c.reset_colors();
                claim3(alpha1, alpha, mm, true);
                return;
            }
            if (betap != alpha1 && betap != beta2) {
                c.assign(p, betap);
                c.require(zm, 3);
                c.greedy(CaseCtx::cat({c.named({"v1", "v2"}), c.asc("z", 1, mm - 1),
                                       c.asc("x", 1, n), c.named({"w", "p1", lbl("z", mm)})}));
                return;
            }
            if (c.partner_or_fail(p, v1, alpha) == alpha1) {
                c.reset_colors();
                claim5(alpha1, alpha);
                return;
            }
            if (c.partner_or_fail(p, v1, betap) == alpha1) {
                c.reset_colors();
                claim3(alpha1, betap, mm, false);
                return;
            }
            int gamma = c.inverse_partner(p, v1, alpha1);
            if (gamma == alpha1 || gamma == beta2) c.fail("gamma collided with used colors");
            c.assign(p, gamma);
            c.require(v1, 2);
            c.require(v2, 2);
            c.require(p1, 2);
            c.require(w, 2);
            c.greedy(CaseCtx::cat({c.asc("x", 1, n), c.named({"w", "p1"}),
                                   c.desc("z", mm, 1), c.named({"v1", "v2"})}));
            return;
        }
        int alpha3 = c.partner_or_fail(w, p2, alpha1);
        c.branch("G8.10.1.1.alpha3");
        c.assign(p2, alpha3);
        c.require(w, 3);
        int alpha = c.partner_or_fail(p1, p, alpha1);
        if (alpha != alpha1 && alpha != alpha3) {
            c.assign(p, alpha);
            c.require(p1, 2);
            c.greedy(CaseCtx::cat({c.named({"v1", "v2"}), c.asc("z", 1, mm),
                                   c.named({"p1"}), c.asc("x", 1, n), c.named({"w"})}));
            return;
        }
        int betapp = c.partner_or_fail(zm, p, alpha1);
        if (betapp == alpha) {
            c.reset_colors();
            claim3(alpha1, alpha, mm, true);
            return;
        }
        if (betapp != alpha1 && betapp != alpha3) {
            c.assign(p, betapp);
            c.require(zm, 3);
            c.greedy(CaseCtx::cat({c.named({"v1", "v2"}), c.asc("z", 1, mm - 1),
                                   c.named({"p1", lbl("z", mm)}), c.asc("x", 1, n),
                                   c.named({"w"})}));
            return;
        }
        if (c.partner_or_fail(p, v1, alpha) == alpha1) {
            c.reset_colors();
            claim5(alpha1, alpha);
            return;
        }
        if (c.partner_or_fail(p, v1, betapp) == alpha1) {
            c.reset_colors();
            claim3(alpha1, betapp, mm, false);
            return;
        }
        int gammap = c.inverse_partner(p, v1, alpha1);
        if (gammap == alpha1 || gammap == alpha3) c.fail("gamma' collided with used colors");
        c.assign(p, gammap);
        c.require(v1, 2);
        c.require(v2, 2);
        c.greedy(CaseCtx::cat({c.named({"p1"}), c.desc("z", mm, 1), c.named({"v1", "v2"}),
                               c.asc("x", 1, n), c.named({"w"})}));
    }

    void case_10_1_2(int alpha1) {
        c.branch("G8.10.1.2");
        {
            Coloring probe(c.g.vertex_count(), 0);
            probe[y1] = alpha1;
            probe[y2] = alpha1;
            if (static_cast<int>(c.m.residual(xn, probe).size()) >= 3) {
                c.reset_colors();
                claim2(alpha1, alpha1, n, true);
                return;
            }
        }
        int alpha3 = c.inverse_partner(y1, xn, alpha1);
        if (alpha3 == alpha1) c.fail("expected alpha3 distinct from alpha1");
        c.assign(y1, alpha3);
        c.require(xn, 3);
        c.require(w, 2);
        c.require(p2, 3);
        int alpha4 = c.protect(p2, w, 2);
        int alpha = c.partner_or_fail(p1, p, alpha3);
        if (alpha != alpha1 && alpha != alpha4) {
            c.assign(p, alpha);
            c.require(p1, 2);
            c.require(v2, 2);
            c.greedy(CaseCtx::cat({c.named({"v1", "v2"}), c.asc("z", 1, mm),
                                   c.named({"p1", "w"}), c.asc("x", 1, n)}));
            return;
        }
        int beta = c.partner_or_fail(zm, p, alpha3);
        if (beta == alpha) {
            c.reset_colors();
            claim3(alpha3, alpha, mm, true);
            return;
        }
        if (beta != alpha1 && beta != alpha4) {
            c.assign(p, beta);
            c.require(zm, 3);
            c.greedy(CaseCtx::cat({c.named({"v1", "v2"}), c.asc("z", 1, mm - 1),
                                   c.named({"p1", lbl("z", mm), "w"}), c.asc("x", 1, n)}));
            return;
        }
        if (c.partner_or_fail(p, v1, alpha) == alpha3) {
            c.reset_colors();
            claim5(alpha3, alpha);
            return;
        }
        if (c.partner_or_fail(p, v1, beta) == alpha3) {
            c.reset_colors();
            claim3(alpha3, beta, mm, false);
            return;
        }
        int gamma = c.inverse_partner(p, v1, alpha3);
        if (gamma == alpha1 || gamma == alpha4) c.fail("gamma collided with used colors");
        c.assign(p, gamma);
        c.require(v1, 2);
        c.require(v2, 2);
        c.require(w, 2);
        c.require(xn, 3);
        c.greedy(CaseCtx::cat({c.named({"p1"}), c.desc("z", mm, 1), c.named({"v1", "v2", "w"}),
                               c.asc("x", 1, n)}));
    }

    // C2, C3, C1 and C4 all with property P; everything relevant straight.
    void case_10_2() {
        c.branch("G8.10.2");
        int alpha1 = c.same_color({p, v, w}, {{"y2", "p"}, {"y2", "v"}, {"y1", "w"}});
        c.require(v2, 3);
        c.require(y2, 3);
        c.require(p2, 3);
        int alpha2 = c.partner_or_fail(v, y1, alpha1);
        if (alpha2 == alpha1) {
            c.reset_colors();
            claim4(alpha1, alpha1);
            return;
        }
        int beta = c.partner_or_fail(p, p1, alpha1);
        if (beta != alpha1 && beta != alpha2) {
            c.branch("G8.10.2.beta");
            c.assign(y1, beta);
            c.require(xn, 2);
            c.require(y2, 3);
            c.protect(y2, xn, 2);
            c.require(p1, 2);
            c.greedy(CaseCtx::cat({c.named({"v1", "v2"}), c.asc("z", 1, mm),
                                   c.named({"p1", "p2"}), c.asc("x", 1, n)}));
            return;
        }
        int gamma = c.partner_or_fail(p, zm, alpha1);
        if (gamma == beta) {
            c.reset_colors();
            claim3(beta, alpha1, mm, true);
            return;
        }
        if (gamma != alpha1 && gamma != alpha2) {
            c.branch("G8.10.2.gamma");
            c.assign(y1, gamma);
            c.require(zm, 3);
            c.require(xn, 2);
            c.require(y2, 3);
            c.protect(y2, xn, 2);
            c.greedy(CaseCtx::cat({c.named({"p1", "p2", "v1", "v2"}), c.asc("z", 1, mm),
                                   c.asc("x", 1, n)}));
            return;
        }
        if (c.partner_or_fail(p, v1, alpha1) == beta) {
            c.reset_colors();
            claim5(beta, alpha1);
            return;
        }
        if (c.partner_or_fail(p, v1, alpha1) == gamma) {
            c.reset_colors();
            claim3(gamma, alpha1, mm, false);
            return;
        }
        int gammap = c.partner_or_fail(p, v1, alpha1);
        if (gammap == alpha1 || gammap == alpha2) c.fail("gamma' collided with used colors");
        c.branch("G8.10.2.gammaprime");
        c.assign(y1, gammap);
        c.require(v1, 2);
        c.require(xn, 2);
        c.require(y2, 3);
        c.protect(y2, xn, 2);
        c.greedy(CaseCtx::cat({c.named({"p1", "p2"}), c.desc("z", mm, 1),
                               c.named({"v1", "v2"}), c.asc("x", 1, n)}));
    }
};

void case_g8(CaseCtx& c) { G8(c).run(); }

// --------------------------------------------------------------- Case 11: G9

void case_g9(CaseCtx& c) {
    int n = c.entry.params.at("n");
    if (!c.test_P("C1")) {
        c.branch("G9.C1.nonP");
        c.exploit(c.V("v"), c.V("y1"), c.Vx("x", 1));
        c.require(c.V("v1"), 2);
        c.require(c.V("z1"), 3);
        c.protect(c.V("z1"), c.V("v1"), 2);
        c.require(c.V("w"), 3);
        c.protect(c.V("w"), c.V("p1"), 2);
        c.greedy(CaseCtx::cat({c.named({"y2"}), c.desc("x", n, 1),
                               c.named({"p2", "p1", "v2", "v1"})}));
        return;
    }
    c.branch("G9.C1.P");
    if (!c.test_P("C2")) {
        c.branch("G9.C2.nonP");
        mirror(c,
               {{"y1", "y2"}, {"y2", "y1"}, {"v1", "v2"}, {"v2", "v1"}, {"p1", "p2"}, {"p2", "p1"}},
               case_g9);
        return;
    }
    c.branch("G9.allP");
    c.straighten({{"x1", "v"}, {"x1", "y1"}, {"x1", "y2"}}, {"x1"});
    c.assert_straight("v", "y1");
    c.assert_straight("v", "y2");
    c.same_color({c.V("y1"), c.V("y2")},
                 {{"v", "y1"}, {"v", "y2"}, {"x1", "y1"}, {"x1", "y2"}});
    c.require(c.V("w"), 2);
    c.require(c.V("p2"), 3);
    c.protect(c.V("p2"), c.V("w"), 2);
    c.require(c.V("v"), 3);
    c.require(c.Vx("x", 1), 3);
    c.greedy(CaseCtx::cat({c.named({"z1", "p1", "w"}), c.desc("x", n, 2),
                           c.named({"v1", "v2", "v", "x1"})}));
}

// -------------------------------------------------------------- Case 12: G10

void case_g10(CaseCtx& c) {
    if (!c.test_P("C1")) {
        c.branch("G10.C1.nonP");
        c.exploit(c.V("u0"), c.V("u1"), c.V("y"));
        c.require(c.V("u"), 2);
        c.require(c.V("u3"), 3);
        c.protect(c.V("u3"), c.V("u"), 2);
        c.require(c.V("z"), 3);
        c.protect(c.V("z"), c.V("x"), 2);
        c.greedy(c.named({"u2", "u", "w", "x", "y"}));
        return;
    }
    c.branch("G10.C1.P");
    if (!c.test_P("C2")) {
        c.branch("G10.C2.nonP");
        c.exploit(c.V("x"), c.V("u0"), c.V("y"));
        c.require(c.V("u3"), 2);
        c.require(c.V("w"), 3);
        c.protect(c.V("w"), c.V("u3"), 2);
        c.require(c.V("u2"), 3);
        c.protect(c.V("u2"), c.V("z"), 2);
        c.greedy(c.named({"u3", "u", "u1", "z", "y"}));
        return;
    }
    c.branch("G10.allP");
    c.straighten({{"u0", "y"}, {"u0", "u1"}, {"u0", "x"}}, {"u0"});
    c.assert_straight("u1", "y");
    c.assert_straight("x", "y");
    c.same_color({c.V("u1"), c.V("x")}, {{"u0", "u1"}, {"u0", "x"}, {"u1", "y"}, {"x", "y"}});
    c.require(c.V("z"), 2);
    c.require(c.V("u2"), 3);
    c.protect(c.V("u2"), c.V("z"), 2);
    c.require(c.V("y"), 3);
    c.require(c.V("u0"), 3);
    c.greedy(c.named({"u3", "w", "z", "u", "u0", "y"}));
}

// -------------------------------------------------------------- Case 13: G11

void case_g11(CaseCtx& c) {
    static const NameMap sigma1 = {{"u", "y"}, {"y", "u"}, {"u3", "x1"},
                                   {"x1", "u3"}, {"u2", "z"}, {"z", "u2"}};
    static const NameMap sigma2 = {{"x", "u"}, {"u", "x"}, {"x1", "u1"},
                                   {"u1", "x1"}, {"w", "u2"}, {"u2", "w"}};
    static const NameMap sigma3 = {{"u1", "u3"}, {"u3", "u1"}, {"x", "y"},
                                   {"y", "x"}, {"w", "z"}, {"z", "w"}};
    const std::vector<std::pair<std::string, NameMap>> mirrors = {
        {"C1", {}},
        {"C2", sigma1},
        {"C3", sigma2},
        {"C4", compose(sigma1, sigma2)},
        {"C5", compose(sigma1, compose(sigma2, sigma1))},
        {"C6", compose(sigma2, sigma1)}};
    for (auto& [key, map] : mirrors) {
        if (c.test_P(key)) continue;
        c.branch("G11." + key + ".nonP");
        if (!map.empty()) {
            mirror(c, map, case_g11);
            return;
        }
        c.exploit(c.V("u0"), c.V("u3"), c.V("x"));
        c.require(c.V("u"), 2);
        c.require(c.V("u1"), 3);
        c.protect(c.V("u1"), c.V("u"), 2);
        c.require(c.V("z"), 3);
        c.protect(c.V("z"), c.V("y"), 2);
        c.greedy(c.named({"u2", "w", "x1", "y", "u", "x"}));
        return;
    }
    c.branch("G11.C1-6.P");
    c.straighten({{"u0", "x"}, {"u0", "u3"}, {"u0", "u"}, {"u0", "x1"}, {"u0", "y"}, {"u0", "u1"}},
                 {"u0"});
    c.assert_straight("x", "u3");
    c.assert_straight("x", "x1");
    c.assert_straight("u", "u3");
    c.assert_straight("y", "x1");
    c.assert_straight("y", "u1");
    c.assert_straight("u", "u1");
    if (!c.test_P("C7")) {
        c.branch("G11.C7.nonP");
        auto [a1, a2] = c.exploit(c.V("u3"), c.V("u2"), c.V("u"));
        (void)a2;
        c.assign(c.V("x1"), a1);
        c.require(c.V("x"), 3);
        c.require(c.V("u0"), 3);
        c.greedy(c.named({"w", "z", "u1", "y", "u0", "u", "x"}));
        return;
    }
    c.branch("G11.C7.P");
    if (!c.test_P("C8")) {
        c.branch("G11.C8.nonP");
        mirror(c, sigma3, case_g11);
        return;
    }
    c.branch("G11.C8.P");
    c.straighten({{"u3", "u2"}}, {"u3"});
    c.assert_straight("u2", "u");
    c.assert_straight("u2", "u1");
    c.same_color({c.V("x1"), c.V("u3"), c.V("u1")},
                 {{"u0", "x1"}, {"u0", "u3"}, {"u0", "u1"}, {"u3", "u2"}, {"u2", "u1"}});
    for (auto l : {"x", "u0", "y", "u", "u2"}) c.require(c.V(l), 3);
    c.greedy(c.named({"w", "z", "u2", "y", "u0", "u", "x"}));
}

// -------------------------------------------------------------- Case 14: G12

void case_g12(CaseCtx& c) {
    if (!c.test_P("C1")) {
        c.branch("G12.C1.nonP");
        c.exploit(c.V("u0"), c.V("u1"), c.V("y"));
        c.require(c.V("u"), 2);
        c.require(c.V("u3"), 3);
        c.protect(c.V("u3"), c.V("u"), 2);
        c.require(c.V("w"), 3);
        c.protect(c.V("w"), c.V("x"), 2);
        c.greedy(c.named({"u2", "u", "z", "y1", "x1", "x", "y"}));
        return;
    }
    c.branch("G12.C1.P");
    if (!c.test_P("C2")) {
        c.branch("G12.C2.nonP");
        c.exploit(c.V("u0"), c.V("u1"), c.V("u"));
        c.require(c.V("y"), 2);
        c.require(c.V("y1"), 3);
        c.protect(c.V("y1"), c.V("y"), 2);
        c.require(c.V("w"), 3);
        c.protect(c.V("w"), c.V("x1"), 2);
        c.greedy(c.named({"z", "u2", "u3", "u", "x", "x1", "y"}));
        return;
    }
    c.branch("G12.C2.P");
    c.straighten({{"u0", "y"}, {"u0", "u1"}, {"u0", "u"}}, {"u0"});
    c.assert_straight("u1", "y");
    c.assert_straight("u1", "u");
    if (c.test_P("C3")) {
        c.branch("G12.C3.P");
        c.straighten({{"u1", "y1"}}, {"u1"});
        c.assert_straight("y1", "y");
        c.same_color({c.V("u0"), c.V("y1")},
                     {{"u0", "y"}, {"u0", "u1"}, {"u1", "y1"}, {"y1", "y"}});
        c.require(c.V("x1"), 2);
        c.require(c.V("w"), 3);
        c.protect(c.V("w"), c.V("x1"), 2);
        c.require(c.V("u2"), 3);
        c.protect(c.V("u2"), c.V("z"), 2);
        c.require(c.V("y"), 3);
        c.require(c.V("u1"), 2);
        c.greedy(c.named({"u3", "x", "x1", "u", "u1", "z", "y"}));
        return;
    }
    c.branch("G12.C3.nonP");
    auto [a1, a2] = c.exploit(c.V("u1"), c.V("y1"), c.V("y"));
    (void)a2;
    c.straighten({{"u", "u2"}}, {"u"});
    if (c.partner_or_fail(c.V("u1"), c.V("u2"), a1) != a1) {
        c.branch("G12.C3.nonP.u2free");
        c.assign(c.V("u2"), a1);
        c.require(c.V("u"), 3);
        c.assign(c.V("z"), c.residual(c.V("z")).front());
        c.assign(c.V("w"), c.residual(c.V("w")).front());
        c.require(c.V("u3"), 2);
        c.require(c.V("x"), 3);
        c.protect(c.V("x"), c.V("u3"), 2);
        c.greedy(c.named({"x1", "u0", "y", "u3", "u"}));
        return;
    }
    c.branch("G12.C3.nonP.u2blocked");
    c.unassign(c.V("u1"));
    c.unassign(c.V("y1"));
    c.assign(c.V("u0"), a1);
    c.assign(c.V("u2"), a1);
    c.require(c.V("u"), 3);
    c.require(c.V("u1"), 3);
    c.require(c.V("u3"), 2);
    c.require(c.V("w"), 3);
    c.protect(c.V("w"), c.V("u3"), 2);
    c.require(c.V("y1"), 3);
    c.protect(c.V("y1"), c.V("z"), 2);
    c.greedy(c.named({"x1", "y", "u1", "z", "x", "u3", "u"}));
}

// -------------------------------------------------------------- Case 15: G13

// the body after the property-P setup, written for either orientation;
// ren maps the canonical labels through the z<->w symmetry when swapped
void case_g13_fixed_point_branch(CaseCtx& c, const NameMap& ren, int fixed) {
    auto L = [&](const char* l) {
        auto it = ren.find(l);
        return c.V(it == ren.end() ? l : it->second);
    };
    auto S = [&](const char* l) {
        auto it = ren.find(l);
        return it == ren.end() ? std::string(l) : it->second;
    };
    c.same_color({L("z1"), L("u1")}, {{S("z1"), S("z")}, {S("z"), S("u1")}}, fixed);
    c.require(L("z"), 3);
    c.require(L("u2"), 3);
    c.require(L("y"), 2);
    c.require(L("u0"), 3);
    c.protect(L("u0"), L("y"), 2);
    c.require(L("u3"), 3);
    c.protect(L("u3"), L("u"), 2);
    std::vector<Vertex> order;
    for (auto l : {"x", "x1", "y", "w", "u2", "u", "z"}) order.push_back(L(l));
    c.greedy(order);
}

void case_g13(CaseCtx& c) {
    static const NameMap sigma = {{"z", "w"}, {"w", "z"}, {"y", "x"},
                                  {"x", "y"}, {"u1", "u3"}, {"u3", "u1"}};
    if (!c.test_P("C1")) {
        c.branch("G13.C1.nonP");
        c.exploit(c.V("z1"), c.V("u2"), c.V("z"));
        c.require(c.V("w"), 2);
        c.require(c.V("u3"), 3);
        c.protect(c.V("u3"), c.V("w"), 2);
        c.require(c.V("u0"), 3);
        c.protect(c.V("u0"), c.V("u"), 2);
        c.greedy(c.named({"x", "w", "x1", "y", "u1", "u", "z"}));
        return;
    }
    c.branch("G13.C1.P");
    if (!c.test_P("C2")) {
        c.branch("G13.C2.nonP");
        mirror(c, sigma, case_g13);
        return;
    }
    c.branch("G13.C2.P");
    c.straighten({{"z1", "z"}, {"z1", "u2"}, {"z1", "w"}, {"w", "u3"}, {"z", "u1"}}, {"z1"});
    c.assert_straight("z", "u2");
    c.assert_straight("w", "u2");
    int fixed_u1 = 0, fixed_u3 = 0;
    for (int col : c.m.list(c.V("u1")))
        if (c.partner_or_fail(c.V("u1"), c.V("u2"), col) == col) {
            fixed_u1 = col;
            break;
        }
    for (int col : c.m.list(c.V("u3")))
        if (c.partner_or_fail(c.V("u3"), c.V("u2"), col) == col) {
            fixed_u3 = col;
            break;
        }
    if (fixed_u1 != 0) {
        c.branch("G13.u1u2.fixedpoint");
        case_g13_fixed_point_branch(c, {}, fixed_u1);
        return;
    }
    if (fixed_u3 != 0) {
        c.branch("G13.u3u2.fixedpoint");
        case_g13_fixed_point_branch(c, sigma, fixed_u3);
        return;
    }
    c.branch("G13.nofixedpoint");
    int alpha1 = c.m.list(c.V("u2")).front();
    c.assign(c.V("u2"), alpha1);
    c.assign(c.V("u1"), alpha1);
    c.assign(c.V("u3"), alpha1);
    c.require(c.V("w"), 3);
    c.require(c.V("z"), 3);
    c.assign(c.V("u"), c.residual(c.V("u")).front());
    c.assign(c.V("u0"), c.residual(c.V("u0")).front());
    c.require(c.V("x"), 2);
    c.require(c.V("x1"), 3);
    c.require(c.V("y"), 2);
    c.path_ends(c.V("x"), c.V("x1"), c.V("y"));
    c.require(c.V("x1"), 2);
    c.require(c.V("z"), 2);
    c.require(c.V("w"), 2);
    c.greedy(c.named({"z1", "x1", "w", "z"}));
}

} // namespace

bool ColoringTrace::branch_taken(const std::string& name) const {
    for (auto& s : steps) {
        if (s.action != "branch") continue;
        json d = json::parse(s.detail);
        if (d.value("name", "") == name) return true;
    }
    return false;
}

std::string serialize_trace(const ColoringTrace& t) {
    json steps = json::array();
    for (auto& s : t.steps) {
        json e = json::parse(s.detail);
        e["action"] = s.action;
        steps.push_back(e);
    }
    return json{{"steps", steps}}.dump();
}

Coloring replay_trace(const MatchingAssignment& m, const ColoringTrace& t) {
    const Graph& g = m.graph();
    Coloring c(g.vertex_count(), 0);
    for (auto& s : t.steps) {
        json d = json::parse(s.detail);
        if (s.action == "assign") {
            c[g.vertex(d["v"].get<std::string>())] = d["color"].get<int>();
        } else if (s.action == "unassign") {
            c[g.vertex(d["v"].get<std::string>())] = 0;
        } else if (s.action == "reset") {
            std::fill(c.begin(), c.end(), 0);
        }
    }
    return c;
}

std::pair<Coloring, ColoringTrace> case_procedure(const CatalogEntry& entry,
                                                  const MatchingAssignment& m) {
    if (entry.name == "H2") return run_h2(entry, m);
    static const std::map<std::string, CaseFn> table = {
        {"H1", case_h1},   {"G1", case_g1},    {"G2", case_g2},   {"G3", case_g3},
        {"G4", case_g4},   {"G5", case_g5},    {"G6", case_g6},   {"G7", case_g7},
        {"G8", case_g8},   {"G9", case_g9},    {"G10", case_g10}, {"G11", case_g11},
        {"G12", case_g12}, {"G13", case_g13}};
    auto it = table.find(entry.name);
    if (it == table.end()) throw RefusalError("no case procedure for '" + entry.name + "'");
    CaseCtx ctx(entry, m);
    it->second(ctx);
    Coloring result = ctx.finish();
    return {result, std::move(ctx.trace)};
}

} // namespace dpcolor
