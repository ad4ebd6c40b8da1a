#include "dpcolor/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/pipeline.hpp"
#include "dpcolor/solver.hpp"
#include "json.hpp"

namespace dpcolor {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RefusalError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return parse_edge_list(slurp(path)); }

json coloring_json(const Graph& g, const Coloring& c) {
    json j = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (is_colored(c, v)) j[g.name(v)] = c[v];
    return j;
}

json assignment_json(const MatchingAssignment& m) { return json::parse(serialize_assignment(m)); }

CatalogParams parse_params(const std::vector<std::string>& kvs) {
    CatalogParams p;
    for (auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw RefusalError("bad --param '" + kv + "', expected k=v");
        p[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
    }
    return p;
}

int cmd_diam(const std::string& graph_path, std::ostream& out) {
    Graph g = load_graph(graph_path);
    auto ms = g.degree_stats();
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    if (ms.diameter)
        j["diameter"] = *ms.diameter;
    else
        j["diameter"] = "infinite";
    j["min_degree"] = ms.min_degree;
    j["max_degree"] = ms.max_degree;
    out << j.dump() << "\n";
    return 0;
}

int cmd_check_mp2(const std::string& graph_path, std::ostream& out) {
    Graph g = load_graph(graph_path);
    json reasons = json::array();
    bool ok = true;
    if (g.vertex_count() < 3) {
        ok = false;
        reasons.push_back("fewer than 3 vertices");
    } else {
        if (g.edge_count() != 3 * g.vertex_count() - 6) {
            ok = false;
            reasons.push_back("|E| = " + std::to_string(g.edge_count()) + ", maximal planar needs " +
                              std::to_string(3 * g.vertex_count() - 6));
        }
        if (!is_planar(g)) {
            ok = false;
            reasons.push_back("not planar");
        }
        auto d = g.diameter();
        if (!d) {
            ok = false;
            reasons.push_back("disconnected");
        } else if (*d > 2) {
            ok = false;
            reasons.push_back("diameter " + std::to_string(*d));
        }
    }
    if (ok) ok = is_mp2(g); // runs the min-degree cross-check
    out << json{{"is_mp2", ok}, {"reasons", reasons}}.dump() << "\n";
    return 0;
}

int cmd_catalog_list(std::ostream& out) {
    json entries = json::array();
    for (auto& fam : catalog_families()) {
        json e;
        e["name"] = fam.name;
        json params = json::object();
        for (auto& p : fam.param_names)
            params[p] = std::string(">=") + std::to_string(fam.min_params.at(p));
        e["params"] = params;
        entries.push_back(e);
    }
    out << json{{"entries", entries}}.dump() << "\n";
    return 0;
}

int cmd_catalog_emit(const std::string& name, const CatalogParams& params, bool manifest,
                     std::ostream& out) {
    CatalogEntry e = catalog_entry(name, params);
    if (!manifest) {
        out << serialize_edge_list(e.graph);
        return 0;
    }
    json j;
    j["name"] = e.name;
    j["params"] = e.params;
    json labels = json::array();
    for (Vertex v = 0; v < e.graph.vertex_count(); ++v) labels.push_back(e.graph.name(v));
    j["labels"] = labels;
    json tris = json::object();
    for (auto& [key, t] : e.named_triangles) tris[key] = {t[0], t[1], t[2]};
    j["triangles"] = tris;
    j["vertices"] = e.graph.vertex_count();
    j["edges"] = e.graph.edge_count();
    out << j.dump() << "\n";
    return 0;
}

int cmd_solve(const std::string& graph_path, const std::string& asg_path, std::ostream& out) {
    Graph g = load_graph(graph_path);
    MatchingAssignment m = parse_assignment(g, slurp(asg_path));
    SolveResult r = solve_exact(m);
    json j;
    j["status"] = r.status == SolveResult::Status::Sat ? "sat" : "unsat";
    j["nodes"] = r.nodes;
    if (r.status == SolveResult::Status::Sat) j["coloring"] = coloring_json(g, r.coloring);
    out << j.dump() << "\n";
    return 0;
}

int cmd_color(const std::string& graph_path, const std::string& asg_path, std::ostream& out) {
    Graph g = load_graph(graph_path);
    MatchingAssignment m = parse_assignment(g, slurp(asg_path));
    PipelineResult r = color_diam2(g, m);
    json added = json::array();
    for (auto [u, v] : r.completion.added_edges)
        added.push_back({r.completion.completed.name(u), r.completion.completed.name(v)});
    json j;
    j["added_edges"] = added;
    j["coloring"] = coloring_json(g, r.coloring);
    j["verified"] = verify_coloring(m, r.coloring);
    j["trace"] = json::parse(serialize_trace(r.trace))["steps"];
    out << j.dump() << "\n";
    return 0;
}

int cmd_chi_dp(const std::string& graph_path, int kmax, uint64_t budget, std::ostream& out) {
    Graph g = load_graph(graph_path);
    json j;
    json counterexamples = json::object();
    std::optional<int> answer;
    for (int k = 1; k <= kmax; ++k) {
        auto r = dp_colorable_for_all(g, k, budget);
        if (r.colorable) {
            answer = k;
            break;
        }
        if (r.counterexample)
            counterexamples[std::to_string(k)] = assignment_json(*r.counterexample);
    }
    if (answer)
        j["chi_dp"] = *answer;
    else
        j["chi_dp"] = "exceeds " + std::to_string(kmax);
    j["counterexamples"] = counterexamples;
    out << j.dump() << "\n";
    return 0;
}

int cmd_straighten(const std::string& graph_path, const std::string& asg_path,
                   const std::string& tree_spec, std::ostream& out) {
    Graph g = load_graph(graph_path);
    MatchingAssignment m = parse_assignment(g, slurp(asg_path));
    std::vector<std::pair<Vertex, Vertex>> tree;
    std::istringstream ts(tree_spec);
    std::string item;
    while (std::getline(ts, item, ',')) {
        std::istringstream es(item);
        std::string a, b;
        if (!(es >> a >> b)) throw RefusalError("bad tree edge '" + item + "'");
        tree.emplace_back(g.vertex(a), g.vertex(b));
    }
    auto [renamed, s] = straighten_tree(m, tree);
    json j;
    j["assignment"] = assignment_json(renamed);
    j["renames"] = json::parse(serialize_straightening(g, s));
    out << j.dump() << "\n";
    return 0;
}

int cmd_fuzz(const std::string& name, const CatalogParams& params, int trials, uint64_t seed,
             const std::string& artifact_dir, std::ostream& out) {
    CatalogEntry e = catalog_entry(name, params);
    int failures = 0;
    json failed_trials = json::array();
    for (int t = 0; t < trials; ++t) {
        MatchingAssignment m = random_assignment(e.graph, 4, seed + static_cast<uint64_t>(t));
        try {
            auto [c, trace] = case_procedure(e, m);
            if (!verify_coloring(m, c)) throw InternalConsistencyError("unverified coloring");
        } catch (const InternalConsistencyError& ex) {
            ++failures;
            failed_trials.push_back(t);
            if (!artifact_dir.empty()) {
                std::ofstream af(artifact_dir + "/" + name + "-trial" + std::to_string(t) +
                                 ".assignment.json");
                af << serialize_assignment(m);
                std::ofstream gf(artifact_dir + "/" + name + "-trial" + std::to_string(t) +
                                 ".edges");
                gf << serialize_edge_list(e.graph);
            }
        }
    }
    json j;
    j["catalog"] = name;
    j["params"] = e.params;
    j["trials"] = trials;
    j["failures"] = failures;
    j["failed_trials"] = failed_trials;
    out << j.dump() << "\n";
    return failures == 0 ? 0 : 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"correspondence-coloring engine for planar diameter-2 graphs"};
    app.require_subcommand(1);

    std::string graph_path, asg_path, tree_spec, artifact_dir, catalog_name;
    std::vector<std::string> params_kv;
    int kmax = 4, trials = 100;
    uint64_t seed = 1, budget = 100000000ULL;
    bool manifest = false;

    auto* diam = app.add_subcommand("diam", "graph metrics");
    diam->add_option("graph", graph_path)->required();

    auto* check = app.add_subcommand("check-mp2", "maximal-planar diameter-2 predicate");
    check->add_option("graph", graph_path)->required();

    auto* cat = app.add_subcommand("catalog", "catalog access");
    auto* cat_list = cat->add_subcommand("list", "list entries");
    auto* cat_emit = cat->add_subcommand("emit", "emit one entry as an edge list");
    cat_emit->add_option("name", catalog_name)->required();
    cat_emit->add_option("--param", params_kv, "family parameter k=v");
    cat_emit->add_flag("--manifest", manifest, "emit the JSON manifest instead");

    auto* solve = app.add_subcommand("solve", "exact search on one assignment");
    solve->add_option("graph", graph_path)->required();
    solve->add_option("assignment", asg_path)->required();

    auto* color = app.add_subcommand("color", "triangulate, color, restrict");
    color->add_option("graph", graph_path)->required();
    color->add_option("assignment", asg_path)->required();

    auto* chi = app.add_subcommand("chi-dp", "adversarial DP-chromatic number");
    chi->add_option("graph", graph_path)->required();
    chi->add_option("--kmax", kmax);
    chi->add_option("--budget", budget);

    auto* fuzz = app.add_subcommand("fuzz", "totality fuzzing for one catalog entry");
    fuzz->add_option("name", catalog_name)->required();
    fuzz->add_option("--param", params_kv, "family parameter k=v");
    fuzz->add_option("--trials", trials);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--artifacts", artifact_dir, "directory for failure artifacts");

    auto* str = app.add_subcommand("straighten", "rename lists to straighten a tree");
    str->add_option("graph", graph_path)->required();
    str->add_option("assignment", asg_path)->required();
    str->add_option("--tree", tree_spec, "comma-separated edges, e.g. 'a b,b c'")->required();

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("dpcolor");
        for (auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << nlohmann::json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (*diam) return cmd_diam(graph_path, out);
        if (*check) return cmd_check_mp2(graph_path, out);
        if (*cat_list) return cmd_catalog_list(out);
        if (*cat_emit) return cmd_catalog_emit(catalog_name, parse_params(params_kv), manifest, out);
        if (*solve) return cmd_solve(graph_path, asg_path, out);
        if (*color) return cmd_color(graph_path, asg_path, out);
        if (*chi) return cmd_chi_dp(graph_path, kmax, budget, out);
        if (*fuzz) return cmd_fuzz(catalog_name, parse_params(params_kv), trials, seed,
                                   artifact_dir, out);
        if (*str) return cmd_straighten(graph_path, asg_path, tree_spec, out);
    } catch (const InternalConsistencyError& e) {
        nlohmann::json j{{"error", "internal-consistency"}, {"detail", e.what()}};
        if (!e.trace.empty()) j["trace"] = nlohmann::json::parse(e.trace);
        err << j.dump() << "\n";
        return 2;
    } catch (const RefusalError& e) {
        err << nlohmann::json{{"error", "refusal"}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    }
    err << nlohmann::json{{"error", "usage"}, {"detail", "no subcommand"}}.dump() << "\n";
    return 1;
}

} // namespace dpcolor
