#include "imst/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "imst/bound.hpp"
#include "imst/errors.hpp"
#include "imst/graph.hpp"
#include "imst/imposition.hpp"
#include "imst/mst.hpp"
#include "imst/random_graph.hpp"
#include "imst/tree_analysis.hpp"
#include "imst/verification.hpp"

namespace imst::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Selector grammar: '#<id>' picks an edge by id, '<u>-<v>' by endpoints.
// The endpoint form must match exactly one edge; parallel edges need the
// id form.
int resolve_selector(const Graph& g, const std::string& sel) {
    auto parse_num = [&](const std::string& s) {
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("bad edge selector '" + sel + "'");
        }
        if (used != s.size()) {
            throw UsageError("bad edge selector '" + sel + "'");
        }
        return value;
    };

    if (!sel.empty() && sel[0] == '#') {
        int id = parse_num(sel.substr(1));
        if (id < 0 || id >= g.edge_count()) {
            throw UsageError("edge selector '" + sel + "' is out of range (graph has " +
                             std::to_string(g.edge_count()) + " edges)");
        }
        return id;
    }

    auto dash = sel.find('-', 1);  // position 0 would leave an empty u
    if (dash == std::string::npos) {
        throw UsageError("bad edge selector '" + sel + "' (use '#id' or 'u-v')");
    }
    int u = parse_num(sel.substr(0, dash));
    int v = parse_num(sel.substr(dash + 1));

    std::optional<int> match;
    for (const Edge& e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            if (match) {
                throw UsageError("edge selector '" + sel +
                                 "' matches parallel edges; select by '#id' instead");
            }
            match = e.id;
        }
    }
    if (!match) {
        throw UsageError("edge selector '" + sel + "' matches no edge");
    }
    return *match;
}

std::vector<int> resolve_selectors(const Graph& g, const std::string& spec) {
    std::vector<int> ids;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string token = spec.substr(pos, comma == std::string::npos ? spec.size() - pos
                                                                        : comma - pos);
        if (!token.empty()) {
            ids.push_back(resolve_selector(g, token));
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (ids.empty()) {
        throw UsageError("no edges selected by '" + spec + "'");
    }
    return ids;
}

json edge_json(const Graph& g, int id) {
    const Edge& e = g.edge(id);
    return json{{"edge", e.id}, {"u", e.u}, {"v", e.v}, {"cost", e.cost}};
}

json ext_cost_json(const ExtCost& c) {
    return c.is_infinite() ? json("inf") : json(c.value());
}

std::string edge_str(const Graph& g, int id) {
    const Edge& e = g.edge(id);
    return "#" + std::to_string(id) + " (" + std::to_string(e.u) + "-" + std::to_string(e.v) + ")";
}

oracle::EnumerationBudget budget_from_env() {
    oracle::EnumerationBudget budget;
    if (const char* raw = std::getenv("MST_IMPOSE_BUDGET")) {
        char* end = nullptr;
        long long cap = std::strtoll(raw, &end, 10);
        if (end == raw || *end != '\0' || cap < 1) {
            throw UsageError(std::string("MST_IMPOSE_BUDGET must be a positive integer, got '") +
                             raw + "'");
        }
        budget.max_trees = cap;
    }
    return budget;
}

int cmd_mst(const Graph& g, bool as_json, std::ostream& out) {
    SpanningTree tree = minimum_spanning_tree(g);
    if (as_json) {
        json doc{{"node_count", g.node_count()},
                 {"tree_edges", json::array()},
                 {"total_cost", tree.total_cost()}};
        for (int id : tree.edge_ids()) {
            doc["tree_edges"].push_back(edge_json(g, id));
        }
        out << doc.dump(2) << '\n';
    } else {
        for (int id : tree.edge_ids()) {
            out << "edge " << edge_str(g, id) << " cost " << g.edge(id).cost << '\n';
        }
        out << "total cost: " << tree.total_cost() << '\n';
    }
    return 0;
}

int cmd_impose(const Graph& g, const std::vector<int>& edges, bool as_json, std::ostream& out) {
    ImpositionState state = impose_all(g, edges);
    std::int64_t base_cost = ImpositionState::base(g).tree().total_cost();
    if (as_json) {
        json steps = json::array();
        std::int64_t cost = base_cost;
        for (const auto& step : state.history()) {
            if (step.removed_edge) {
                cost += g.edge(step.imposed_edge).cost - g.edge(*step.removed_edge).cost;
            }
            steps.push_back(json{{"imposed", step.imposed_edge},
                                 {"removed", step.removed_edge ? json(*step.removed_edge) : json()},
                                 {"cost", cost}});
        }
        json doc{{"base_cost", base_cost},
                 {"steps", std::move(steps)},
                 {"final_cost", state.tree().total_cost()},
                 {"tree_edges", state.tree().edge_ids()}};
        out << doc.dump(2) << '\n';
    } else {
        std::int64_t cost = base_cost;
        int n = 0;
        for (const auto& step : state.history()) {
            std::int64_t before = cost;
            out << "step " << ++n << ": impose " << edge_str(g, step.imposed_edge);
            if (step.removed_edge) {
                cost += g.edge(step.imposed_edge).cost - g.edge(*step.removed_edge).cost;
                out << ", removed " << edge_str(g, *step.removed_edge) << ", cost " << before
                    << " -> " << cost << '\n';
            } else {
                out << ", already a tree edge, cost " << cost << '\n';
            }
        }
        out << "final tree:";
        for (int id : state.tree().edge_ids()) {
            out << " #" << id;
        }
        out << "\nfinal cost: " << state.tree().total_cost() << '\n';
    }
    return 0;
}

int cmd_bound(const Graph& g, const std::vector<int>& edges, bool as_json, std::ostream& out) {
    BoundReport report = lower_bound(g, ImposedSet(g, edges), true);
    if (as_json) {
        json contributions = json::array();
        for (const BoundContribution& c : report.contributions) {
            const Edge& e = g.edge(c.edge);
            contributions.push_back(
                json{{"edge", c.edge},
                     {"u", e.u},
                     {"v", e.v},
                     {"r_edge", c.replacement_edge ? json(*c.replacement_edge) : json()},
                     {"r_cost", ext_cost_json(c.replacement_cost)}});
        }
        json doc{{"base_cost", report.base_cost},
                 {"contributions", std::move(contributions)},
                 {"lower_bound", ext_cost_json(report.lower_bound)},
                 {"exact_cost", report.exact_cost ? json(*report.exact_cost) : json()},
                 {"gap", report.gap ? json(*report.gap) : json()}};
        out << doc.dump(2) << '\n';
    } else {
        out << "base mst cost: " << report.base_cost << '\n';
        for (const BoundContribution& c : report.contributions) {
            out << "imposed " << edge_str(g, c.edge) << ": ";
            if (c.replacement_edge) {
                out << "replaces " << edge_str(g, *c.replacement_edge) << ", r-cost "
                    << c.replacement_cost.str() << '\n';
            } else if (c.replacement_cost == ExtCost(0)) {
                out << "tree edge, r-cost 0\n";
            } else {
                out << "no replacement, r-cost inf\n";
            }
        }
        out << "lower bound: " << report.lower_bound.str() << '\n';
        if (report.exact_cost) {
            out << "exact cost: " << *report.exact_cost << '\n';
        }
        if (report.gap) {
            out << "gap: " << *report.gap << '\n';
        }
    }
    return 0;
}

struct VerifyInstance {
    std::string name;
    Graph graph;
};

int cmd_verify(const std::vector<VerifyInstance>& instances, const VerifyOptions& options,
               bool as_json, std::ostream& out) {
    std::int64_t checks = 0;
    std::int64_t violations = 0;
    json jinstances = json::array();
    std::ostringstream text;

    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Graph& g = instances[i].graph;
        text << "instance " << (i + 1) << "/" << instances.size() << ": " << instances[i].name
             << ", " << g.node_count() << " nodes, " << g.edge_count() << " edges";
        json jinst{{"name", instances[i].name},
                   {"node_count", g.node_count()},
                   {"edge_count", g.edge_count()}};

        if (g.node_count() > options.budget.max_nodes) {
            std::string reason = "exceeds oracle cap of " +
                                 std::to_string(options.budget.max_nodes) + " nodes";
            text << " -- skipped (" << reason << ")\n";
            jinst["status"] = "skipped";
            jinst["skip_reason"] = reason;
            jinstances.push_back(std::move(jinst));
            continue;
        }
        text << '\n';

        GraphVerification result = verify_graph(g, options);
        jinst["status"] = "checked";
        jinst["properties"] = json::array();
        for (const PropertyResult& p : result.properties) {
            text << "  " << std::left << std::setw(28) << p.property
                 << (p.violations == 0 ? "pass" : "FAIL") << "  (" << p.checks << " checks";
            if (p.violations > 0) {
                text << ", " << p.violations << " violations; first: " << p.first_violation;
            }
            text << ")\n";
            json jp{{"property", p.property}, {"checks", p.checks}, {"violations", p.violations}};
            if (p.violations > 0) {
                jp["first_violation"] = p.first_violation;
            }
            jinst["properties"].push_back(std::move(jp));
        }
        checks += result.total_checks();
        violations += result.total_violations();
        jinstances.push_back(std::move(jinst));
    }

    bool passed = violations == 0;
    if (as_json) {
        json doc{{"instances", std::move(jinstances)},
                 {"checks", checks},
                 {"violations", violations},
                 {"passed", passed}};
        out << doc.dump(2) << '\n';
    } else {
        out << text.str();
        out << "verify: " << (passed ? "PASS" : "FAIL") << " (" << instances.size()
            << " instances, " << checks << " checks, " << violations << " violations)\n";
    }
    return passed ? 0 : 3;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum spanning trees under imposed (mandatory) edges"};
    app.name("imst");
    app.require_subcommand(1);

    std::string input_path;
    std::string impose_spec;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::vector<long long> random_spec;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* mst = app.add_subcommand("mst", "Minimum spanning tree of the input graph");
    mst->add_option("--input", input_path, "Graph file")->required();
    add_format(mst);

    CLI::App* impose = app.add_subcommand("impose", "Impose edges one by one via swaps");
    impose->add_option("--input", input_path, "Graph file")->required();
    impose->add_option("--impose", impose_spec, "Comma-separated edge selectors (#id or u-v)")
        ->required();
    add_format(impose);

    CLI::App* bound = app.add_subcommand("bound", "Lower bound for the imposed edge set");
    bound->add_option("--input", input_path, "Graph file")->required();
    bound->add_option("--impose", impose_spec, "Comma-separated edge selectors (#id or u-v)")
        ->required();
    add_format(bound);

    CLI::App* verify = app.add_subcommand("verify", "Cross-check solver against the oracle");
    verify->add_option("--input", input_path, "Graph file to verify");
    verify->add_option("--random", random_spec, "Generate k random instances: <nodes> <edges> <k>")
        ->expected(3);
    verify->add_option("--seed", seed, "Random seed");
    add_format(verify);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error:usage: " << e.what() << '\n';
        return 2;
    }

    bool as_json = format == "json";
    try {
        if (mst->parsed()) {
            return cmd_mst(parse_graph(read_file(input_path)), as_json, out);
        }
        if (impose->parsed()) {
            Graph g = parse_graph(read_file(input_path));
            return cmd_impose(g, resolve_selectors(g, impose_spec), as_json, out);
        }
        if (bound->parsed()) {
            Graph g = parse_graph(read_file(input_path));
            return cmd_bound(g, resolve_selectors(g, impose_spec), as_json, out);
        }

        // verify
        VerifyOptions options;
        options.budget = budget_from_env();
        std::vector<VerifyInstance> instances;
        if (!input_path.empty()) {
            instances.push_back(VerifyInstance{"input graph", parse_graph(read_file(input_path))});
        }
        if (!random_spec.empty()) {
            long long n = random_spec[0];
            long long m = random_spec[1];
            long long k = random_spec[2];
            if (n < 1 || m < n - 1 || k < 1) {
                throw UsageError("--random needs nodes >= 1, edges >= nodes-1, count >= 1");
            }
            if (n > options.budget.max_nodes) {
                throw UsageError("--random nodes must be <= oracle cap of " +
                                 std::to_string(options.budget.max_nodes));
            }
            Rng rng(seed);
            for (long long i = 0; i < k; ++i) {
                instances.push_back(
                    VerifyInstance{"random graph " + std::to_string(i + 1),
                                   random_connected_graph(rng, static_cast<int>(n),
                                                          static_cast<int>(m))});
            }
        }
        if (instances.empty()) {
            throw UsageError("verify needs --input and/or --random");
        }
        return cmd_verify(instances, options, as_json, out);
    } catch (const UsageError& e) {
        err << "error:usage: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error:parse: " << e.what() << '\n';
        return 2;
    } catch (const InfeasibleError& e) {
        err << "error:infeasible: " << e.what() << '\n';
        return 1;
    } catch (const BudgetError& e) {
        err << "error:budget: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error:domain: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error:domain: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace imst::cli
