// Command-line front end: generate the named graph families, analyze graphs
// from files or stdin (graph6 or edge-list input, human or JSON output),
// classify, run censuses, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
// parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degencrit/degencrit.hpp"

using nlohmann::json;
using namespace degencrit;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_parse = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& source) {
    if (source == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(source);
    if (!in) throw InputError("cannot open " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank line
        if (!(ls >> b) || (ls >> extra)) return false;
        return a.find_first_not_of("0123456789") == std::string::npos &&
               b.find_first_not_of("0123456789") == std::string::npos;
    }
    return false;
}

// Accepts either one edge list ("n m" header then one "u v" line per edge)
// or any number of graph6 lines.
std::vector<Graph> read_graphs(const std::string& source) {
    std::string text = slurp(source);
    try {
        if (looks_like_edge_list(text)) return {parse_edge_list(text)};
        std::vector<Graph> graphs;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            graphs.push_back(parse_graph6(line));
        }
        if (graphs.empty()) throw InputError("no graphs in input");
        return graphs;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string class_label_string(const Graph& g) {
    if (g.vertex_count() > canonical_cap)
        return "not-applicable: too large to classify (n > " + std::to_string(canonical_cap) +
               ")";
    return classify_dcc5(g).str();
}

json report_to_json(const Graph& g, const CriticalityReport& r) {
    json j;
    j["n"] = g.vertex_count();
    j["m"] = r.edge_count;
    j["col"] = r.col;
    if (g.vertex_count() > 0) {
        DegreeProfile prof = degree_profile(g);
        j["delta"] = prof.min_degree;
        j["Delta"] = prof.max_degree;
    } else {
        j["delta"] = nullptr;
        j["Delta"] = nullptr;
    }
    j["col_critical"] = r.is_col_critical;
    j["col_vertex_critical"] = r.is_col_vertex_critical;
    std::vector<std::string> edges;
    for (const Edge& e : r.dcc_edges)
        edges.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
    j["dcc_edges"] = edges;
    j["dcc_ratio"] = r.dcc_ratio ? json(r.dcc_ratio->str()) : json(nullptr);
    j["two_connected"] = r.is_two_connected;
    j["class_label"] = class_label_string(g);
    return j;
}

void print_report_human(std::ostream& os, const Graph& g, const CriticalityReport& r) {
    os << "graph6: " << to_graph6(g) << "\n";
    os << "n = " << g.vertex_count() << ", m = " << r.edge_count << "\n";
    os << "col = " << r.col;
    if (g.vertex_count() > 0) {
        DegreeProfile prof = degree_profile(g);
        os << ", delta = " << prof.min_degree << ", Delta = " << prof.max_degree;
    }
    os << "\n";
    os << "col-critical: " << (r.is_col_critical ? "yes" : "no")
       << ", col-vertex-critical: " << (r.is_col_vertex_critical ? "yes" : "no")
       << ", double-col-critical: " << (r.is_double_col_critical ? "yes" : "no")
       << ", 2-connected: " << (r.is_two_connected ? "yes" : "no") << "\n";
    os << "double-col-critical edges (" << r.dcc_edge_count << " of " << r.edge_count << "):";
    for (const Edge& e : r.dcc_edges) os << " " << e.u << "-" << e.v;
    os << "\n";
    if (r.dcc_ratio) os << "double-col-critical ratio: " << r.dcc_ratio->str() << "\n";
    os << "class: " << class_label_string(g) << "\n";
}

Graph build_family(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("gen: missing family name");
    const std::string& name = args[0];
    auto want = [&](std::size_t count, const std::string& usage) {
        if (args.size() != count + 1) throw UsageError("gen " + name + ": expected " + usage);
    };
    auto num = [&](std::size_t i) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(args[i], &pos);
            if (pos != args[i].size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw UsageError("gen " + name + ": '" + args[i] + "' is not an integer");
        }
    };
    auto brick_kind = [&](std::size_t i) {
        if (args[i] == "k5") return BrickKind::K5_NABLA;
        if (args[i] == "k222") return BrickKind::K222_NABLA;
        throw UsageError("gen " + name + ": brick kind must be k5 or k222");
    };

    try {
        if (name == "complete") { want(1, "complete N"); return complete(num(1)); }
        if (name == "edgeless") { want(1, "edgeless N"); return edgeless(num(1)); }
        if (name == "path") { want(1, "path N"); return path(num(1)); }
        if (name == "cycle") { want(1, "cycle N"); return cycle(num(1)); }
        if (name == "cycle-square") { want(1, "cycle-square N"); return cycle_square(num(1)); }
        if (name == "wheel") { want(1, "wheel N"); return wheel(num(1)); }
        if (name == "brick") { want(1, "brick k5|k222"); return brick(brick_kind(1)); }
        if (name == "glued") {
            want(2, "glued k5|k222 k5|k222");
            return glued_pair(brick_kind(1), brick_kind(2));
        }
        if (name == "f-graph") { want(1, "f-graph K"); return f_graph(num(1)); }
        if (name == "icosahedron") { want(0, "icosahedron"); return icosahedron(); }
        if (name == "toroidal") {
            want(2, "toroidal ROWS COLS");
            return toroidal_triangulated(num(1), num(2));
        }
        if (name == "ratio-family") {
            want(2, "ratio-family P K");
            return ratio_family(num(1), num(2));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("gen ") + name + ": " + e.what());
    }
    throw UsageError("gen: unknown family '" + name +
                     "' (families: complete, edgeless, path, cycle, cycle-square, wheel, "
                     "brick, glued, f-graph, icosahedron, toroidal, ratio-family)");
}

json suite_to_json_rows(const SuiteResult& sr) {
    json rows = json::array();
    for (const SuiteCheck& c : sr.checks)
        rows.push_back(
            {{"suite", sr.suite}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return rows;
}

int run_verify(const std::string& which, int n_max, std::uint64_t seed) {
    std::vector<SuiteResult> results;
    if (which == "observations" || which == "all")
        results.push_back(suite_invariant_sweep(n_max > 0 ? std::min(n_max, 8) : 6));
    if (which == "theorem28" || which == "all")
        results.push_back(suite_col5_characterization(n_max > 0 ? n_max : 7));
    if (which == "prop33" || which == "all")
        results.push_back(suite_col4_edge_bound(n_max > 0 ? std::min(n_max, 8) : 7));
    if (which == "joins" || which == "all")
        results.push_back(suite_join_properties(n_max > 0 ? std::min(n_max, 4) : 4, 50, seed));
    if (results.empty())
        throw UsageError("verify: unknown suite '" + which +
                         "' (suites: all, observations, joins, theorem28, prop33)");
    bool all_passed = true;
    for (const SuiteResult& sr : results) {
        for (const json& row : suite_to_json_rows(sr)) std::cout << row.dump() << "\n";
        all_passed = all_passed && sr.passed();
    }
    return all_passed ? exit_ok : exit_verification;
}

void write_g6_sidecar(const std::string& file, const std::vector<std::string>& lines) {
    if (file.empty()) return;
    std::ofstream out(file);
    if (!out) throw InputError("cannot open " + file + " for writing");
    for (const std::string& line : lines) out << line << "\n";
}

int run_census(const std::string& kind, int n_max, const std::string& epsilon, int p,
               const std::string& g6_out) {
    if (kind == "dcc5") {
        std::vector<std::string> sidecar;
        for (const Dcc5Row& row : census_dcc5(n_max > 0 ? n_max : 7)) {
            json hits = json::array();
            for (const Dcc5Hit& h : row.hits) {
                hits.push_back({{"graph6", h.canonical_g6}, {"class_label", h.label.str()}});
                sidecar.push_back(h.canonical_g6);
            }
            std::cout << json{{"n", row.n},
                              {"graphs_enumerated", row.graphs_enumerated},
                              {"hits", hits}}
                             .dump()
                      << "\n";
        }
        write_g6_sidecar(g6_out, sidecar);
        return exit_ok;
    }
    if (kind == "col4-bound") {
        std::vector<std::string> sidecar;
        std::vector<Col4BoundRow> rows;
        try {
            rows = census_col4_edge_bound(n_max > 0 ? n_max : 7);
        } catch (const std::logic_error& e) {
            std::cout << json{{"violation", e.what()}}.dump() << "\n";
            return exit_verification;
        }
        for (const Col4BoundRow& row : rows) {
            std::cout << json{{"graph6", row.canonical_g6},
                              {"n", row.graph.vertex_count()},
                              {"dcc_count", row.dcc_count},
                              {"m", row.m},
                              {"extremal", row.is_extremal}}
                             .dump()
                      << "\n";
            sidecar.push_back(row.canonical_g6);
        }
        write_g6_sidecar(g6_out, sidecar);
        return exit_ok;
    }
    if (kind == "sweep") {
        SweepReport rep = property_sweep(n_max > 0 ? n_max : 6);
        json violations = json::array();
        for (const SweepViolation& v : rep.violations)
            violations.push_back({{"graph6", v.graph6}, {"property", v.property}});
        std::cout << json{{"graphs_checked", rep.graphs_checked}, {"violations", violations}}
                         .dump()
                  << "\n";
        return rep.violations.empty() ? exit_ok : exit_verification;
    }
    if (kind == "ratio-threshold") {
        Rational eps(0, 1);
        try {
            eps = Rational::parse(epsilon.empty() ? "1/10" : epsilon);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("census ratio-threshold: ") + e.what());
        }
        RatioThresholdResult res = find_ratio_threshold(p, eps);
        std::cout << json{{"p", res.p},
                          {"epsilon", res.epsilon.str()},
                          {"k", res.k ? json(*res.k) : json(nullptr)},
                          {"ratio", res.ratio ? json(res.ratio->str()) : json(nullptr)},
                          {"search_cap", res.search_cap}}
                         .dump()
                  << "\n";
        return exit_ok;
    }
    throw UsageError("census: unknown kind '" + kind +
                     "' (kinds: dcc5, col4-bound, sweep, ratio-threshold)");
}

int run_oracle(const std::string& input, std::optional<std::uint64_t> seed, int n_max) {
    int cap = n_max > 0 ? std::min(n_max, bruteforce_cap) : bruteforce_cap;
    std::vector<Graph> graphs;
    if (!input.empty()) {
        graphs = read_graphs(input);
    } else {
        std::mt19937_64 rng(seed.value_or(20260818));
        for (int i = 0; i < 500; ++i) {
            int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
            graphs.push_back(random_graph(rng, n));
        }
    }
    long long mismatches = 0;
    for (const Graph& g : graphs) {
        if (g.vertex_count() > bruteforce_cap)
            throw UsageError("oracle: graph with " + std::to_string(g.vertex_count()) +
                             " vertices exceeds the brute-force cap of " +
                             std::to_string(bruteforce_cap));
        int fast = colouring_number(g);
        bool ok = fast == colouring_number_bruteforce(g);
        if (ok && g.vertex_count() <= subset_sweep_cap)
            ok = fast == colouring_number_subset_sweep(g);
        if (!ok) {
            ++mismatches;
            std::cout << json{{"graph6", to_graph6(g)}, {"mismatch", true}}.dump() << "\n";
        }
    }
    std::cout << json{{"graphs_checked", graphs.size()}, {"mismatches", mismatches}}.dump()
              << "\n";
    return mismatches == 0 ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degeneracy / colouring number toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family member");
    std::vector<std::string> gen_args;
    std::string gen_format = "graph6";
    gen->add_option("family", gen_args, "family name and its parameters")->expected(-1);
    gen->add_option("--format", gen_format, "output format: graph6 or edges")
        ->check(CLI::IsMember({"graph6", "edges"}));

    // analyze
    auto* analyze = app.add_subcommand("analyze", "criticality report for input graphs");
    std::string analyze_input;
    bool analyze_json = false;
    analyze->add_option("input", analyze_input, "file path or - for stdin")->required();
    analyze->add_flag("--json", analyze_json, "emit one JSON object per graph");

    // classify
    auto* classify = app.add_subcommand("classify", "classification label for input graphs");
    std::string classify_input;
    bool classify_json = false;
    classify->add_option("input", classify_input, "file path or - for stdin")->required();
    classify->add_flag("--json", classify_json, "emit one JSON object per graph");

    // census
    auto* census = app.add_subcommand("census", "exhaustive enumeration reports");
    std::string census_kind;
    int census_nmax = 0;
    int census_p = 5;
    std::string census_epsilon;
    std::string census_g6_out;
    census->add_option("kind", census_kind, "dcc5 | col4-bound | sweep | ratio-threshold")
        ->required();
    census->add_option("--nmax", census_nmax, "largest vertex count to enumerate");
    census->add_option("--p", census_p, "target colouring number for ratio-threshold");
    census->add_option("--epsilon", census_epsilon, "rational gap a/b for ratio-threshold");
    census->add_option("--g6-out", census_g6_out, "write census hits as graph6 lines");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite;
    int verify_nmax = 0;
    std::uint64_t verify_seed = 20260818;
    verify->add_option("suite", verify_suite, "all | observations | joins | theorem28 | prop33")
        ->required();
    verify->add_option("--nmax", verify_nmax, "largest vertex count for the suite censuses");
    verify->add_option("--seed", verify_seed, "seed for sampled pair checks");

    // oracle
    auto* oracle = app.add_subcommand("oracle",
                                      "cross-check fast colouring number against brute force");
    std::string oracle_input;
    std::optional<std::uint64_t> oracle_seed;
    int oracle_nmax = 0;
    oracle->add_option("input", oracle_input, "file path or - for stdin (omit for random corpus)");
    oracle->add_option("--seed", oracle_seed, "seed for the random corpus");
    oracle->add_option("--nmax", oracle_nmax, "largest random graph order (capped at 9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed()) {
            Graph g = build_family(gen_args);
            if (gen_format == "edges")
                write_edge_list(std::cout, g);
            else
                std::cout << to_graph6(g) << "\n";
            return exit_ok;
        }
        if (analyze->parsed()) {
            for (const Graph& g : read_graphs(analyze_input)) {
                CriticalityReport r = criticality_report(g);
                if (analyze_json)
                    std::cout << report_to_json(g, r).dump() << "\n";
                else
                    print_report_human(std::cout, g, r);
            }
            return exit_ok;
        }
        if (classify->parsed()) {
            for (const Graph& g : read_graphs(classify_input)) {
                if (classify_json)
                    std::cout << json{{"graph6", to_graph6(g)},
                                      {"class_label", class_label_string(g)}}
                                     .dump()
                              << "\n";
                else
                    std::cout << class_label_string(g) << "\n";
            }
            return exit_ok;
        }
        if (census->parsed())
            return run_census(census_kind, census_nmax, census_epsilon, census_p,
                              census_g6_out);
        if (verify->parsed()) return run_verify(verify_suite, verify_nmax, verify_seed);
        if (oracle->parsed()) return run_oracle(oracle_input, oracle_seed, oracle_nmax);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        // guard violations and bad parameter values from the library
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return exit_verification;
    }
    return exit_usage;
}
