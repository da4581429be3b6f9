#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "census.hpp"
#include "classifier.hpp"
#include "criticality.hpp"
#include "degeneracy.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "io.hpp"

namespace degencrit {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool passed() const {
        for (const SuiteCheck& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Erdos-Renyi G(n, 1/2) with a standard-specified generator, so corpora are
// reproducible across platforms from the seed alone.
inline Graph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// Every named construction at exercise-friendly sizes; used by the invariant
// sweep and the spot-check tests.
inline std::vector<Graph> standard_family_corpus() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n) out.push_back(complete(n));
    for (int n = 2; n <= 5; ++n) out.push_back(path(n));
    for (int n = 3; n <= 8; ++n) out.push_back(cycle(n));
    for (int n = 5; n <= 9; ++n) out.push_back(cycle_square(n));
    for (int n = 3; n <= 6; ++n) out.push_back(wheel(n));
    out.push_back(brick(BrickKind::K5_NABLA));
    out.push_back(brick(BrickKind::K222_NABLA));
    out.push_back(glued_pair(BrickKind::K5_NABLA, BrickKind::K5_NABLA));
    out.push_back(glued_pair(BrickKind::K5_NABLA, BrickKind::K222_NABLA));
    out.push_back(glued_pair(BrickKind::K222_NABLA, BrickKind::K222_NABLA));
    for (int k = 4; k <= 7; ++k) out.push_back(f_graph(k));
    out.push_back(icosahedron());
    out.push_back(toroidal_triangulated(3, 3));
    out.push_back(toroidal_triangulated(4, 4));
    for (int p = 6; p <= 8; ++p) out.push_back(ratio_family(p, 4));
    for (int t = 1; t <= 3; ++t) out.push_back(complete_join(cycle_square(6), complete(t)));
    return out;
}

namespace detail {

inline std::string first_violation(const SweepReport& rep) {
    if (rep.violations.empty()) return "";
    return "; first: " + rep.violations.front().graph6 + " [" +
           rep.violations.front().property + "]";
}

} // namespace detail

// Invariant battery: the full sweep over small connected graphs, the family
// corpus, and a negative control proving the checker can actually fail.
inline SuiteResult suite_invariant_sweep(int n_max = 6) {
    SuiteResult res;
    res.suite = "observations";

    SweepReport census = property_sweep(n_max);
    res.checks.push_back({"connected census invariant sweep (n <= " + std::to_string(n_max) + ")",
                          census.violations.empty(),
                          std::to_string(census.graphs_checked) + " graphs, " +
                              std::to_string(census.violations.size()) + " violations" +
                              detail::first_violation(census)});

    SweepReport fams = sweep_graphs(standard_family_corpus());
    res.checks.push_back({"family corpus invariant sweep", fams.violations.empty(),
                          std::to_string(fams.graphs_checked) + " graphs, " +
                              std::to_string(fams.violations.size()) + " violations" +
                              detail::first_violation(fams)});

    // wheel minus one spoke, report doctored to claim double-col-criticality
    Graph mutant = delete_edge(wheel(5), 0, 5);
    CriticalityReport forged = criticality_report(mutant);
    forged.is_double_col_critical = true;
    bool caught = !check_criticality_invariants(mutant, forged).empty();
    res.checks.push_back({"doctored report rejected", caught,
                          caught ? "mislabelled double-col-critical flag detected"
                                 : "mislabelled report slipped through"});
    return res;
}

// Exhaustive-characterization suite: the double-col-critical graphs with
// colouring number 5 on up to n_max vertices must be exactly the cycle
// squares plus the three glued brick pairs.
inline SuiteResult suite_col5_characterization(int n_max = 7) {
    SuiteResult res;
    res.suite = "theorem28";

    std::vector<Dcc5Row> rows = census_dcc5(n_max);
    for (const Dcc5Row& row : rows) {
        std::set<std::string> expected{canonical_form(cycle_square(row.n))};
        if (row.n == 7)
            expected.insert(canonical_form(glued_pair(BrickKind::K5_NABLA, BrickKind::K5_NABLA)));
        if (row.n == 8)
            expected.insert(
                canonical_form(glued_pair(BrickKind::K5_NABLA, BrickKind::K222_NABLA)));
        if (row.n == 9)
            expected.insert(
                canonical_form(glued_pair(BrickKind::K222_NABLA, BrickKind::K222_NABLA)));

        std::set<std::string> got;
        bool labels_ok = true;
        for (const Dcc5Hit& hit : row.hits) {
            got.insert(hit.canonical_g6);
            if (hit.label.kind == ClassLabel::Kind::NotApplicable) labels_ok = false;
        }
        std::ostringstream detail;
        detail << row.graphs_enumerated << " graphs with min degree 4 enumerated, "
               << row.hits.size() << " hits";
        for (const Dcc5Hit& hit : row.hits) detail << " [" << hit.label.str() << "]";
        res.checks.push_back({"order " + std::to_string(row.n) + " hit set",
                              got == expected && labels_ok, detail.str()});
    }
    return res;
}

// Edge-bound suite: non-complete critical graphs with colouring number 4
// have at most half their edges double-col-critical, with equality exactly
// on wheels; also reports the smallest wheel order attaining equality.
inline SuiteResult suite_col4_edge_bound(int n_max = 7) {
    SuiteResult res;
    res.suite = "prop33";

    std::vector<Col4BoundRow> rows;
    try {
        rows = census_col4_edge_bound(n_max);
    } catch (const std::logic_error& e) {
        res.checks.push_back({"double-col-critical edges at most m/2", false, e.what()});
        return res;
    }
    res.checks.push_back({"double-col-critical edges at most m/2", true,
                          std::to_string(rows.size()) +
                              " critical non-complete graphs with col 4 checked"});

    bool only_wheels = true;
    int min_extremal_order = 0;
    std::string offender;
    for (const Col4BoundRow& row : rows) {
        if (!row.is_extremal) continue;
        int n = row.graph.vertex_count();
        if (!are_isomorphic(row.graph, wheel(n - 1))) {
            only_wheels = false;
            offender = row.canonical_g6;
        } else if (min_extremal_order == 0 || n < min_extremal_order) {
            min_extremal_order = n;
        }
    }
    res.checks.push_back({"equality cases are wheels", only_wheels,
                          only_wheels ? "smallest extremal order observed: " +
                                            std::to_string(min_extremal_order)
                                      : "non-wheel equality case: " + offender});

    // conversely, every wheel in range must actually attain equality
    bool wheels_extremal = true;
    for (int n = 5; n <= n_max; ++n) {
        Graph w = wheel(n - 1);
        std::string canon = canonical_form(w);
        bool found = false;
        for (const Col4BoundRow& row : rows)
            if (row.canonical_g6 == canon && row.is_extremal) found = true;
        if (!found) wheels_extremal = false;
    }
    res.checks.push_back({"wheels attain equality", wheels_extremal,
                          "orders 5.." + std::to_string(n_max)});
    return res;
}

// Join suite: the two-sided bound sandwiches the true value on an exhaustive
// sweep of small pairs, the join of double-col-critical graphs stays
// double-col-critical at the predicted value, and the converse of that is
// refuted by the fixed witness pair.
inline SuiteResult suite_join_properties(int n_max = 4, int samples = 50,
                                         std::uint64_t seed = 20260818) {
    SuiteResult res;
    res.suite = "joins";

    std::vector<Graph> pool;
    for (int n = 1; n <= n_max; ++n) {
        CensusConstraints c;
        c.n = n;
        c.require_connected = false;
        enumerate_graphs(c, [&](const Graph& g, const std::string&) { pool.push_back(g); });
    }
    long long pairs = 0;
    bool sandwich_ok = true;
    std::string sandwich_detail;
    for (const Graph& a : pool) {
        for (const Graph& b : pool) {
            ++pairs;
            JoinColBounds bounds = join_col_bounds(a, b);
            int actual = colouring_number(complete_join(a, b));
            bool ok = bounds.lower <= actual && actual <= bounds.upper &&
                      (!bounds.exact || *bounds.exact == actual);
            if (!ok && sandwich_ok) {
                sandwich_ok = false;
                sandwich_detail = "failed for " + to_graph6(a) + " + " + to_graph6(b);
            }
        }
    }
    res.checks.push_back({"join bound sandwich (all pairs, n <= " + std::to_string(n_max) + ")",
                          sandwich_ok,
                          sandwich_ok ? std::to_string(pairs) + " pairs" : sandwich_detail});

    std::vector<Graph> dcc_pool;
    for (int n = 1; n <= 5; ++n) dcc_pool.push_back(complete(n));
    for (int n = 5; n <= 9; ++n) dcc_pool.push_back(cycle_square(n));
    dcc_pool.push_back(glued_pair(BrickKind::K5_NABLA, BrickKind::K5_NABLA));
    dcc_pool.push_back(glued_pair(BrickKind::K5_NABLA, BrickKind::K222_NABLA));
    dcc_pool.push_back(glued_pair(BrickKind::K222_NABLA, BrickKind::K222_NABLA));
    dcc_pool.push_back(icosahedron());

    std::mt19937_64 rng(seed);
    bool joins_ok = true;
    std::string joins_detail;
    for (int i = 0; i < samples; ++i) {
        const Graph& a = dcc_pool[rng() % dcc_pool.size()];
        const Graph& b = dcc_pool[rng() % dcc_pool.size()];
        if (!verify_join_double_col_critical(a, b)) {
            joins_ok = false;
            joins_detail = "failed for " + to_graph6(a) + " + " + to_graph6(b);
            break;
        }
    }
    res.checks.push_back({"join of double-col-critical pairs stays double-col-critical",
                          joins_ok,
                          joins_ok ? std::to_string(samples) + " sampled pairs" : joins_detail});

    Graph c6sq = cycle_square(6);
    Graph witness = complete_join(cycle(4), edgeless(2));
    bool nonconverse = are_isomorphic(c6sq, witness) && is_double_col_critical(c6sq) &&
                       !is_double_col_critical(cycle(4)) &&
                       !is_double_col_critical(edgeless(2));
    res.checks.push_back(
        {"join factors need not be double-col-critical", nonconverse,
         "C6 squared = C4 + two isolated vertices, both factors non-critical"});
    return res;
}

// Oracle suite: the production colouring number agrees with the two
// independent slow routes on exhaustive small graphs and on a seeded random
// corpus.
inline SuiteResult suite_oracle_agreement(int n_max_exhaustive = 6, int random_samples = 200,
                                          int random_n_max = 9,
                                          std::uint64_t seed = 20260818) {
    SuiteResult res;
    res.suite = "oracle";
    if (random_n_max > bruteforce_cap)
        throw std::invalid_argument("suite_oracle_agreement: random_n_max exceeds the "
                                    "brute-force cap");

    long long checked = 0;
    bool exhaustive_ok = true;
    std::string exhaustive_detail;
    for (int n = 1; n <= n_max_exhaustive && exhaustive_ok; ++n) {
        CensusConstraints c;
        c.n = n;
        enumerate_graphs(c, [&](const Graph& g, const std::string&) {
            if (!exhaustive_ok) return;
            ++checked;
            int fast = colouring_number(g);
            if (fast != colouring_number_bruteforce(g) ||
                (n <= subset_sweep_cap && fast != colouring_number_subset_sweep(g))) {
                exhaustive_ok = false;
                exhaustive_detail = "mismatch on " + to_graph6(g);
            }
        });
    }
    res.checks.push_back({"exhaustive oracle agreement (connected, n <= " +
                              std::to_string(n_max_exhaustive) + ")",
                          exhaustive_ok,
                          exhaustive_ok ? std::to_string(checked) + " graphs, three routes"
                                        : exhaustive_detail});

    std::mt19937_64 rng(seed);
    bool random_ok = true;
    std::string random_detail;
    for (int i = 0; i < random_samples; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(random_n_max));
        Graph g = random_graph(rng, n);
        int fast = colouring_number(g);
        if (fast != colouring_number_bruteforce(g) ||
            (n <= subset_sweep_cap && fast != colouring_number_subset_sweep(g))) {
            random_ok = false;
            random_detail = "mismatch on " + to_graph6(g);
            break;
        }
    }
    res.checks.push_back({"random corpus oracle agreement", random_ok,
                          random_ok ? std::to_string(random_samples) + " graphs, seed " +
                                          std::to_string(seed)
                                    : random_detail});
    return res;
}

} // namespace degencrit
