#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "classifier.hpp"
#include "criticality.hpp"
#include "degeneracy.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "rational.hpp"

namespace degencrit {

struct CensusConstraints {
    int n = 1;
    int min_degree = 0;
    std::optional<int> max_degree;
    std::optional<int> forbid_clique; // reject graphs containing a clique of this order
    bool require_connected = true;
};

// Default size guard for enumeration, overridable through DEGENCRIT_MAX_N
// (still bounded by the canonicalization cap). Enumeration cost explodes
// with n; a larger default is allowed when min_degree >= 4 because that
// constraint collapses the search space.
inline int guarded_limit(int dflt) {
    if (const char* env = std::getenv("DEGENCRIT_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<int>(std::min<long>(v, canonical_cap));
    }
    return dflt;
}

inline int census_size_limit(const CensusConstraints& c) {
    return guarded_limit(c.min_degree >= 4 ? 11 : 10);
}

inline void validate_census_constraints(const CensusConstraints& c) {
    if (c.n < 1)
        throw std::invalid_argument("census: n must be at least 1");
    if (c.min_degree < 0)
        throw std::invalid_argument("census: min_degree must be non-negative");
    if (c.max_degree && (*c.max_degree < c.min_degree || *c.max_degree > c.n - 1))
        throw std::invalid_argument("census: need min_degree <= max_degree <= n - 1");
    if (c.forbid_clique && *c.forbid_clique < 2)
        throw std::invalid_argument("census: forbid_clique must be at least 2");
    int limit = census_size_limit(c);
    if (c.n > limit)
        throw std::invalid_argument("census: n = " + std::to_string(c.n) +
                                    " exceeds the size guard of " + std::to_string(limit) +
                                    " (DEGENCRIT_MAX_N overrides, capped at " +
                                    std::to_string(canonical_cap) + ")");
}

namespace detail {

inline Graph with_added_vertex(const Graph& g, std::uint64_t nbrs) {
    int k = g.vertex_count();
    std::vector<std::uint64_t> masks(k + 1);
    for (int v = 0; v < k; ++v)
        masks[v] = g.neighbour_mask(v) | ((nbrs >> v) & 1 ? Graph::bit(k) : 0);
    masks[k] = nbrs;
    return Graph::from_adjacency_masks(masks);
}

// Isomorph-free exhaustive generation: grow one vertex at a time, keeping a
// child only if the vertex just added lies in the automorphism orbit of the
// canonical order's last vertex (so every isomorphism class is reached from
// exactly one parent class), with a per-parent dedup of accepted children.
//
// Pruning must stay hereditary under "delete the canonical last vertex",
// since that is how the generation path to any final graph is defined:
//  - a vertex that cannot reach min_degree even if adjacent to every vertex
//    still to come kills the branch (degrees only grow by one per new vertex);
//  - degrees never shrink, so a max_degree overshoot is permanent;
//  - cliques never disappear when vertices are added;
//  - connectivity is NOT hereditary (intermediates of a connected graph may
//    be disconnected), so it is applied only as a final filter.
class Enumerator {
public:
    Enumerator(const CensusConstraints& c,
               const std::function<void(const Graph&, const std::string&)>& emit)
        : c_(c), emit_(emit) {}

    void run() {
        Graph seed = complete(1);
        if (!survives_pruning(seed)) return;
        if (c_.n == 1) {
            finish(seed, canonical_form(seed));
            return;
        }
        extend(seed);
    }

private:
    const CensusConstraints& c_;
    const std::function<void(const Graph&, const std::string&)>& emit_;

    bool survives_pruning(const Graph& g) const {
        int remaining = c_.n - g.vertex_count();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) + remaining < c_.min_degree) return false;
            if (c_.max_degree && g.degree(v) > *c_.max_degree) return false;
        }
        if (c_.forbid_clique && has_clique(g, *c_.forbid_clique)) return false;
        return true;
    }

    void finish(const Graph& g, const std::string& canon) {
        if (c_.require_connected && !is_connected(g)) return;
        emit_(g, canon);
    }

    static bool added_vertex_in_canonical_orbit(const Graph& g, int added, int v_star) {
        if (added == v_star) return true;
        if (g.degree(added) != g.degree(v_star)) return false;
        CanonicalRun a = canonical_run(g, added);
        CanonicalRun b = canonical_run(g, v_star);
        return a.form == b.form && a.marked_pos == b.marked_pos;
    }

    void extend(const Graph& parent) {
        int k = parent.vertex_count();
        int remaining_after = c_.n - (k + 1);
        // Neighbour-set constraints for the new vertex: "must" contains the
        // parent vertices that would be unable to reach min_degree without
        // it, "free" the rest that are still allowed to gain a neighbour.
        std::uint64_t must = 0, allowed = Graph::low_bits(k);
        for (int v = 0; v < k; ++v) {
            if (parent.degree(v) + 1 + remaining_after < c_.min_degree) must |= Graph::bit(v);
            if (c_.max_degree && parent.degree(v) >= *c_.max_degree)
                allowed &= ~Graph::bit(v);
        }
        if ((must & allowed) != must) return;
        std::uint64_t free = allowed & ~must;

        // Dedup is per parent and records only *accepted* children: a child
        // rejected by the orbit test must not block a later isomorphic child
        // whose added vertex does land in the right orbit.
        std::set<std::string> accepted;
        for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
            Graph child = with_added_vertex(parent, sub | must);
            if (survives_pruning(child)) {
                CanonicalRun base = canonical_run(child, -1);
                if (!accepted.count(base.form)) {
                    int v_star = base.order[k]; // last position of the canonical order
                    if (added_vertex_in_canonical_orbit(child, k, v_star)) {
                        accepted.insert(base.form);
                        if (k + 1 == c_.n)
                            finish(child, base.form);
                        else
                            extend(child);
                    }
                }
            }
            if (sub == 0) break;
        }
    }
};

} // namespace detail

// Emit exactly one representative per isomorphism class satisfying the
// constraints, together with its canonical graph6 form. Emission order is
// the deterministic generation order; callers wanting canonical order sort
// on the form string.
inline void enumerate_graphs(const CensusConstraints& c,
                             const std::function<void(const Graph&, const std::string&)>& emit) {
    validate_census_constraints(c);
    detail::Enumerator(c, emit).run();
}

inline std::vector<Graph> enumerate_connected(CensusConstraints c) {
    c.require_connected = true;
    std::vector<std::pair<std::string, Graph>> found;
    enumerate_graphs(c, [&](const Graph& g, const std::string& canon) {
        found.emplace_back(canon, g);
    });
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [canon, g] : found) out.push_back(g);
    return out;
}

// ---- census: double-col-critical graphs with colouring number 5 ----------

struct Dcc5Hit {
    std::string canonical_g6;
    Graph graph;
    ClassLabel label;
};

struct Dcc5Row {
    int n = 0;
    long long graphs_enumerated = 0;
    std::vector<Dcc5Hit> hits;
};

// For each order 5..n_max, enumerate connected graphs with minimum degree 4
// (double-col-criticality forces delta = col - 1 = 4, so nothing is lost)
// and report every double-col-critical graph with colouring number 5,
// classified against the reference constructions. classify_dcc5 throws if a
// hit matches no reference, so a counterexample cannot slip through quietly.
inline std::vector<Dcc5Row> census_dcc5(int n_max) {
    int limit = guarded_limit(10);
    if (n_max < 5 || n_max > limit)
        throw std::invalid_argument("census_dcc5: n_max must be between 5 and " +
                                    std::to_string(limit));
    std::vector<Dcc5Row> rows;
    for (int n = 5; n <= n_max; ++n) {
        Dcc5Row row;
        row.n = n;
        CensusConstraints c;
        c.n = n;
        c.min_degree = 4;
        enumerate_graphs(c, [&](const Graph& g, const std::string& canon) {
            ++row.graphs_enumerated;
            if (colouring_number(g) == 5 && is_double_col_critical(g))
                row.hits.push_back({canon, g, classify_dcc5(g)});
        });
        std::sort(row.hits.begin(), row.hits.end(), [](const Dcc5Hit& a, const Dcc5Hit& b) {
            return a.canonical_g6 < b.canonical_g6;
        });
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- census: edge bound for critical graphs with colouring number 4 ------

struct Col4BoundRow {
    std::string canonical_g6;
    Graph graph;
    int dcc_count = 0;
    int m = 0;
    bool is_extremal = false; // dcc_count == m/2 exactly
};

// Enumerate connected graphs with minimum degree 3 (criticality at col 4
// forces delta = 3), keep the non-complete col-critical ones with colouring
// number 4, and verify that at most half of the edges are double-col-critical.
// A bound violation is a hard failure, not a row.
inline std::vector<Col4BoundRow> census_col4_edge_bound(int n_max) {
    int limit = guarded_limit(8);
    if (n_max < 4 || n_max > limit)
        throw std::invalid_argument("census_col4_edge_bound: n_max must be between 4 and " +
                                    std::to_string(limit));
    std::vector<Col4BoundRow> rows;
    for (int n = 4; n <= n_max; ++n) {
        CensusConstraints c;
        c.n = n;
        c.min_degree = 3;
        std::vector<Col4BoundRow> batch;
        enumerate_graphs(c, [&](const Graph& g, const std::string& canon) {
            int nn = g.vertex_count();
            if (g.edge_count() == nn * (nn - 1) / 2) return; // complete
            if (colouring_number(g) != 4 || !is_col_critical(g)) return;
            int dcc = static_cast<int>(double_col_critical_edges(g).size());
            int m = g.edge_count();
            if (2 * dcc > m)
                throw std::logic_error(
                    "census_col4_edge_bound: edge bound violated by " + canon);
            batch.push_back({canon, g, dcc, m, 2 * dcc == m});
        });
        std::sort(batch.begin(), batch.end(), [](const Col4BoundRow& a, const Col4BoundRow& b) {
            return a.canonical_g6 < b.canonical_g6;
        });
        rows.insert(rows.end(), batch.begin(), batch.end());
    }
    return rows;
}

// ---- property sweep -------------------------------------------------------

struct SweepViolation {
    std::string graph6;
    std::string property;
};

struct SweepReport {
    long long graphs_checked = 0;
    std::vector<SweepViolation> violations;
};

// Check every structural invariant the library relies on against one graph
// and its (possibly externally supplied) criticality report. The report's
// claims are used as hypotheses and tested against facts recomputed from the
// graph, so a mislabelled report is detected rather than trusted. Returns
// the violated properties; empty means clean.
inline std::vector<std::string> check_criticality_invariants(const Graph& g,
                                                             const CriticalityReport& r) {
    std::vector<std::string> bad;
    int n = g.vertex_count();
    if (n == 0) return bad;

    int col = colouring_number(g);
    DegreeProfile prof = degree_profile(g);
    bool complete_graph = g.edge_count() == n * (n - 1) / 2;

    // report consistency against recomputation
    if (r.col != col) bad.push_back("report col differs from recomputation");
    if (r.is_col_critical != is_col_critical(g))
        bad.push_back("report col_critical flag differs from recomputation");
    if (r.is_col_vertex_critical != is_col_vertex_critical(g))
        bad.push_back("report col_vertex_critical flag differs from recomputation");
    if (r.dcc_edges != double_col_critical_edges(g))
        bad.push_back("report double-col-critical edge set differs from recomputation");
    if (r.is_double_col_critical != is_double_col_critical(g))
        bad.push_back("report double_col_critical flag differs from recomputation");

    // deleting a single vertex or edge keeps col or drops it by exactly one
    for (int v = 0; v < n; ++v) {
        int cv = colouring_number(delete_vertex(g, v));
        if (cv > col || cv < col - 1) {
            bad.push_back("single vertex deletion changed col by more than one");
            break;
        }
    }
    for (const Edge& e : g.edges()) {
        int ce = colouring_number(delete_edge(g, e.u, e.v));
        if (ce > col || ce < col - 1) {
            bad.push_back("single edge deletion changed col by more than one");
            break;
        }
    }

    // critical graphs sit exactly at col = min degree + 1
    if ((r.is_col_critical || r.is_col_vertex_critical) && col != prof.min_degree + 1)
        bad.push_back("critical graph with col != min degree + 1");

    if (r.is_double_col_critical) {
        if (!r.is_col_vertex_critical)
            bad.push_back("double-col-critical graph not col-vertex-critical");
        if (prof.min_degree != col - 1)
            bad.push_back("double-col-critical graph with min degree != col - 1");
        if (col <= 4 && !(complete_graph && n == col))
            bad.push_back("double-col-critical graph with col <= 4 that is not the complete "
                          "graph of order col");
        // Both ends of an edge must share a minimum-degree neighbour. A third
        // vertex has to exist for that: the one-edge complete graph is
        // double-col-critical with nobody left to be the common neighbour,
        // so the check starts at three vertices.
        if (n >= 3) {
            for (const Edge& e : g.edges()) {
                std::uint64_t common = g.neighbour_mask(e.u) & g.neighbour_mask(e.v);
                bool found = false;
                for (std::uint64_t m = common; m; m &= m - 1)
                    if (g.degree(std::countr_zero(m)) == prof.min_degree) {
                        found = true;
                        break;
                    }
                if (!found) {
                    bad.push_back("adjacent pair without a common neighbour of minimum degree");
                    break;
                }
            }
        }
        if (!complete_graph && col >= 2 && has_clique(g, col - 1))
            bad.push_back("non-complete double-col-critical graph containing a clique of "
                          "order col - 1");
        if (col >= 3 && !is_two_connected(g))
            bad.push_back("double-col-critical graph with col >= 3 not 2-connected");
        if (col == 5) {
            if (prof.min_degree != 4)
                bad.push_back("col-5 double-col-critical graph without min degree 4");
            for (const Edge& e : g.edges()) {
                if (g.degree(e.u) != 4 && g.degree(e.v) != 4) {
                    bad.push_back("col-5 edge with no endpoint of degree 4");
                    break;
                }
            }
            for (const Edge& e : g.edges()) {
                std::uint64_t common = g.neighbour_mask(e.u) & g.neighbour_mask(e.v);
                bool found = false;
                for (std::uint64_t m = common; m; m &= m - 1)
                    if (g.degree(std::countr_zero(m)) == 4) {
                        found = true;
                        break;
                    }
                if (!found) {
                    bad.push_back("col-5 adjacent pair without a common degree-4 neighbour");
                    break;
                }
            }
            // after deleting both ends of any edge, no induced subgraph may
            // have min degree >= 3; equivalently col of the remainder is <= 3
            for (const Edge& e : g.edges()) {
                Graph rest = delete_vertices(g, std::vector<int>{e.u, e.v});
                if (colouring_number(rest) > 3) {
                    bad.push_back("col-5 pair deletion leaves an induced subgraph of min "
                                  "degree 3");
                    break;
                }
            }
        }
    }

    // in a non-complete critical graph with col 4, the double-col-critical
    // edges pairwise share an endpoint
    if (col == 4 && r.is_col_critical && !complete_graph) {
        const auto& d = r.dcc_edges;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (d[i].u != d[j].u && d[i].u != d[j].v && d[i].v != d[j].u &&
                    d[i].v != d[j].v) {
                    bad.push_back("col-4 critical graph with two disjoint "
                                  "double-col-critical edges");
                    i = d.size();
                    break;
                }
    }

    return bad;
}

inline void sweep_graph(const Graph& g, SweepReport& rep) {
    ++rep.graphs_checked;
    CriticalityReport r = criticality_report(g);
    for (std::string& p : check_criticality_invariants(g, r))
        rep.violations.push_back({to_graph6(g), std::move(p)});
}

inline SweepReport sweep_graphs(const std::vector<Graph>& graphs) {
    SweepReport rep;
    for (const Graph& g : graphs) sweep_graph(g, rep);
    return rep;
}

// Run the full invariant battery over every connected graph with up to n_max
// vertices. Any violation is a counterexample to a proved statement, so the
// expected outcome is always an empty violation list.
inline SweepReport property_sweep(int n_max) {
    int limit = guarded_limit(8);
    if (n_max < 1 || n_max > limit)
        throw std::invalid_argument("property_sweep: n_max must be between 1 and " +
                                    std::to_string(limit));
    SweepReport rep;
    for (int n = 1; n <= n_max; ++n) {
        CensusConstraints c;
        c.n = n;
        enumerate_graphs(c, [&](const Graph& g, const std::string&) { sweep_graph(g, rep); });
    }
    return rep;
}

// ---- ratio threshold ------------------------------------------------------

struct RatioThresholdResult {
    int p = 0;
    Rational epsilon;
    std::optional<int> k;          // least k with ratio > 1 - epsilon, if within cap
    std::optional<Rational> ratio; // the exact ratio at that k
    int search_cap = 0;            // largest k the search may visit
};

// Find the least k >= 4 such that ratio_family(p, k) has a fraction of
// double-col-critical edges strictly above 1 - epsilon. On success the
// witness is verified on the spot: ratio strictly below 1, colouring number
// exactly p, col-critical both via the decomposition prediction (the
// edgeless side is independent and small enough) and by the direct
// predicate. Running past the cap is reported through an empty k, not an
// exception, since a tiny epsilon may legitimately need a graph larger than
// the library supports.
inline RatioThresholdResult find_ratio_threshold(int p, const Rational& epsilon) {
    if (p < 5 || p > 8)
        throw std::invalid_argument("find_ratio_threshold: p must be between 5 and 8");
    if (!(Rational(0, 1) < epsilon))
        throw std::invalid_argument("find_ratio_threshold: epsilon must be positive");

    RatioThresholdResult res;
    res.p = p;
    res.epsilon = epsilon;
    // 2k + (p - 5) vertices must fit in a graph; independent hard cap of 64
    res.search_cap = std::min(64, (Graph::max_vertices - (p - 5)) / 2);
    Rational target = Rational(1, 1) - epsilon;

    for (int k = 4; k <= res.search_cap; ++k) {
        Graph g = ratio_family(p, k);
        CriticalityReport r = criticality_report(g);
        if (!r.dcc_ratio)
            throw std::logic_error("find_ratio_threshold: family member without edges");
        if (!(target < *r.dcc_ratio)) continue;

        if (!(*r.dcc_ratio < Rational(1, 1)))
            throw std::logic_error("find_ratio_threshold: ratio not strictly below 1 at k = " +
                                   std::to_string(k));
        if (r.col != p)
            throw std::logic_error("find_ratio_threshold: col != p at k = " + std::to_string(k));
        if (!r.is_col_critical)
            throw std::logic_error("find_ratio_threshold: witness not col-critical at k = " +
                                   std::to_string(k));
        if (p >= 6) {
            std::vector<int> v1(2 * k), v2(p - 5);
            for (int i = 0; i < 2 * k; ++i) v1[i] = i;
            for (int i = 0; i < p - 5; ++i) v2[i] = 2 * k + i;
            DecompositionMatch dm = check_decomposable_col_critical(g, v1, v2);
            if (dm.kind != DecompositionMatchKind::matches_ii || dm.predicted_col != p)
                throw std::logic_error(
                    "find_ratio_threshold: decomposition prediction failed at k = " +
                    std::to_string(k));
        }
        res.k = k;
        res.ratio = *r.dcc_ratio;
        break;
    }
    return res;
}

} // namespace degencrit
