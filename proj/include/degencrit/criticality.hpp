#pragma once

#include <optional>
#include <vector>

#include "degeneracy.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace degencrit {

// col-critical: deleting any single vertex or edge lowers the colouring number.
// By monotonicity this is equivalent to every proper subgraph having smaller col
// (any proper subgraph sits inside a one-deletion subgraph); the test suite
// certifies that equivalence against an all-subgraph sweep on small graphs.
// The empty graph has no proper subgraphs, so it passes vacuously.
inline bool is_col_critical(const Graph& g) {
    int c = colouring_number(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (colouring_number(delete_vertex(g, v)) >= c) return false;
    for (const Edge& e : g.edges())
        if (colouring_number(delete_edge(g, e.u, e.v)) >= c) return false;
    return true;
}

// col-vertex-critical: deleting any single vertex lowers the colouring number.
inline bool is_col_vertex_critical(const Graph& g) {
    int c = colouring_number(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (colouring_number(delete_vertex(g, v)) >= c) return false;
    return true;
}

// An edge is double-col-critical if deleting both its endpoints drops the
// colouring number by at least two.
inline bool is_double_col_critical_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("is_double_col_critical_edge: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
    return colouring_number(delete_vertices(g, {u, v})) <= colouring_number(g) - 2;
}

// All double-col-critical edges, in lexicographic order.
inline std::vector<Edge> double_col_critical_edges(const Graph& g) {
    std::vector<Edge> out;
    int c = colouring_number(g);
    for (const Edge& e : g.edges())
        if (colouring_number(delete_vertices(g, {e.u, e.v})) <= c - 2) out.push_back(e);
    return out;
}

// A graph is double-col-critical if it is connected and every edge is a
// double-col-critical edge. Edgeless connected graphs (K0, K1) pass vacuously.
inline bool is_double_col_critical(const Graph& g) {
    if (!is_connected(g)) return false;
    int c = colouring_number(g);
    for (const Edge& e : g.edges())
        if (colouring_number(delete_vertices(g, {e.u, e.v})) > c - 2) return false;
    return true;
}

struct CriticalityReport {
    int col;
    bool is_col_critical;
    bool is_col_vertex_critical;
    std::vector<Edge> dcc_edges;
    int dcc_edge_count;
    int edge_count;
    std::optional<Rational> dcc_ratio; // absent when there are no edges
    bool is_double_col_critical;
    bool is_two_connected;
};

inline CriticalityReport criticality_report(const Graph& g) {
    CriticalityReport r;
    r.col = colouring_number(g);
    r.is_col_critical = is_col_critical(g);
    r.is_col_vertex_critical = is_col_vertex_critical(g);
    r.dcc_edges = double_col_critical_edges(g);
    r.dcc_edge_count = static_cast<int>(r.dcc_edges.size());
    r.edge_count = g.edge_count();
    if (r.edge_count > 0) r.dcc_ratio = Rational(r.dcc_edge_count, r.edge_count);
    r.is_double_col_critical =
        is_connected(g) && r.dcc_edge_count == r.edge_count;
    r.is_two_connected = is_two_connected(g);
    return r;
}

} // namespace degencrit
