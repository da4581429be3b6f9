#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degencrit {

// Undirected edge with endpoints normalized so u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Edge: loop endpoints " + std::to_string(a));
        if (a < 0 || b < 0) throw std::invalid_argument("Edge: negative endpoint");
    }

    friend bool operator==(const Edge& x, const Edge& y) { return x.u == y.u && x.v == y.v; }
    friend bool operator<(const Edge& x, const Edge& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    }
};

// Simple undirected graph on vertices 0..n-1, capped at 62 vertices (the graph6
// short-form limit). Adjacency is one bitmask per vertex; immutable once built.
class Graph {
public:
    static constexpr int max_vertices = 62;

    Graph() = default; // the empty graph K0

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        check_order(n);
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
        for (const auto& [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("from_edge_list: endpoint out of range: (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            if (a == b)
                throw std::invalid_argument("from_edge_list: self-loop at " + std::to_string(a));
            adj[static_cast<std::size_t>(a)] |= bit(b); // duplicates collapse
            adj[static_cast<std::size_t>(b)] |= bit(a);
        }
        return Graph(std::move(adj));
    }

    // Builds from per-vertex adjacency masks, validating symmetry and loop-freeness.
    static Graph from_adjacency_masks(std::vector<std::uint64_t> adj) {
        int n = static_cast<int>(adj.size());
        check_order(n);
        std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~0ull : (1ull << n) - 1);
        for (int v = 0; v < n; ++v) {
            if (adj[static_cast<std::size_t>(v)] & ~all)
                throw std::invalid_argument("from_adjacency_masks: stray bits at vertex " +
                                            std::to_string(v));
            if (adj[static_cast<std::size_t>(v)] & bit(v))
                throw std::invalid_argument("from_adjacency_masks: self-loop at " +
                                            std::to_string(v));
            for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if (!(adj[static_cast<std::size_t>(u)] & bit(v)))
                    throw std::invalid_argument("from_adjacency_masks: asymmetric pair (" +
                                                std::to_string(u) + "," + std::to_string(v) + ")");
            }
        }
        return Graph(std::move(adj));
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        int twice = 0;
        for (std::uint64_t m : adj_) twice += std::popcount(m);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[static_cast<std::size_t>(v)]);
    }

    std::uint64_t neighbour_mask(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        for (std::uint64_t m = neighbour_mask(v); m;) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out; // ascending by construction
    }

    // All edges in lexicographic (u,v) order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        int n = vertex_count();
        for (int u = 0; u < n; ++u)
            for (std::uint64_t m = adj_[static_cast<std::size_t>(u)] & ~low_bits(u + 1); m;) {
                out.emplace_back(u, std::countr_zero(m));
                m &= m - 1;
            }
        return out;
    }

    std::uint64_t vertex_mask() const { return low_bits(vertex_count()); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

    static std::uint64_t bit(int v) { return 1ull << v; }
    static std::uint64_t low_bits(int k) { return k >= 64 ? ~0ull : (1ull << k) - 1; }

private:
    explicit Graph(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    static void check_order(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        if (n > max_vertices)
            throw std::invalid_argument("Graph: " + std::to_string(n) + " vertices exceeds cap of " +
                                        std::to_string(max_vertices));
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::uint64_t> adj_;
};

struct DegreeProfile {
    std::vector<int> degrees; // indexed by vertex
    int min_degree;
    int max_degree;
};

inline DegreeProfile degree_profile(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("degree_profile: empty graph");
    DegreeProfile p;
    p.degrees.reserve(static_cast<std::size_t>(n));
    p.min_degree = n;
    p.max_degree = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        p.degrees.push_back(d);
        p.min_degree = std::min(p.min_degree, d);
        p.max_degree = std::max(p.max_degree, d);
    }
    return p;
}

// Induced subgraph on the vertices of `mask`, relabelled to 0..|S|-1 preserving order.
inline Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    if (mask & ~g.vertex_mask())
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> keep;
    for (std::uint64_t m = mask; m;) {
        keep.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    std::vector<std::uint64_t> adj(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::uint64_t row = g.neighbour_mask(keep[i]) & mask;
        for (std::uint64_t m = row; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            std::size_t j = static_cast<std::size_t>(
                std::lower_bound(keep.begin(), keep.end(), u) - keep.begin());
            adj[i] |= Graph::bit(static_cast<int>(j));
        }
    }
    return Graph::from_adjacency_masks(std::move(adj));
}

inline std::uint64_t vertex_set_to_mask(const Graph& g, const std::vector<int>& vs) {
    std::uint64_t mask = 0;
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex set: vertex " + std::to_string(v) +
                                        " out of range");
        if (mask & Graph::bit(v))
            throw std::invalid_argument("vertex set: duplicate vertex " + std::to_string(v));
        mask |= Graph::bit(v);
    }
    return mask;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    return induced_subgraph(g, vertex_set_to_mask(g, vs));
}

inline Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
    return induced_subgraph(g, g.vertex_mask() & ~vertex_set_to_mask(g, vs));
}

inline Graph delete_vertex(const Graph& g, int v) { return delete_vertices(g, {v}); }

inline Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int w = 0; w < g.vertex_count(); ++w) adj.push_back(g.neighbour_mask(w));
    adj[static_cast<std::size_t>(u)] &= ~Graph::bit(v);
    adj[static_cast<std::size_t>(v)] &= ~Graph::bit(u);
    return Graph::from_adjacency_masks(std::move(adj));
}

// Complete join: disjoint copies of g1 and g2 plus every edge between them.
// Vertices of g1 keep their labels; vertices of g2 are shifted by n(g1).
inline Graph complete_join(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count();
    int n2 = g2.vertex_count();
    if (n1 + n2 > Graph::max_vertices)
        throw std::invalid_argument("complete_join: result exceeds vertex cap");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n1 + n2), 0);
    std::uint64_t left = Graph::low_bits(n1);
    std::uint64_t right = Graph::low_bits(n1 + n2) & ~left;
    for (int v = 0; v < n1; ++v)
        adj[static_cast<std::size_t>(v)] = g1.neighbour_mask(v) | right;
    for (int v = 0; v < n2; ++v)
        adj[static_cast<std::size_t>(n1 + v)] = (g2.neighbour_mask(v) << n1) | left;
    return Graph::from_adjacency_masks(std::move(adj));
}

// Graph square: join every pair at distance exactly 2.
inline Graph square(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint64_t two = 0;
        for (std::uint64_t m = g.neighbour_mask(v); m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            two |= g.neighbour_mask(u);
        }
        adj.push_back((g.neighbour_mask(v) | two) & ~Graph::bit(v));
    }
    return Graph::from_adjacency_masks(std::move(adj));
}

namespace detail {

// Vertices of `inside` reachable from `start`, as a mask. `start` must lie in `inside`.
inline std::uint64_t reach(const Graph& g, int start, std::uint64_t inside) {
    std::uint64_t seen = Graph::bit(start);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= g.neighbour_mask(v) & inside;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline bool connected_within(const Graph& g, std::uint64_t inside) {
    if (inside == 0) return true;
    int start = std::countr_zero(inside);
    return reach(g, start, inside) == inside;
}

} // namespace detail

// K0 counts as connected (vacuously); it is never 2-connected.
inline bool is_connected(const Graph& g) {
    return detail::connected_within(g, g.vertex_mask());
}

inline bool is_two_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (!detail::connected_within(g, g.vertex_mask() & ~Graph::bit(v))) return false;
    return true;
}

namespace detail {

inline bool clique_search(const Graph& g, std::uint64_t candidates, int need) {
    if (need == 0) return true;
    while (candidates) {
        if (std::popcount(candidates) < need) return false;
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (clique_search(g, candidates & g.neighbour_mask(v), need - 1)) return true;
    }
    return false;
}

} // namespace detail

// Whether g contains a clique on k vertices (k >= 1).
inline bool has_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("has_clique: k must be at least 1");
    if (k > g.vertex_count()) return false;
    // Vertices of degree < k-1 can never be in a k-clique.
    std::uint64_t candidates = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= k - 1) candidates |= Graph::bit(v);
    return detail::clique_search(g, candidates, k);
}

} // namespace degencrit
