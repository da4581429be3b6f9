#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace degencrit {

// Smallest-last elimination record. order[i] is the i-th vertex removed and
// removal_degree[i] its degree among the vertices still present at that step.
// col = 0 for the empty graph, otherwise 1 + max removal degree.
struct DegeneracyCertificate {
    std::vector<int> order;
    std::vector<int> removal_degree;
    int col;
};

// Bucket queue over per-degree bitmasks: O(n + m), and countr_zero picks the
// lowest-indexed vertex among those of minimum degree, so ties are deterministic.
inline DegeneracyCertificate degeneracy_ordering(const Graph& g) {
    int n = g.vertex_count();
    DegeneracyCertificate cert;
    cert.col = 0;
    if (n == 0) return cert;

    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> bucket(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        bucket[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])] |= Graph::bit(v);
    }

    std::uint64_t remaining = g.vertex_mask();
    cert.order.reserve(static_cast<std::size_t>(n));
    cert.removal_degree.reserve(static_cast<std::size_t>(n));
    int cur = 0;
    int maxdeg = 0;
    for (int step = 0; step < n; ++step) {
        while (bucket[static_cast<std::size_t>(cur)] == 0) ++cur;
        int v = std::countr_zero(bucket[static_cast<std::size_t>(cur)]);
        bucket[static_cast<std::size_t>(cur)] &= ~Graph::bit(v);
        remaining &= ~Graph::bit(v);
        cert.order.push_back(v);
        cert.removal_degree.push_back(cur);
        maxdeg = std::max(maxdeg, cur);
        for (std::uint64_t m = g.neighbour_mask(v) & remaining; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            int d = deg[static_cast<std::size_t>(u)];
            bucket[static_cast<std::size_t>(d)] &= ~Graph::bit(u);
            bucket[static_cast<std::size_t>(d - 1)] |= Graph::bit(u);
            deg[static_cast<std::size_t>(u)] = d - 1;
        }
        if (cur > 0) --cur; // a removal lowers neighbour degrees by at most one
    }
    cert.col = 1 + maxdeg;
    return cert;
}

inline int colouring_number(const Graph& g) { return degeneracy_ordering(g).col; }

inline constexpr int bruteforce_cap = 9;

// Literal evaluation of the ordering definition: 1 + the minimum over all vertex
// permutations of the largest back-degree along the permutation.
inline int colouring_number_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    if (n > bruteforce_cap)
        throw std::invalid_argument("colouring_number_bruteforce: " + std::to_string(n) +
                                    " vertices exceeds cap of " + std::to_string(bruteforce_cap));
    if (n == 0) return 0;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = n; // back-degree never reaches n
    do {
        std::uint64_t prefix = 0;
        int worst = 0;
        for (int v : perm) {
            worst = std::max(worst, std::popcount(g.neighbour_mask(v) & prefix));
            if (worst >= best) break;
            prefix |= Graph::bit(v);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return 1 + best;
}

inline constexpr int subset_sweep_cap = 7;

// Third, independent evaluation route: 1 + the maximum over all nonempty
// vertex subsets S of the minimum degree of the induced subgraph on S.
inline int colouring_number_subset_sweep(const Graph& g) {
    int n = g.vertex_count();
    if (n > subset_sweep_cap)
        throw std::invalid_argument("colouring_number_subset_sweep: " + std::to_string(n) +
                                    " vertices exceeds cap of " +
                                    std::to_string(subset_sweep_cap));
    if (n == 0) return 0;

    int best = 0;
    for (std::uint64_t s = 1; s < Graph::bit(n); ++s) {
        int min_deg = n;
        for (std::uint64_t m = s; m; m &= m - 1)
            min_deg = std::min(min_deg,
                               std::popcount(g.neighbour_mask(std::countr_zero(m)) & s));
        best = std::max(best, min_deg);
    }
    return 1 + best;
}

struct MinDegreeWitness {
    int k;                     // col(g) - 1
    std::vector<int> vertices; // induced subgraph on these has minimum degree k
};

// Suffix of the smallest-last order from the first step attaining the maximum
// removal degree; the induced subgraph there has minimum degree exactly col-1.
inline MinDegreeWitness max_min_degree_witness(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("max_min_degree_witness: empty graph");
    DegeneracyCertificate cert = degeneracy_ordering(g);
    int k = cert.col - 1;
    std::size_t i = 0;
    while (cert.removal_degree[i] != k) ++i;
    MinDegreeWitness w;
    w.k = k;
    w.vertices.assign(cert.order.begin() + static_cast<std::ptrdiff_t>(i), cert.order.end());
    std::sort(w.vertices.begin(), w.vertices.end());
    return w;
}

// A subgraph F of g with col(F) = col(g) such that deleting any vertex or edge
// of F lowers its colouring number. Starts from the min-degree witness, then
// greedily deletes vertices (lowest index first), then edges (lexicographic).
inline Graph col_critical_subgraph(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("col_critical_subgraph: empty graph");
    int c = colouring_number(g);
    Graph f = induced_subgraph(g, max_min_degree_witness(g).vertices);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < f.vertex_count(); ++v) {
            Graph trial = delete_vertex(f, v);
            if (colouring_number(trial) == c) {
                f = std::move(trial);
                changed = true;
                break;
            }
        }
    }
    changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : f.edges()) {
            Graph trial = delete_edge(f, e.u, e.v);
            if (colouring_number(trial) == c) {
                f = std::move(trial);
                changed = true;
                break;
            }
        }
    }
    return f;
}

// Greedy colouring along the given order; colours are 1-based, indexed by vertex.
// Along the reverse of a smallest-last removal order this uses at most col(g) colours.
inline std::vector<int> greedy_colour_along(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("greedy_colour_along: order has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("greedy_colour_along: order is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        std::uint64_t used = 0;
        for (std::uint64_t m = g.neighbour_mask(v); m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            int cu = colour[static_cast<std::size_t>(u)];
            if (cu > 0) used |= 1ull << (cu - 1);
        }
        int c = std::countr_one(used) + 1;
        colour[static_cast<std::size_t>(v)] = c;
    }
    return colour;
}

} // namespace degencrit
