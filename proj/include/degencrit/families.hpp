#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace degencrit {

enum class BasicKind { complete, edgeless, cycle, path };

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph edgeless(int n) { return Graph::from_edge_list(n, {}); }

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

inline Graph basic(BasicKind kind, int n) {
    switch (kind) {
        case BasicKind::complete: return complete(n);
        case BasicKind::edgeless: return edgeless(n);
        case BasicKind::cycle: return cycle(n);
        case BasicKind::path: return path(n);
    }
    throw std::invalid_argument("basic: unknown kind");
}

// Square of C_n; 4-regular for n >= 5, and K5 exactly when n = 5.
inline Graph cycle_square(int n) {
    if (n < 5) throw std::invalid_argument("cycle_square: need n >= 5, got " + std::to_string(n));
    return square(cycle(n));
}

// C_n joined with a single hub; the hub gets index n.
inline Graph wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel: need n >= 3, got " + std::to_string(n));
    return complete_join(cycle(n), complete(1));
}

enum class BrickKind { K5_NABLA, K222_NABLA };

// Attachment vertices of either brick, by construction: the degree-2 triple.
inline const std::vector<int>& brick_attachments() {
    static const std::vector<int> att{0, 1, 2};
    return att;
}

// K5▽ is K5 minus the triangle on {0,1,2}; K2,2,2▽ is the octahedron
// (K6 minus the perfect matching {0-3, 1-4, 2-5}) minus the triangle on {0,1,2}.
// Either way the attachments {0,1,2} end up pairwise nonadjacent with degree 2.
inline Graph brick(BrickKind kind) {
    auto drop_triangle = [](std::vector<std::pair<int, int>> edges) {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : edges)
            if (!(u < 3 && v < 3)) out.push_back({u, v});
        return out;
    };
    if (kind == BrickKind::K5_NABLA) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
        return Graph::from_edge_list(5, drop_triangle(std::move(edges)));
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) edges.emplace_back(u, v);
    return Graph::from_edge_list(6, drop_triangle(std::move(edges)));
}

// Union of two bricks with their attachment triples identified: attachment i
// of b is merged with attachment attach_map[i] of a. All six identification
// bijections give isomorphic results (the attachments are symmetric in each
// brick); tests check that once, everything else uses the identity.
inline Graph glued_pair(BrickKind a, BrickKind b, std::array<int, 3> attach_map = {0, 1, 2}) {
    {
        std::array<int, 3> sorted = attach_map;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2})
            throw std::invalid_argument("glued_pair: attach_map must permute {0,1,2}");
    }
    Graph ga = brick(a);
    Graph gb = brick(b);
    int na = ga.vertex_count();
    int n = na + gb.vertex_count() - 3;
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : ga.edges()) edges.emplace_back(e.u, e.v);
    auto relabel = [na, &attach_map](int v) { return v < 3 ? attach_map[v] : na + (v - 3); };
    for (const Edge& e : gb.edges()) edges.emplace_back(relabel(e.u), relabel(e.v));
    return Graph::from_edge_list(n, edges);
}

// F_k: take the square of the 2k-cycle D_k labelled cyclically
// v0 v1 ... v_k u_{k-1} ... u_1 (so v_i = i and u_j = 2k - j), remove the two
// distance-2 edges u1v1 and u_{k-1}v_{k-1}, and add the cross pair u1v_{k-1}
// and v1u_{k-1}. That keeps the graph 4-regular with 4k edges for every k >= 4.
// (The cross pair is the only choice that works for all k: the straight pair
// v1v_{k-1}, u1u_{k-1} already lies in the square when k = 4.)
inline Graph f_graph(int k) {
    if (k < 4) throw std::invalid_argument("f_graph: need k >= 4, got " + std::to_string(k));
    int n = 2 * k;
    const int v1 = 1, vk1 = k - 1, uk1 = k + 1, u1 = 2 * k - 1;
    Graph sq = square(cycle(n));
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : sq.edges()) {
        if ((e.u == v1 && e.v == u1) || (e.u == vk1 && e.v == uk1)) continue;
        edges.emplace_back(e.u, e.v);
    }
    edges.emplace_back(v1, uk1);
    edges.emplace_back(vk1, u1);
    return Graph::from_edge_list(n, edges);
}

// The icosahedral graph as a fixed edge list: apex 0, upper five-ring 1..5,
// lower five-ring 6..10, apex 11.
inline Graph icosahedron() {
    static const std::vector<std::pair<int, int>> edges{
        {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},
        {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},
        {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6},
        {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10},
        {1, 6},  {1, 7},  {2, 7},  {2, 8},  {3, 8},
        {3, 9},  {4, 9},  {4, 10}, {5, 10}, {5, 6}};
    return Graph::from_edge_list(12, edges);
}

// Triangulated grid on the torus: vertex (i,j) -> i*cols + j, joined to its
// right, lower, and lower-right neighbours (all indices cyclic). 6-regular.
inline Graph toroidal_triangulated(int rows, int cols) {
    if (rows < 3 || cols < 3)
        throw std::invalid_argument("toroidal_triangulated: need rows, cols >= 3");
    auto id = [cols](int i, int j) { return i * cols + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int ni = (i + 1) % rows;
            int nj = (j + 1) % cols;
            edges.emplace_back(id(i, j), id(i, nj));
            edges.emplace_back(id(i, j), id(ni, j));
            edges.emplace_back(id(i, j), id(ni, nj));
        }
    return Graph::from_edge_list(rows * cols, edges);
}

// Complete join of F_k with p-5 isolated vertices; p = 5 gives F_k itself.
inline Graph ratio_family(int p, int k) {
    if (p < 5) throw std::invalid_argument("ratio_family: need p >= 5, got " + std::to_string(p));
    if (k < 4) throw std::invalid_argument("ratio_family: need k >= 4, got " + std::to_string(k));
    return complete_join(f_graph(k), edgeless(p - 5));
}

} // namespace degencrit
