#include <algorithm>
#include <array>

#include <catch2/catch_amalgamated.hpp>

#include "degencrit/canonical.hpp"
#include "degencrit/criticality.hpp"
#include "degencrit/families.hpp"

using namespace degencrit;

TEST_CASE("basic family shapes") {
    CHECK(complete(5).edge_count() == 10);
    CHECK(edgeless(4).edge_count() == 0);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK(path(1).edge_count() == 0);
}

TEST_CASE("squared cycle shapes") {
    for (int n = 5; n <= 9; ++n) {
        Graph g = cycle_square(n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == 2 * n);
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == 4);
    }
    CHECK(are_isomorphic(cycle_square(5), complete(5)));
    CHECK_THROWS_AS(cycle_square(4), std::invalid_argument);
}

TEST_CASE("wheel shapes: hub is the last vertex") {
    for (int n = 3; n <= 7; ++n) {
        Graph g = wheel(n);
        CHECK(g.vertex_count() == n + 1);
        CHECK(g.edge_count() == 2 * n);
        CHECK(g.degree(n) == n);
    }
    CHECK(are_isomorphic(wheel(3), complete(4)));
    CHECK_THROWS_AS(wheel(2), std::invalid_argument);
}

TEST_CASE("brick shapes") {
    Graph k5n = brick(BrickKind::K5_NABLA);
    CHECK(k5n.vertex_count() == 5);
    CHECK(k5n.edge_count() == 7);
    // attachment triple {0,1,2} is pairwise non-adjacent in the brick
    for (int a : brick_attachments())
        for (int b : brick_attachments())
            if (a < b) CHECK_FALSE(k5n.has_edge(a, b));

    Graph k222n = brick(BrickKind::K222_NABLA);
    CHECK(k222n.vertex_count() == 6);
    CHECK(k222n.edge_count() == 9);
    for (int a : brick_attachments())
        for (int b : brick_attachments())
            if (a < b) CHECK_FALSE(k222n.has_edge(a, b));
    // non-attachment vertices of either brick have degree 4
    for (int v = 3; v < k5n.vertex_count(); ++v) CHECK(k5n.degree(v) == 4);
    for (int v = 3; v < k222n.vertex_count(); ++v) CHECK(k222n.degree(v) == 4);
}

TEST_CASE("glued pairs have the expected orders and are attachment-order invariant") {
    Graph gg55 = glued_pair(BrickKind::K5_NABLA, BrickKind::K5_NABLA);
    Graph gg52 = glued_pair(BrickKind::K5_NABLA, BrickKind::K222_NABLA);
    Graph gg22 = glued_pair(BrickKind::K222_NABLA, BrickKind::K222_NABLA);
    CHECK(gg55.vertex_count() == 7);
    CHECK(gg52.vertex_count() == 8);
    CHECK(gg22.vertex_count() == 9);
    CHECK(gg55.edge_count() == 14);
    CHECK(gg52.edge_count() == 16);
    CHECK(gg22.edge_count() == 18);

    // all six ways of matching up the two attachment triples give the same graph
    std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
        CHECK(are_isomorphic(glued_pair(BrickKind::K5_NABLA, BrickKind::K222_NABLA, p), gg52));
        CHECK(are_isomorphic(glued_pair(BrickKind::K222_NABLA, BrickKind::K222_NABLA, p), gg22));
    }
    // glueing is symmetric in its operands
    CHECK(are_isomorphic(glued_pair(BrickKind::K222_NABLA, BrickKind::K5_NABLA), gg52));
    CHECK_THROWS_AS(glued_pair(BrickKind::K5_NABLA, BrickKind::K5_NABLA, {0, 0, 2}),
                    std::invalid_argument);
}

TEST_CASE("f-graphs are 4-regular and critical with exactly two non-dcc edges") {
    for (int k = 4; k <= 8; ++k) {
        Graph g = f_graph(k);
        CHECK(g.vertex_count() == 2 * k);
        CHECK(g.edge_count() == 4 * k);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
        CriticalityReport r = criticality_report(g);
        CHECK(r.col == 5);
        CHECK(r.is_col_critical);
        CHECK_FALSE(r.is_double_col_critical);
        CHECK(r.dcc_edge_count == 4 * k - 2);
        CHECK(*r.dcc_ratio == Rational(4 * k - 2, 4 * k));
    }
    CHECK_THROWS_AS(f_graph(3), std::invalid_argument);
}

TEST_CASE("f-graph on ten vertices: the two exceptional edges are the crossing pair") {
    Graph g = f_graph(5);
    CriticalityReport r = criticality_report(g);
    CHECK(*r.dcc_ratio == Rational(18, 20));
    std::vector<Edge> exceptional;
    for (const Edge& e : g.edges())
        if (std::find(r.dcc_edges.begin(), r.dcc_edges.end(), e) == r.dcc_edges.end())
            exceptional.push_back(e);
    // with v_i = i and u_j = 2k - j: 1-6 is v1-u4 and 4-9 is v4-u1
    CHECK(exceptional == std::vector<Edge>{{1, 6}, {4, 9}});
}

TEST_CASE("icosahedron shape") {
    Graph g = icosahedron();
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 5);
    CHECK(is_two_connected(g));
}

TEST_CASE("triangulated torus shape") {
    Graph g = toroidal_triangulated(4, 4);
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 48);
    for (int v = 0; v < 16; ++v) CHECK(g.degree(v) == 6);
    CHECK_THROWS_AS(toroidal_triangulated(2, 4), std::invalid_argument);
}

TEST_CASE("ratio family joins an f-graph with an edgeless remainder") {
    Graph g = ratio_family(7, 4);
    CHECK(g.vertex_count() == 8 + 2);
    // 4k f-graph edges + the complete join's cross edges
    CHECK(g.edge_count() == 16 + 8 * 2);
    CHECK(are_isomorphic(ratio_family(5, 6), f_graph(6)));
    CHECK_THROWS_AS(ratio_family(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(ratio_family(5, 3), std::invalid_argument);
}
