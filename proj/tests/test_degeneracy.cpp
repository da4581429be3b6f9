#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "degencrit/degeneracy.hpp"
#include "degencrit/families.hpp"

using namespace degencrit;

namespace {

// Certificate soundness: walking the order, each vertex must have at most
// removal_degree[i] neighbours later in the order, and col = 1 + max of those.
void check_certificate(const Graph& g) {
    DegeneracyCertificate cert = degeneracy_ordering(g);
    int n = g.vertex_count();
    REQUIRE(static_cast<int>(cert.order.size()) == n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int worst = 0;
    for (int i = 0; i < n; ++i) {
        int v = cert.order[static_cast<std::size_t>(i)];
        REQUIRE_FALSE(seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = 1;
        int later = 0;
        for (int w : g.neighbours(v))
            if (!seen[static_cast<std::size_t>(w)]) ++later;
        CHECK(later == cert.removal_degree[static_cast<std::size_t>(i)]);
        worst = std::max(worst, later);
    }
    CHECK(cert.col == (n == 0 ? 0 : worst + 1));
    CHECK(cert.col == colouring_number(g));
}

} // namespace

TEST_CASE("colouring number of the named families") {
    CHECK(colouring_number(Graph::from_edge_list(0, {})) == 0);
    CHECK(colouring_number(edgeless(1)) == 1);
    CHECK(colouring_number(edgeless(5)) == 1);
    CHECK(colouring_number(path(5)) == 2);
    CHECK(colouring_number(cycle(7)) == 3);
    CHECK(colouring_number(complete(6)) == 6);
    CHECK(colouring_number(cycle_square(6)) == 5);
    CHECK(colouring_number(cycle_square(9)) == 5);
    CHECK(colouring_number(wheel(7)) == 4);
    // each brick alone peels away from its three degree-2 attachment vertices
    CHECK(colouring_number(brick(BrickKind::K5_NABLA)) == 3);
    CHECK(colouring_number(brick(BrickKind::K222_NABLA)) == 3);
    CHECK(colouring_number(glued_pair(BrickKind::K5_NABLA, BrickKind::K222_NABLA)) == 5);
    CHECK(colouring_number(f_graph(5)) == 5);
    CHECK(colouring_number(icosahedron()) == 6);
    CHECK(colouring_number(toroidal_triangulated(4, 4)) == 7);
}

TEST_CASE("degeneracy certificates are internally consistent") {
    for (const Graph& g : {complete(1), path(4), cycle(5), complete(6), wheel(6),
                           cycle_square(8), icosahedron(), f_graph(6),
                           Graph::from_edge_list(0, {}),
                           Graph::from_edge_list(5, {{0, 1}, {2, 3}})})
        check_certificate(g);
}

TEST_CASE("three evaluation routes agree on every graph with up to five vertices") {
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < pairs; ++i)
                if (mask & (1ULL << i)) edges.push_back(all[static_cast<std::size_t>(i)]);
            Graph g = Graph::from_edge_list(n, edges);
            int fast = colouring_number(g);
            CHECK(fast == colouring_number_bruteforce(g));
            CHECK(fast == colouring_number_subset_sweep(g));
        }
    }
}

TEST_CASE("brute-force routes enforce their size caps") {
    CHECK_THROWS_AS(colouring_number_bruteforce(edgeless(bruteforce_cap + 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(colouring_number_subset_sweep(edgeless(subset_sweep_cap + 1)),
                    std::invalid_argument);
    CHECK_NOTHROW(colouring_number_bruteforce(edgeless(bruteforce_cap)));
    CHECK_NOTHROW(colouring_number_subset_sweep(edgeless(subset_sweep_cap)));
}

TEST_CASE("max min-degree witness is a genuine witness") {
    for (const Graph& g : {cycle(6), wheel(5), cycle_square(7), icosahedron(), complete(4)}) {
        MinDegreeWitness w = max_min_degree_witness(g);
        CHECK(w.k + 1 == colouring_number(g));
        Graph sub = induced_subgraph(g, w.vertices);
        REQUIRE(sub.vertex_count() > 0);
        int min_deg = sub.vertex_count();
        for (int v = 0; v < sub.vertex_count(); ++v) min_deg = std::min(min_deg, sub.degree(v));
        CHECK(min_deg == w.k);
    }
}

TEST_CASE("col-critical subgraph preserves col and is vertex-minimal for it") {
    for (const Graph& g :
         {complete_join(cycle_square(6), complete(2)), wheel(6), f_graph(4)}) {
        Graph h = col_critical_subgraph(g);
        CHECK(colouring_number(h) == colouring_number(g));
        for (int v = 0; v < h.vertex_count(); ++v)
            CHECK(colouring_number(delete_vertex(h, v)) < colouring_number(h));
    }
}

TEST_CASE("greedy colouring along the reverse removal order uses at most col colours") {
    for (const Graph& g : {cycle(5), wheel(7), cycle_square(8), icosahedron(),
                           complete(6), f_graph(5), toroidal_triangulated(3, 4)}) {
        std::vector<int> order = degeneracy_ordering(g).order;
        std::reverse(order.begin(), order.end());
        std::vector<int> colours = greedy_colour_along(g, order); // 1-based
        REQUIRE(static_cast<int>(colours.size()) == g.vertex_count());
        int used = 0;
        for (int c : colours) {
            CHECK(c >= 1);
            used = std::max(used, c);
        }
        CHECK(used <= colouring_number(g));
        for (const Edge& e : g.edges())
            CHECK(colours[static_cast<std::size_t>(e.u)] !=
                  colours[static_cast<std::size_t>(e.v)]);
    }
}
