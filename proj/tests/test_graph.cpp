#include <doctest.h>

#include <numeric>

#include "modd/generators.hpp"
#include "modd/graph.hpp"
#include "oracles.hpp"

using modd::Graph;
using modd::VertexSet;

TEST_CASE("build_graph accepts simple graphs") {
    Graph k3 = modd::build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    Graph m4 = oracles::mop4();
    CHECK(m4.edge_count() == 2 * m4.vertex_count() - 3);
    CHECK(m4.neighbors(0) == std::vector<int>{1, 2, 3});
}

TEST_CASE("build_graph rejects malformed input") {
    CHECK_THROWS_AS(modd::build_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(modd::build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(modd::build_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(modd::build_graph(2, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(modd::build_graph(0, {}), std::invalid_argument);
}

TEST_CASE("closed_neighborhood") {
    Graph k3 = modd::build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(closed_neighborhood(k3, 0) == VertexSet{0, 1, 2});

    Graph p3 = modd::build_graph(3, {{0, 1}, {1, 2}});
    CHECK(closed_neighborhood(p3, 0) == VertexSet{0, 1});

    Graph c5 = oracles::cycle_graph(5);
    CHECK(closed_neighborhood(c5, 2) == VertexSet{1, 2, 3});

    CHECK_THROWS_AS(closed_neighborhood(k3, 3), std::invalid_argument);
}

TEST_CASE("is_double_dominating on the named examples") {
    Graph k3 = modd::build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_double_dominating(k3, VertexSet{0, 1}));

    Graph c6 = oracles::cycle_graph(6);
    CHECK(is_double_dominating(c6, VertexSet{0, 1, 3, 4}));  // ceil(12/3) = 4 vertices suffice
    CHECK_FALSE(is_double_dominating(c6, VertexSet{0, 3}));

    CHECK_THROWS_AS(is_double_dominating(k3, VertexSet{5}), std::invalid_argument);
}

TEST_CASE("single checker condition matches the two-clause definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = oracles::random_graph(n, 40, rng);
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) members.push_back(v);
        CHECK(is_double_dominating(g, VertexSet(members)) ==
              oracles::naive_double_dominating(g, members));
    }
}

TEST_CASE("every graph with min degree >= 1 is double dominated by V") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 50) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = oracles::random_graph(n, 50, rng);
        if (g.min_degree() < 1) continue;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        CHECK(is_double_dominating(g, VertexSet(all)));
        ++checked;
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = oracles::random_graph(n, 30, rng);
        int total = 0;
        for (int v = 0; v < n; ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("degree_two_vertices") {
    CHECK(degree_two_vertices(modd::generate_fan(6)) == VertexSet{0, 4});
    CHECK(degree_two_vertices(modd::build_graph(3, {{0, 1}, {1, 2}, {2, 0}})) ==
          VertexSet{0, 1, 2});
    // family U, k=2: the two added vertices are the only degree-2 ones
    CHECK(degree_two_vertices(modd::generate_family_u(2)) == VertexSet{4, 5});
}

TEST_CASE("triangle listing") {
    CHECK(modd::triangles(modd::build_graph(3, {{0, 1}, {1, 2}, {2, 0}})) ==
          std::vector<std::array<int, 3>>{{0, 1, 2}});
    CHECK(modd::triangles(oracles::cycle_graph(6)).empty());
    CHECK(modd::triangles(modd::generate_fan(6)).size() == 4);  // n - 2 faces
}
