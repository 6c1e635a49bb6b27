#include <doctest.h>

#include "modd/exact.hpp"
#include "modd/generators.hpp"
#include "modd/rainbow.hpp"
#include "modd/recognition.hpp"
#include "oracles.hpp"

using modd::Graph;

TEST_CASE("cycle formula: gamma_x2(C_n) = ceil(2n/3)") {
    for (int n = 3; n <= 12; ++n) {
        auto report = modd::exact_gamma_x2(oracles::cycle_graph(n));
        CHECK(report.optimal);
        CHECK(report.optimum == (2 * n + 2) / 3);
        CHECK(is_double_dominating(oracles::cycle_graph(n), report.witness));
    }
}

TEST_CASE("family U is tight for the 2n/3 bound") {
    // k = 1 degenerates to K3
    Graph k3 = modd::build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(modd::exact_gamma_x2(k3).optimum == 2);
    for (int k = 2; k <= 6; ++k) {
        Graph g = modd::generate_family_u(k);
        CHECK(modd::exact_gamma_x2(g).optimum == 2 * k);
    }
}

TEST_CASE("family A matches n/2 + 1") {
    for (int q : {3, 5, 7, 9}) {
        Graph g = modd::generate_family_a(q);
        CHECK(modd::exact_gamma_x2(g).optimum == q + 1);  // n/2 + 1 with n = 2q
    }
}

TEST_CASE("brute force on the tiny examples") {
    Graph k3 = modd::build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(modd::brute_force_gamma_x2(k3).optimum == 2);

    auto m4 = modd::brute_force_gamma_x2(oracles::mop4());
    CHECK(m4.optimum == 2);
    CHECK(m4.witness == modd::VertexSet{0, 2});  // the chord double dominates everything

    Graph f6 = modd::generate_fan(6);
    CHECK(modd::brute_force_gamma_x2(f6).optimum == modd::exact_gamma_x2(f6).optimum);
    CHECK(modd::exact_gamma_x2(f6).optimum == 3);
}

TEST_CASE("solvers agree with each other and with the subset oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = modd::generate_random_mop(n, rng());
        auto bb = modd::exact_gamma_x2(g);
        auto brute = modd::brute_force_gamma_x2(g);
        CHECK(bb.optimum == brute.optimum);
        CHECK(bb.optimum == oracles::naive_gamma_x2(g).value());
        CHECK(is_double_dominating(g, bb.witness));
        CHECK(is_double_dominating(g, brute.witness));
    }
    // also on graphs that are not MOPs
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracles::random_graph(n, 50, rng);
        if (g.min_degree() < 1) continue;
        CHECK(modd::exact_gamma_x2(g).optimum == modd::brute_force_gamma_x2(g).optimum);
    }
}

TEST_CASE("sandwich: exact <= heuristic size <= claimed bound") {
    for (int n = 4; n <= 13; ++n)
        for (std::uint64_t seed = 40; seed < 43; ++seed) {
            Graph g = modd::generate_random_mop(n, seed);
            int exact = modd::exact_gamma_x2(g).optimum;
            CHECK(exact >= 2);
            auto dispatch = modd::dispatch_bound(g);
            CHECK(exact <= dispatch.set.size());
            CHECK(dispatch.set.size() <= *dispatch.claimed_bound);
        }
}

TEST_CASE("witnesses are not over-sized: dropping any vertex breaks validity") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        Graph g = modd::generate_random_mop(n, rng());
        auto witness = modd::exact_gamma_x2(g).witness;
        for (int drop : witness) {
            std::vector<int> rest;
            for (int v : witness)
                if (v != drop) rest.push_back(v);
            CHECK_FALSE(is_double_dominating(g, modd::VertexSet(rest)));
        }
    }
}

TEST_CASE("a cycle optimum lifts onto the outer cycle of any MOP") {
    for (int n = 4; n <= 13; ++n)
        for (std::uint64_t seed = 50; seed < 53; ++seed) {
            Graph g = modd::generate_random_mop(n, seed);
            auto emb = modd::recognize_mop(g);
            REQUIRE(emb);
            auto cycle_opt = modd::brute_force_gamma_x2(oracles::cycle_graph(n));
            std::vector<int> lifted;
            for (int p : cycle_opt.witness) lifted.push_back(emb->cycle[p]);
            CHECK(is_double_dominating(g, modd::VertexSet(lifted)));
            CHECK(modd::exact_gamma_x2(g).optimum <= (2 * n + 2) / 3);
        }
}

TEST_CASE("budget exhaustion returns the incumbent flagged non-optimal") {
    Graph g = modd::generate_random_mop(14, 99);
    auto report = modd::exact_gamma_x2(g, 5);
    CHECK_FALSE(report.optimal);
    CHECK(is_double_dominating(g, report.witness));
    CHECK(report.optimum == report.witness.size());
    CHECK(report.nodes_explored >= 5);
}

TEST_CASE("solver preconditions") {
    CHECK_THROWS_AS(modd::exact_gamma_x2(modd::build_graph(2, {})), std::invalid_argument);
    CHECK_THROWS_AS(modd::brute_force_gamma_x2(modd::build_graph(2, {})), std::invalid_argument);

    std::vector<std::pair<int, int>> big_cycle;
    for (int i = 0; i < 23; ++i) big_cycle.emplace_back(i, (i + 1) % 23);
    CHECK_THROWS_AS(modd::brute_force_gamma_x2(modd::build_graph(23, big_cycle)),
                    std::invalid_argument);
}

TEST_CASE("solver runs are deterministic") {
    Graph g = modd::generate_random_mop(12, 7);
    auto first = modd::exact_gamma_x2(g);
    auto second = modd::exact_gamma_x2(g);
    CHECK(first.optimum == second.optimum);
    CHECK(first.witness == second.witness);
    CHECK(first.nodes_explored == second.nodes_explored);
}
