#include <doctest.h>

#include <set>

#include "modd/generators.hpp"
#include "modd/recognition.hpp"
#include "oracles.hpp"

using modd::Graph;

TEST_CASE("fan generator") {
    Graph k3 = modd::generate_fan(3);
    CHECK(k3 == modd::build_graph(3, {{0, 1}, {0, 2}, {1, 2}}));

    Graph f6 = modd::generate_fan(6);
    CHECK(f6.edge_count() == 9);
    CHECK(modd::degree_two_vertices(f6) == modd::VertexSet{0, 4});

    for (int n = 3; n <= 16; ++n) {
        Graph g = modd::generate_fan(n);
        auto emb = modd::recognize_mop(g);
        REQUIRE(emb);
        CHECK(modd::is_striped(*emb, g));
        if (n >= 4) CHECK(modd::degree_two_vertices(g).size() == 2);
    }
    CHECK_THROWS_AS(modd::generate_fan(2), std::invalid_argument);
}

TEST_CASE("family U generator") {
    Graph u2 = modd::generate_family_u(2);
    CHECK(u2.vertex_count() == 6);
    CHECK(u2.edge_count() == 9);
    REQUIRE(modd::recognize_mop(u2));

    for (int k = 2; k <= 6; ++k) {
        Graph g = modd::generate_family_u(k);
        CHECK(g.vertex_count() == 3 * k);
        auto emb = modd::recognize_mop(g);
        REQUIRE(emb);
        // the added vertices all have degree 2
        for (int i = 0; i < k; ++i) CHECK(g.degree(2 * k + i) == 2);
        // degree-2 count = internal triangles + 2, so t tracks whatever
        // the inner triangulation of the polygon produces
        int t = modd::degree_two_vertices(g).size();
        CHECK(t == static_cast<int>(modd::internal_triangles(*emb, g).size()) + 2);

        // closed neighborhoods of the added vertices are pairwise
        // disjoint, which grounds gamma_x2 >= 2k
        std::set<int> seen;
        for (int i = 0; i < k; ++i) {
            for (int v : modd::closed_neighborhood(g, 2 * k + i)) {
                CHECK(seen.insert(v).second);
            }
        }
    }

    // the random inner triangulation stays a MOP and is reproducible
    for (int k : {2, 4, 6}) {
        Graph a = modd::generate_family_u(k, modd::InnerTriangulation::RandomBinary, 5);
        Graph b = modd::generate_family_u(k, modd::InnerTriangulation::RandomBinary, 5);
        CHECK(a == b);
        CHECK(modd::recognize_mop(a));
        for (int i = 0; i < k; ++i) CHECK(a.degree(2 * k + i) == 2);
    }

    CHECK_THROWS_AS(modd::generate_family_u(1), std::invalid_argument);
}

TEST_CASE("family A generator") {
    Graph a6 = modd::generate_family_a(3);
    CHECK(a6.vertex_count() == 6);
    CHECK(a6.edge_count() == 9);

    for (int q : {3, 5, 7, 9, 11, 13}) {
        Graph g = modd::generate_family_a(q);
        CHECK(g.vertex_count() == 2 * q);
        CHECK(g.vertex_count() % 4 == 2);
        auto emb = modd::recognize_mop(g);
        REQUIRE(emb);
        CHECK(modd::is_striped(*emb, g));

        // exactly two degree-2 vertices: b_1 and one endpoint of the far
        // outer edge a_q b_q (which endpoint depends on q mod 4)
        auto deg2 = modd::degree_two_vertices(g);
        REQUIRE(deg2.size() == 2);
        CHECK(deg2.contains(q));  // b_1
        int far = q % 4 == 3 ? q - 1 : 2 * q - 1;  // a_q or b_q
        CHECK(deg2.contains(far));
    }

    CHECK_THROWS_AS(modd::generate_family_a(2), std::invalid_argument);
    CHECK_THROWS_AS(modd::generate_family_a(4), std::invalid_argument);
    CHECK_THROWS_AS(modd::generate_family_a(1), std::invalid_argument);
}

TEST_CASE("random MOP generator") {
    CHECK(modd::generate_random_mop(3, 123) ==
          modd::build_graph(3, {{0, 1}, {0, 2}, {1, 2}}));

    Graph g = modd::generate_random_mop(8, 42);
    CHECK(g.edge_count() == 13);
    CHECK(modd::recognize_mop(g));

    CHECK(modd::generate_random_mop(9, 5) == modd::generate_random_mop(9, 5));
    CHECK_THROWS_AS(modd::generate_random_mop(2, 0), std::invalid_argument);
}

TEST_CASE("every generated graph is a recognized MOP with matching edges") {
    std::vector<Graph> corpus;
    for (int n = 3; n <= 12; ++n) corpus.push_back(modd::generate_fan(n));
    for (int k = 2; k <= 4; ++k) corpus.push_back(modd::generate_family_u(k));
    for (int q : {3, 5}) corpus.push_back(modd::generate_family_a(q));
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        corpus.push_back(modd::generate_random_mop(4 + static_cast<int>(seed), seed));

    for (const Graph& g : corpus) {
        auto emb = modd::recognize_mop(g);
        REQUIRE(emb);
        auto edges = emb->chords;
        const int n = g.vertex_count();
        for (int i = 0; i < n; ++i) {
            int u = emb->cycle[i], v = emb->cycle[(i + 1) % n];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        CHECK(edges == g.edges());
    }
}

TEST_CASE("generate dispatches on the GenSpec") {
    modd::GenSpec spec;
    spec.family = modd::Family::FamilyA;
    spec.param = 5;
    CHECK(modd::generate(spec) == modd::generate_family_a(5));

    spec.family = modd::Family::RandomMop;
    spec.param = 7;
    spec.seed = 9;
    CHECK(modd::generate(spec) == modd::generate_random_mop(7, 9));
}
