#include "modd/generators.hpp"

#include <random>

#include "modd/recognition.hpp"

namespace modd {

namespace {

// Triangulates polygon positions lo..hi (an arc closed by the edge
// hi-lo), appending the split edges that are not polygon sides.
// pick(lo, hi) chooses the apex for the current arc.
template <class Pick>
void triangulate_arc(int lo, int hi, std::vector<std::pair<int, int>>& edges, Pick&& pick) {
    if (hi - lo < 2) return;
    int apex = pick(lo, hi);
    if (apex - lo > 1) edges.emplace_back(lo, apex);
    if (hi - apex > 1) edges.emplace_back(apex, hi);
    triangulate_arc(lo, apex, edges, pick);
    triangulate_arc(apex, hi, edges, pick);
}

std::vector<std::pair<int, int>> polygon_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return edges;
}

}  // namespace

Graph generate_family_u(int k, InnerTriangulation inner, std::optional<std::uint64_t> seed) {
    if (k < 2) throw std::invalid_argument("family U needs k >= 2");
    const int h = 2 * k;  // order of the host polygon H
    auto edges = polygon_cycle(h);

    if (inner == InnerTriangulation::Fan) {
        for (int v = 2; v < h - 1; ++v) edges.emplace_back(0, v);
    } else {
        std::mt19937_64 rng(seed.value_or(0));
        triangulate_arc(0, h - 1, edges, [&](int lo, int hi) {
            return lo + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo - 1));
        });
    }

    // u_i = h + i hangs over the boundary edge (2i, 2i+1)
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(h + i, 2 * i);
        edges.emplace_back(h + i, 2 * i + 1);
    }
    Graph g(3 * k, edges);
    for (int i = 0; i < k; ++i)
        if (g.degree(h + i) != 2)
            throw InvariantViolation("family U added vertex has degree != 2");
    return g;
}

Graph generate_family_a(int q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("family A needs odd q >= 3");
    const int n = 2 * q;
    auto a = [](int i) { return i - 1; };        // a_i, 1-based
    auto b = [q](int i) { return q + i - 1; };   // b_i, 1-based

    std::vector<std::pair<int, int>> edges;
    // outer cycle a_1 .. a_q b_q .. b_1
    for (int i = 1; i < q; ++i) edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(a(q), b(q));
    for (int i = q; i > 1; --i) edges.emplace_back(b(i), b(i - 1));
    edges.emplace_back(b(1), a(1));
    // rungs
    for (int i = 2; i <= q - 1; ++i) edges.emplace_back(a(i), b(i));
    // zig-zag diagonals, period 4: (4j+1,4j+2), (4j+2,4j+3), (4j+4,4j+3),
    // (4j+5,4j+4) as a_x b_y pairs, until an index passes q. The two odd
    // residues q = 1, 3 (mod 4) stop at different points of the block,
    // which reproduces the two explicit edge lists of the construction.
    for (int j = 0;; ++j) {
        const std::pair<int, int> block[4] = {{4 * j + 1, 4 * j + 2},
                                              {4 * j + 2, 4 * j + 3},
                                              {4 * j + 4, 4 * j + 3},
                                              {4 * j + 5, 4 * j + 4}};
        bool past_end = false;
        for (auto [x, y] : block) {
            if (x > q || y > q) {
                past_end = true;
                break;
            }
            edges.emplace_back(a(x), b(y));
        }
        if (past_end) break;
    }

    Graph g(n, edges);
    // The diagonal pattern is transcription-sensitive; refuse to emit a
    // graph that misses the construction's guarantees.
    auto emb = recognize_mop(g);
    if (!emb) throw InvariantViolation("family A output is not a MOP: " + emb.reason());
    if (!is_striped(*emb, g)) throw InvariantViolation("family A output is not striped");
    if (degree_two_vertices(g).size() != 2)
        throw InvariantViolation("family A output does not have exactly two degree-2 vertices");
    return g;
}

Graph generate_fan(int n) {
    if (n < 3) throw std::invalid_argument("fan needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n - 1; ++v) edges.emplace_back(v, v + 1);
    for (int v = 0; v < n - 1; ++v) edges.emplace_back(v, n - 1);
    return Graph(n, edges);
}

Graph generate_random_mop(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random MOP needs n >= 3");
    auto edges = polygon_cycle(n);
    std::mt19937_64 rng(seed);
    triangulate_arc(0, n - 1, edges, [&](int lo, int hi) {
        return lo + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo - 1));
    });
    return Graph(n, edges);
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::FamilyU: return generate_family_u(spec.param, spec.inner, spec.seed);
        case Family::FamilyA: return generate_family_a(spec.param);
        case Family::Fan: return generate_fan(spec.param);
        case Family::RandomMop: return generate_random_mop(spec.param, spec.seed.value_or(0));
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace modd
