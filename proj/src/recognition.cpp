#include "modd/recognition.hpp"

#include <algorithm>
#include <cstdlib>

namespace modd {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

int count_common_neighbors(const Graph& g, int u, int v) {
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) ++i;
        else if (nu[i] > nv[j]) ++j;
        else ++count, ++i, ++j;
    }
    return count;
}

std::vector<int> cycle_positions(const std::vector<int>& cycle) {
    std::vector<int> pos(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);
    return pos;
}

// Chords cross iff their cycle positions strictly interleave.
bool chords_cross(int pa, int pb, int pc, int pd) {
    if (pa > pb) std::swap(pa, pb);
    if (pc > pd) std::swap(pc, pd);
    return (pa < pc && pc < pb && pb < pd) || (pc < pa && pa < pd && pd < pb);
}

bool consecutive_on_cycle(const std::vector<int>& pos, int n, int u, int v) {
    int d = std::abs(pos[u] - pos[v]);
    return d == 1 || d == n - 1;
}

// Checks the chord set against a fixed cycle: n-3 distinct in-graph edges,
// none joining consecutive cycle vertices, pairwise non-crossing.
// Returns a rejection reason, or the empty string when all checks pass.
std::string check_chords(const Graph& g, const std::vector<int>& pos,
                         const std::vector<std::pair<int, int>>& chords) {
    const int n = g.vertex_count();
    if (static_cast<int>(chords.size()) != n - 3)
        return "chord count " + std::to_string(chords.size()) + " != " + std::to_string(n - 3);
    for (auto [u, v] : chords) {
        if (!g.has_edge(u, v)) return "chord " + edge_str(u, v) + " is not an edge of the graph";
        if (consecutive_on_cycle(pos, n, u, v))
            return "chord " + edge_str(u, v) + " joins consecutive cycle vertices";
    }
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if (a == c && b == d) return "duplicate chord " + edge_str(a, b);
            if (chords_cross(pos[a], pos[b], pos[c], pos[d]))
                return "chords " + edge_str(a, b) + " and " + edge_str(c, d) + " cross";
        }
    }
    return {};
}

}  // namespace

Outcome<OuterplaneEmbedding> recognize_mop(const Graph& g) {
    using R = Outcome<OuterplaneEmbedding>;
    const int n = g.vertex_count();
    if (n < 3) return R::reject("only " + std::to_string(n) + " vertices, need at least 3");
    const int m = g.edge_count();
    const int want = 2 * n - 3;
    if (m != want)
        return R::reject("edge count " + std::to_string(m) + " != " + std::to_string(want));
    if (n == 3) return R::accept(OuterplaneEmbedding{{0, 1, 2}, {}});

    // Partition edges by triangle count: outer edges lie in exactly one
    // triangle, chords in exactly two.
    std::vector<std::vector<int>> boundary_nb(n);
    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : g.edges()) {
        int tri = count_common_neighbors(g, u, v);
        if (tri == 1) {
            boundary_nb[u].push_back(v);
            boundary_nb[v].push_back(u);
        } else if (tri == 2) {
            chords.emplace_back(u, v);
        } else {
            return R::reject("edge " + edge_str(u, v) + " lies in " + std::to_string(tri) +
                             " triangles, expected 1 or 2");
        }
    }
    for (int v = 0; v < n; ++v) {
        if (boundary_nb[v].size() != 2)
            return R::reject("vertex " + std::to_string(v) + " is incident to " +
                             std::to_string(boundary_nb[v].size()) +
                             " one-triangle edges, expected 2");
    }

    // Walk the boundary starting at vertex 0 toward its smaller neighbor;
    // the walk itself yields the canonical orientation.
    std::vector<int> cycle;
    cycle.reserve(n);
    std::vector<char> seen(n, 0);
    cycle.push_back(0);
    seen[0] = 1;
    int prev = 0;
    int cur = std::min(boundary_nb[0][0], boundary_nb[0][1]);
    while (cur != 0) {
        if (seen[cur])
            return R::reject("one-triangle edges do not form a Hamiltonian cycle");
        seen[cur] = 1;
        cycle.push_back(cur);
        int next = boundary_nb[cur][0] == prev ? boundary_nb[cur][1] : boundary_nb[cur][0];
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(cycle.size()) != n)
        return R::reject("one-triangle edges do not form a Hamiltonian cycle");

    auto pos = cycle_positions(cycle);
    if (auto why = check_chords(g, pos, chords); !why.empty()) return R::reject(why);
    // chords inherited the lexicographic order of g.edges()
    return R::accept(OuterplaneEmbedding{std::move(cycle), std::move(chords)});
}

Outcome<PeelSequence> recognize_two_tree(const Graph& g) {
    using R = Outcome<PeelSequence>;
    const int n = g.vertex_count();
    if (n < 3) return R::reject("only " + std::to_string(n) + " vertices, need at least 3");
    const int want = 2 * n - 3;  // every 2-tree has exactly 2n-3 edges
    if (g.edge_count() != want)
        return R::reject("edge count " + std::to_string(g.edge_count()) + " != " +
                         std::to_string(want));

    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<PeelStep> steps;
    steps.reserve(n - 3);
    for (int step = 0; step < n - 3; ++step) {
        int picked = -1, a = -1, b = -1;
        for (int v = 0; v < n && picked < 0; ++v) {
            if (!alive[v] || deg[v] != 2) continue;
            int x = -1, y = -1;
            for (int u : g.neighbors(v)) {
                if (!alive[u]) continue;
                if (x < 0) x = u;
                else y = u;
            }
            if (g.has_edge(x, y)) {  // simplicial: the two neighbors are adjacent
                picked = v;
                a = x;
                b = y;
            }
        }
        if (picked < 0)
            return R::reject("no simplicial degree-2 vertex at step " + std::to_string(step));
        alive[picked] = 0;
        --deg[a];
        --deg[b];
        steps.push_back({picked, a, b});  // neighbors ascend, so a < b
    }

    std::array<int, 3> kernel{};
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) kernel[k++] = v;
    if (!g.has_edge(kernel[0], kernel[1]) || !g.has_edge(kernel[0], kernel[2]) ||
        !g.has_edge(kernel[1], kernel[2]))
        return R::reject("kernel {" + std::to_string(kernel[0]) + ", " + std::to_string(kernel[1]) +
                         ", " + std::to_string(kernel[2]) + "} is not a triangle");
    return R::accept(PeelSequence{std::move(steps), kernel});
}

void require_embedding(const Graph& g, const OuterplaneEmbedding& emb) {
    const int n = g.vertex_count();
    auto fail = [](const std::string& why) {
        throw std::invalid_argument("embedding does not match graph: " + why);
    };
    if (n < 3) fail("graph has fewer than 3 vertices");
    if (static_cast<int>(emb.cycle.size()) != n) fail("cycle length != vertex count");
    std::vector<char> seen(n, 0);
    for (int v : emb.cycle) {
        if (v < 0 || v >= n || seen[v]) fail("cycle is not a permutation of the vertices");
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        int u = emb.cycle[i], v = emb.cycle[(i + 1) % n];
        if (!g.has_edge(u, v)) fail("cycle edge " + edge_str(u, v) + " is not in the graph");
    }
    auto pos = cycle_positions(emb.cycle);
    if (auto why = check_chords(g, pos, emb.chords); !why.empty()) fail(why);
    // n cycle edges + n-3 distinct non-cycle chords, all in E, |E| = 2n-3:
    // the embedding covers the whole edge set.
    if (g.edge_count() != 2 * n - 3)
        fail("edge count " + std::to_string(g.edge_count()) + " != " + std::to_string(2 * n - 3));
}

std::vector<std::array<int, 3>> internal_triangles(const OuterplaneEmbedding& emb, const Graph& g) {
    require_embedding(g, emb);
    const int n = g.vertex_count();
    auto faces = triangles(g);
    if (static_cast<int>(faces.size()) != n - 2)
        throw InvariantViolation("embedded graph has " + std::to_string(faces.size()) +
                                 " triangles, expected " + std::to_string(n - 2));
    auto pos = cycle_positions(emb.cycle);
    std::vector<std::array<int, 3>> out;
    for (const auto& f : faces) {
        bool touches_boundary = consecutive_on_cycle(pos, n, f[0], f[1]) ||
                                consecutive_on_cycle(pos, n, f[0], f[2]) ||
                                consecutive_on_cycle(pos, n, f[1], f[2]);
        if (!touches_boundary) out.push_back(f);
    }
    return out;
}

bool is_striped(const OuterplaneEmbedding& emb, const Graph& g) {
    return internal_triangles(emb, g).empty();
}

}  // namespace modd
