#include "modd/exact.hpp"

#include <algorithm>
#include <bit>

#include "modd/rainbow.hpp"
#include "modd/recognition.hpp"

namespace modd {

namespace {

void require_min_degree_one(const Graph& g) {
    if (g.min_degree() < 1)
        throw std::invalid_argument(
            "graph has an isolated vertex; no double dominating set exists");
}

struct Searcher {
    const Graph& g;
    int n;
    std::uint64_t budget;

    std::vector<std::vector<int>> closed;  // closed neighborhoods, sorted
    std::vector<int> cover;      // selected vertices in N[v]
    std::vector<int> undecided;  // undecided vertices in N[v]
    std::vector<char> chosen;
    int chosen_count = 0;
    int deficient;  // vertices with cover < 2
    int max_closed_degree;

    int best_size;
    std::vector<char> best_set;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    Searcher(const Graph& graph, std::uint64_t node_budget, const VertexSet& incumbent)
        : g(graph), n(graph.vertex_count()), budget(node_budget) {
        closed.resize(n);
        for (int v = 0; v < n; ++v) {
            closed[v] = g.neighbors(v);
            closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
        }
        cover.assign(n, 0);
        undecided.assign(n, 0);
        for (int v = 0; v < n; ++v) undecided[v] = static_cast<int>(closed[v].size());
        chosen.assign(n, 0);
        deficient = n;
        max_closed_degree = g.max_degree() + 1;

        best_size = incumbent.size();
        best_set.assign(n, 0);
        for (int v : incumbent) best_set[v] = 1;
    }

    // Applies the decision for v; returns false when some closed
    // neighborhood can no longer collect two selections.
    bool decide(int v, bool include) {
        if (include) {
            chosen[v] = 1;
            ++chosen_count;
        }
        bool feasible = true;
        for (int u : closed[v]) {
            --undecided[u];
            if (include && ++cover[u] == 2) --deficient;
            if (cover[u] + undecided[u] < 2) feasible = false;
        }
        return feasible;
    }

    void undo(int v, bool include) {
        for (int u : closed[v]) {
            ++undecided[u];
            if (include && cover[u]-- == 2) ++deficient;
        }
        if (include) {
            chosen[v] = 0;
            --chosen_count;
        }
    }

    int lower_bound() const {
        if (deficient == 0) return 0;
        return (deficient + max_closed_degree - 1) / max_closed_degree;
    }

    void search(int v) {
        if (out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (v == n) {
            // infeasible branches were cut when their last neighborhood
            // member was decided, so this is a valid set
            if (chosen_count < best_size) {
                best_size = chosen_count;
                std::copy(chosen.begin(), chosen.end(), best_set.begin());
            }
            return;
        }
        if (chosen_count + lower_bound() >= best_size) return;

        if (decide(v, true)) search(v + 1);
        undo(v, true);
        if (decide(v, false)) search(v + 1);
        undo(v, false);
    }
};

VertexSet initial_incumbent(const Graph& g) {
    if (g.vertex_count() >= 4) {
        if (auto emb = recognize_mop(g)) return dispatch_bound(g).set;
    }
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return VertexSet(std::move(all));
}

}  // namespace

SolverReport exact_gamma_x2(const Graph& g, std::uint64_t node_budget) {
    require_min_degree_one(g);
    auto start = std::chrono::steady_clock::now();

    Searcher searcher(g, node_budget, initial_incumbent(g));
    searcher.search(0);

    SolverReport report;
    report.optimum = searcher.best_size;
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (searcher.best_set[v]) members.push_back(v);
    report.witness = VertexSet(std::move(members));
    report.nodes_explored = searcher.nodes;
    report.optimal = !searcher.out_of_budget;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

SolverReport brute_force_gamma_x2(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kBruteForceMaxVertices)
        throw std::invalid_argument("brute force limited to " +
                                    std::to_string(kBruteForceMaxVertices) + " vertices");
    require_min_degree_one(g);
    auto start = std::chrono::steady_clock::now();

    std::vector<std::uint32_t> closed(n, 0);
    for (int v = 0; v < n; ++v) {
        std::uint32_t mask = 1u << v;
        for (int u : g.neighbors(v)) mask |= 1u << u;
        closed[v] = mask;
    }

    int best_size = n + 1;
    std::uint32_t best_mask = 0;
    const std::uint32_t limit = 1u << n;  // n <= 22
    std::uint64_t examined = 0;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        ++examined;
        if (std::popcount(mask) >= best_size) continue;
        bool valid = true;
        for (int v = 0; v < n && valid; ++v)
            valid = std::popcount(mask & closed[v]) >= 2;
        if (valid) {
            best_size = std::popcount(mask);
            best_mask = mask;
        }
    }
    if (best_size > n) throw InvariantViolation("no double dominating set found");

    SolverReport report;
    report.optimum = best_size;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (best_mask & (1u << v)) members.push_back(v);
    report.witness = VertexSet(std::move(members));
    report.nodes_explored = examined;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace modd
