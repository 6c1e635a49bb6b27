#pragma once

#include <chrono>
#include <cstdint>

#include "modd/graph.hpp"

namespace modd {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;
inline constexpr int kBruteForceMaxVertices = 22;

struct SolverReport {
    int optimum = 0;  // size of the best set found; the true optimum iff `optimal`
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    bool optimal = true;  // false iff the node budget ran out first
};

// Exact double domination number by branch-and-bound over vertex
// inclusion/exclusion in ascending order, include branch first. Prunes on
// the incumbent, on vertices whose closed neighborhood can no longer
// reach two selections, and on the deficiency lower bound
// ceil(deficient / max closed degree). The initial incumbent comes from
// dispatch_bound when the graph is a MOP, else from the full vertex set.
// Requires minimum degree >= 1 (a degree-0 vertex is never double
// dominated). When the budget runs out the best set so far is returned
// with optimal = false.
SolverReport exact_gamma_x2(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// Independent oracle: scans all 2^n subsets keeping the smallest valid
// one. Requires n <= 22 and minimum degree >= 1.
SolverReport brute_force_gamma_x2(const Graph& g);

}  // namespace modd
