#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modd {

// Thrown when an algorithm's own output fails one of its guaranteed
// invariants (e.g. a bound-certified set that does not validate).
// Distinct from std::invalid_argument, which flags bad caller input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Undirected simple graph on dense vertices 0..n-1.
// Neighbor lists are kept sorted; instances are immutable after construction.
class Graph {
public:
    // Validates simplicity: rejects self-loops, duplicate edges and
    // out-of-range endpoints. Requires n >= 1.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }
    bool has_edge(int u, int v) const;

    int min_degree() const;
    int max_degree() const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                        std::to_string(n_) + ")");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Set of vertices with ascending iteration order.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> members) : VertexSet(std::vector<int>(members)) {}
    explicit VertexSet(std::vector<int> members);

    bool contains(int v) const;
    void insert(int v);
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    const std::vector<int>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<int> members_;  // sorted, unique
};

enum class Method {
    Peel3Color,
    Rainbow4Color,
    DegreeAtLeast3,
    Dispatch,
    Exact,
};

std::string method_name(Method m);

// A double dominating set together with the method that produced it and,
// when the method certifies one, the bound it is guaranteed to meet.
struct DominationResult {
    VertexSet set;
    Method method = Method::Exact;
    std::optional<int> claimed_bound;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// N[v] = {v} plus the neighbors of v.
VertexSet closed_neighborhood(const Graph& g, int v);

// True iff |N[v] & s| >= 2 for every vertex v. A member of s counts itself
// once, so it needs one selected neighbor; a non-member needs two.
bool is_double_dominating(const Graph& g, const VertexSet& s);

VertexSet degree_two_vertices(const Graph& g);

// All 3-cliques, each as an ascending triple, sorted lexicographically.
// In a maximal outerplane graph these are exactly the inner faces: no
// vertex or edge can lie inside a triangle when every vertex is on the
// outer boundary.
std::vector<std::array<int, 3>> triangles(const Graph& g);

}  // namespace modd
