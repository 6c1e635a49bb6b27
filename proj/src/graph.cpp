#include "modd/graph.hpp"

#include <algorithm>

namespace modd {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.resize(n_);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(n_) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n_; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = n_;  // degree can never exceed n-1
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Peel3Color: return "peel";
        case Method::Rainbow4Color: return "rainbow";
        case Method::DegreeAtLeast3: return "degree";
        case Method::Dispatch: return "dispatch";
        case Method::Exact: return "exact";
    }
    return "?";
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    std::vector<int> members = g.neighbors(v);
    members.push_back(v);
    return VertexSet(std::move(members));
}

bool is_double_dominating(const Graph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    std::vector<char> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("set member " + std::to_string(v) + " out of range");
        in_s[v] = 1;
    }
    for (int v = 0; v < n; ++v) {
        int count = in_s[v];
        for (int u : g.neighbors(v)) {
            if (in_s[u] && ++count >= 2) break;
        }
        if (count < 2) return false;
    }
    return true;
}

VertexSet degree_two_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) out.push_back(v);
    return VertexSet(std::move(out));
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    // Each triangle {a < b < c} is reported once, via edge (a, b) and the
    // common neighbor c > b.
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            const auto& na = g.neighbors(a);
            const auto& nb = g.neighbors(b);
            std::size_t i = 0, j = 0;
            while (i < na.size() && j < nb.size()) {
                if (na[i] < nb[j]) ++i;
                else if (na[i] > nb[j]) ++j;
                else {
                    if (na[i] > b) out.push_back({a, b, na[i]});
                    ++i, ++j;
                }
            }
        }
    }
    return out;
}

}  // namespace modd
