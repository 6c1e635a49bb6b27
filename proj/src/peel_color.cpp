#include "modd/peel_color.hpp"

#include <algorithm>
#include <numeric>

namespace modd {

namespace {

// Full validity replay: each step's vertex must have exactly its two
// recorded neighbors alive, and the kernel must be the final triangle.
void require_peel(const Graph& g, const PeelSequence& peel) {
    const int n = g.vertex_count();
    auto fail = [](const std::string& why) {
        throw std::invalid_argument("invalid peel sequence: " + why);
    };
    if (static_cast<int>(peel.steps.size()) != n - 3) fail("step count != n-3");
    std::vector<char> alive(n, 1);
    for (const auto& s : peel.steps) {
        if (s.removed < 0 || s.removed >= n || !alive[s.removed])
            fail("vertex " + std::to_string(s.removed) + " removed twice or out of range");
        int x = -1, y = -1;
        int alive_deg = 0;
        for (int u : g.neighbors(s.removed)) {
            if (!alive[u]) continue;
            ++alive_deg;
            if (x < 0) x = u;
            else y = u;
        }
        if (alive_deg != 2 || x != s.left || y != s.right)
            fail("vertex " + std::to_string(s.removed) +
                 " does not have the recorded neighbor pair at its step");
        if (!g.has_edge(s.left, s.right))
            fail("neighbors of " + std::to_string(s.removed) + " are not adjacent");
        alive[s.removed] = 0;
    }
    std::array<int, 3> kernel{};
    int k = 0;
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        if (k == 3) fail("more than three kernel vertices");
        kernel[k++] = v;
    }
    if (kernel != peel.kernel) fail("kernel does not match the surviving vertices");
    if (!g.has_edge(kernel[0], kernel[1]) || !g.has_edge(kernel[0], kernel[2]) ||
        !g.has_edge(kernel[1], kernel[2]))
        fail("kernel is not a triangle");
}

}  // namespace

Coloring peel_three_coloring(const Graph& g, const PeelSequence& peel) {
    require_peel(g, peel);
    Coloring col;
    col.palette_size = 3;
    col.color_of.assign(g.vertex_count(), -1);
    for (int i = 0; i < 3; ++i) col.color_of[peel.kernel[i]] = i;
    for (auto it = peel.steps.rbegin(); it != peel.steps.rend(); ++it) {
        int cl = col.color_of[it->left];
        int cr = col.color_of[it->right];
        if (cl == cr) throw InvariantViolation("peel coloring produced equal neighbor colors");
        col.color_of[it->removed] = 3 - cl - cr;  // the color both neighbors miss
    }
    return col;
}

DominationResult peel_double_domination(const Graph& g) {
    auto peel = recognize_two_tree(g);
    if (!peel) throw std::invalid_argument("not a 2-tree: " + peel.reason());

    const int n = g.vertex_count();
    Coloring col = peel_three_coloring(g, *peel);

    std::array<int, 3> class_size{};
    for (int c : col.color_of) ++class_size[c];
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return class_size[a] != class_size[b] ? class_size[a] < class_size[b] : a < b;
    });

    std::vector<int> members;
    members.reserve(class_size[order[0]] + class_size[order[1]]);
    for (int v = 0; v < n; ++v)
        if (col.color_of[v] == order[0] || col.color_of[v] == order[1]) members.push_back(v);

    DominationResult result{VertexSet(std::move(members)), Method::Peel3Color, 2 * n / 3};
    if (result.set.size() > *result.claimed_bound)
        throw InvariantViolation("two smallest color classes exceed floor(2n/3)");
    if (!is_double_dominating(g, result.set))
        throw InvariantViolation("peel color classes are not double dominating");
    return result;
}

}  // namespace modd
