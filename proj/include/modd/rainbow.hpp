#pragma once

#include <vector>

#include "modd/coloring.hpp"
#include "modd/graph.hpp"
#include "modd/recognition.hpp"

namespace modd {

// One augmentation: `added` is a new vertex joined to `degree_two` (a
// degree-2 vertex of the input graph) and to `neighbor`, the clockwise
// cycle neighbor of `degree_two`.
struct Attachment {
    int added;
    int degree_two;
    int neighbor;

    bool operator==(const Attachment&) const = default;
};

// A maximal outerplanar graph on original_n + t vertices produced by
// hanging one new vertex over each degree-2 vertex of the input. Vertices
// 0..original_n-1 induce exactly the input graph.
struct AugmentedGraph {
    Graph graph;
    int original_n;
    std::vector<Attachment> attachments;
};

// Requires a recognized maximal outerplanar graph with n >= 4.
AugmentedGraph augment(const Graph& g, const OuterplaneEmbedding& emb);

// 4-coloring in which every 4-cycle carries all four colors. Built by
// walking the dual tree of the triangulation: each new apex avoids the
// colors of the shared edge and of the opposite apex. Every 4-cycle of a
// maximal outerplanar graph is two faces glued along a chord, which is
// exactly the quadruple the rule constrains. Requires a recognized
// maximal outerplanar graph, n >= 3.
Coloring rainbow_four_coloring(const Graph& g, const OuterplaneEmbedding& emb);

// Double dominating set of size <= floor((n+t)/2), t the number of
// degree-2 vertices: rainbow-4-color the augmented graph, take the union
// of its two smallest color classes, then swap every added vertex for one
// of its neighbors outside the union. Requires a MOP with n >= 4.
DominationResult rainbow_double_domination(const Graph& g, const OuterplaneEmbedding& emb);

// The vertices of degree >= 3, a double dominating set of size n - t for
// every maximal outerplanar graph with n >= 4.
DominationResult degree_set_double_domination(const Graph& g);

// Runs both heuristics above and keeps the smaller set (ties favor the
// rainbow result). The winner's size never exceeds
// min(floor((n+t)/2), n-t).
DominationResult dispatch_bound(const Graph& g);

}  // namespace modd
