#pragma once

#include "modd/coloring.hpp"
#include "modd/graph.hpp"
#include "modd/recognition.hpp"

namespace modd {

// Proper 3-coloring of a 2-tree obtained by replaying the peel sequence in
// reverse: the kernel triangle gets colors 0,1,2 in ascending vertex order
// and each reinserted vertex takes the color its two neighbors left free.
// Throws std::invalid_argument when peel is not a valid sequence for g.
Coloring peel_three_coloring(const Graph& g, const PeelSequence& peel);

// Double dominating set of size <= floor(2n/3) for any 2-tree (maximal
// K4-minor-free graph, not necessarily outerplanar): union of the two
// smallest color classes of the peel 3-coloring, ties broken by smaller
// color index. Throws std::invalid_argument when g is not a 2-tree.
DominationResult peel_double_domination(const Graph& g);

}  // namespace modd
