#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "modd/graph.hpp"

namespace modd {

// Recognition either yields a certificate or a human-readable rejection
// reason. Rejection is a normal outcome, not an error.
template <class T>
class Outcome {
public:
    static Outcome accept(T value) {
        Outcome o;
        o.value_ = std::move(value);
        return o;
    }
    static Outcome reject(std::string reason) {
        Outcome o;
        o.reason_ = std::move(reason);
        return o;
    }

    explicit operator bool() const { return value_.has_value(); }
    const T& operator*() const { return *value_; }
    const T* operator->() const { return &*value_; }
    const std::string& reason() const { return reason_; }

private:
    Outcome() = default;
    std::optional<T> value_;
    std::string reason_;
};

// Witness that a graph is maximal outerplanar: the Hamiltonian outer cycle
// plus the n-3 pairwise non-crossing diagonals. Canonical form: the cycle
// starts at vertex 0 and runs toward the smaller-labeled of its two cycle
// neighbors; chords are ascending pairs in lexicographic order.
struct OuterplaneEmbedding {
    std::vector<int> cycle;
    std::vector<std::pair<int, int>> chords;

    bool operator==(const OuterplaneEmbedding&) const = default;
};

struct PeelStep {
    int removed;  // degree-2 vertex taken out at this step
    int left;     // its two neighbors at removal time, left < right;
    int right;    // left-right is an edge (the vertex is simplicial)

    bool operator==(const PeelStep&) const = default;
};

// Elimination certificate that a graph is a 2-tree: n-3 simplicial
// degree-2 removals down to a triangle kernel.
struct PeelSequence {
    std::vector<PeelStep> steps;
    std::array<int, 3> kernel;  // ascending

    bool operator==(const PeelSequence&) const = default;
};

// Certifies maximal outerplanarity. An edge of a maximal outerplane graph
// on n >= 4 vertices lies in exactly one triangle iff it is on the outer
// cycle and in exactly two iff it is a chord, so the one-triangle edges
// must form a Hamiltonian cycle and the rest must be non-crossing chords.
Outcome<OuterplaneEmbedding> recognize_mop(const Graph& g);

// Certifies the 2-tree property by greedy peeling, lowest vertex index
// first. Peeling a simplicial degree-2 vertex of a 2-tree leaves a
// 2-tree, so the greedy order never gets stuck on a genuine 2-tree.
Outcome<PeelSequence> recognize_two_tree(const Graph& g);

// Throws std::invalid_argument unless emb is an embedding of g
// (cycle + chords partition the edge set and the invariants hold).
void require_embedding(const Graph& g, const OuterplaneEmbedding& emb);

// Inner faces all of whose edges are chords. Ascending triples in
// lexicographic order.
std::vector<std::array<int, 3>> internal_triangles(const OuterplaneEmbedding& emb, const Graph& g);

// A maximal outerplane graph is striped when it has no internal triangle.
bool is_striped(const OuterplaneEmbedding& emb, const Graph& g);

}  // namespace modd
