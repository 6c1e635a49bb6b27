#pragma once

#include <cstdint>
#include <optional>

#include "modd/graph.hpp"

namespace modd {

enum class Family {
    FamilyU,    // tight for the floor(2n/3) bound: gamma_x2 = 2n/3
    FamilyA,    // striped, tight for the floor(n/2)+1 bound
    Fan,        // path plus an apex; the canonical striped MOP
    RandomMop,  // random triangulation of the convex polygon
};

enum class InnerTriangulation { Fan, RandomBinary };

struct GenSpec {
    Family family = Family::Fan;
    int param = 3;  // k for FamilyU, q for FamilyA, n otherwise
    std::optional<std::uint64_t> seed;
    InnerTriangulation inner = InnerTriangulation::Fan;  // FamilyU only
};

// MOP on n = 3k vertices: a triangulated 2k-gon H on vertices 0..2k-1 with
// one extra vertex hung over every second boundary edge. The k added
// vertices have degree 2 and pairwise disjoint closed neighborhoods, which
// forces gamma_x2 = 2k. Requires k >= 2.
Graph generate_family_u(int k, InnerTriangulation inner = InnerTriangulation::Fan,
                        std::optional<std::uint64_t> seed = std::nullopt);

// Striped MOP on n = 2q vertices (q odd, q >= 3) on two vertex rails
// a_1..a_q -> 0..q-1 and b_1..b_q -> q..2q-1: outer cycle
// a_1..a_q b_q..b_1, rungs a_i b_i for 2 <= i <= q-1, and a periodic
// zig-zag diagonal set. Achieves gamma_x2 = n/2 + 1. The construction is
// self-validating: it throws InvariantViolation if the result is not a
// striped MOP with exactly two degree-2 vertices.
Graph generate_family_a(int q);

// Path 0..n-2 plus apex n-1 adjacent to every path vertex. Requires n >= 3.
Graph generate_fan(int n);

// Seeded random triangulation of the convex n-gon (outer cycle 0..n-1) by
// recursive splitting. Reproducible for a fixed seed; the distribution
// over triangulations is not exactly uniform.
Graph generate_random_mop(int n, std::uint64_t seed);

Graph generate(const GenSpec& spec);

}  // namespace modd
