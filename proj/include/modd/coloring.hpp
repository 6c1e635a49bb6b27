#pragma once

#include <vector>

namespace modd {

// Total vertex coloring with a fixed palette, colors 0-based.
struct Coloring {
    int palette_size = 0;
    std::vector<int> color_of;  // indexed by vertex

    bool operator==(const Coloring&) const = default;
};

}  // namespace modd
