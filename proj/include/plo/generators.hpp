#pragma once

#include <cstdint>

#include "plo/graph.hpp"

namespace plo {

struct WeightRange {
    uint64_t lo = 1;
    uint64_t hi = 1;
};

// rows x cols grid, vertex (r, c) has id r * cols + c. Lengths and labels are
// drawn uniformly; the result depends only on the arguments.
PlanarGraph gen_grid(uint32_t rows, uint32_t cols, WeightRange weights, uint32_t num_labels,
                     uint64_t seed);

// Grid with at least n vertices from which a random (1 - density) fraction of
// the edges is removed, never disconnecting the graph.
PlanarGraph gen_planar(uint32_t n, double density, WeightRange weights, uint32_t num_labels,
                       uint64_t seed);

}  // namespace plo
