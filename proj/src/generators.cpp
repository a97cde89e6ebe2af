#include "plo/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "plo/error.hpp"

namespace plo {

namespace {

void check_weights(WeightRange w) {
    if (w.lo < 1 || w.lo > w.hi || w.hi > kMaxEdgeLength) {
        throw Error(ErrorCode::BadConfig, "weight range must satisfy 1 <= lo <= hi <= 2^31");
    }
}

bool connected_without(const PlanarGraph& g, const std::vector<uint8_t>& removed) {
    std::vector<uint8_t> seen(g.n(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (EdgeId e : g.rotation[x]) {
            if (removed[e]) continue;
            VertexId y = g.edges[e].other(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == g.n();
}

}  // namespace

PlanarGraph gen_grid(uint32_t rows, uint32_t cols, WeightRange weights, uint32_t num_labels,
                     uint64_t seed) {
    if (rows < 2 || cols < 2) throw Error(ErrorCode::BadConfig, "grid needs rows, cols >= 2");
    if (num_labels == 0) throw Error(ErrorCode::BadConfig, "need at least one label");
    check_weights(weights);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> length(weights.lo, weights.hi);
    std::uniform_int_distribution<uint32_t> label(0, num_labels - 1);

    const uint32_t n = rows * cols;
    PlanarGraph g(n, num_labels);
    auto id = [cols](uint32_t r, uint32_t c) { return VertexId(r * cols + c); };

    // per vertex: east, north, west, south edge (kNoEdge at the boundary)
    std::vector<std::array<EdgeId, 4>> around(n);
    for (auto& a : around) a.fill(kNoEdge);
    for (uint32_t r = 0; r < rows; ++r) {
        for (uint32_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                EdgeId e = g.add_edge(id(r, c), id(r, c + 1), length(rng));
                around[id(r, c)][0] = e;
                around[id(r, c + 1)][2] = e;
            }
            if (r + 1 < rows) {
                EdgeId e = g.add_edge(id(r, c), id(r + 1, c), length(rng));
                around[id(r, c)][3] = e;
                around[id(r + 1, c)][1] = e;
            }
        }
    }
    // Rows grow downward, so east, north, west, south is counterclockwise.
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeId e : around[v]) {
            if (e != kNoEdge) g.rotation[v].push_back(e);
        }
    }
    for (VertexId v = 0; v < n; ++v) g.labels[v] = label(rng);
    return g;
}

PlanarGraph gen_planar(uint32_t n, double density, WeightRange weights, uint32_t num_labels,
                       uint64_t seed) {
    if (!(density > 0.0 && density <= 1.0)) {
        throw Error(ErrorCode::BadConfig, "density must lie in (0, 1]");
    }
    if (n < 4) throw Error(ErrorCode::BadConfig, "gen_planar needs n >= 4");
    uint32_t rows = uint32_t(std::ceil(std::sqrt(double(n))));
    uint32_t cols = (n + rows - 1) / rows;
    rows = std::max(rows, 2u);
    cols = std::max(cols, 2u);
    PlanarGraph grid = gen_grid(rows, cols, weights, num_labels, seed);

    const size_t target = size_t(std::llround((1.0 - density) * double(grid.m())));
    if (target == 0) return grid;

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<EdgeId> order(grid.m());
    for (EdgeId e = 0; e < grid.m(); ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<uint8_t> removed(grid.m(), 0);
    size_t deleted = 0;
    for (EdgeId e : order) {
        if (deleted == target) break;
        removed[e] = 1;
        if (connected_without(grid, removed)) {
            ++deleted;
        } else {
            removed[e] = 0;
        }
    }

    PlanarGraph g(grid.n(), num_labels);
    g.labels = grid.labels;
    std::vector<EdgeId> remap(grid.m(), kNoEdge);
    for (EdgeId e = 0; e < grid.m(); ++e) {
        if (!removed[e]) {
            const Edge& edge = grid.edges[e];
            remap[e] = g.add_edge(edge.u, edge.v, edge.length);
        }
    }
    for (VertexId v = 0; v < g.n(); ++v) {
        for (EdgeId e : grid.rotation[v]) {
            if (remap[e] != kNoEdge) g.rotation[v].push_back(remap[e]);
        }
    }
    return g;
}

}  // namespace plo
