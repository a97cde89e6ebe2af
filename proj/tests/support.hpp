#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls into the
// library's shortest-path or separator code.

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <tuple>
#include <vector>

#include "plo/graph.hpp"

namespace plo::test {

struct Point {
    double x = 0;
    double y = 0;
};

struct EdgeSpec {
    VertexId u;
    VertexId v;
    uint64_t length;
};

// Rotation of each vertex follows edge insertion order; valid for graphs of
// maximum degree 2 and trees.
inline PlanarGraph make_graph(size_t n, const std::vector<EdgeSpec>& edges,
                              std::vector<Label> labels = {}, uint32_t num_labels = 1) {
    PlanarGraph g(n, num_labels);
    if (!labels.empty()) {
        g.labels = labels;
        g.num_labels = std::max<uint32_t>(num_labels, *std::max_element(labels.begin(), labels.end()) + 1);
    }
    for (const auto& e : edges) {
        EdgeId id = g.add_edge(e.u, e.v, e.length);
        g.rotation[e.u].push_back(id);
        g.rotation[e.v].push_back(id);
    }
    return g;
}

// Straight-line drawing: rotations sorted counterclockwise by angle.
inline PlanarGraph make_geometric(const std::vector<Point>& pts, const std::vector<EdgeSpec>& edges,
                                  std::vector<Label> labels = {}) {
    PlanarGraph g = make_graph(pts.size(), edges, std::move(labels));
    for (VertexId v = 0; v < g.n(); ++v) {
        auto angle = [&](EdgeId e) {
            const Point& p = pts[g.edges[e].other(v)];
            return std::atan2(p.y - pts[v].y, p.x - pts[v].x);
        };
        std::sort(g.rotation[v].begin(), g.rotation[v].end(),
                  [&](EdgeId a, EdgeId b) { return angle(a) < angle(b); });
    }
    return g;
}

// Ray casting; the polygon must be simple.
inline bool inside_polygon(const std::vector<Point>& poly, Point p) {
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
            in = !in;
        }
    }
    return in;
}

constexpr Dist kUnreachable = kInfinity / 4;

// All-pairs distances over real edges.
inline std::vector<std::vector<Dist>> floyd_warshall(const PlanarGraph& g) {
    const size_t n = g.n();
    std::vector<std::vector<Dist>> d(n, std::vector<Dist>(n, kUnreachable));
    for (size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges) {
        if (e.artificial) continue;
        d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Hop distances from s over real edges.
inline std::vector<uint32_t> bfs_hops(const PlanarGraph& g, VertexId s) {
    std::vector<uint32_t> hops(g.n(), UINT32_MAX);
    std::deque<VertexId> q{s};
    hops[s] = 0;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        for (EdgeId e : g.rotation[x]) {
            if (g.edges[e].artificial) continue;
            VertexId y = g.edges[e].other(x);
            if (hops[y] == UINT32_MAX) {
                hops[y] = hops[x] + 1;
                q.push_back(y);
            }
        }
    }
    return hops;
}

// Component ids of the graph with `removed` vertices deleted (all edges used).
inline std::vector<int> components_without(const PlanarGraph& g, const std::vector<uint8_t>& removed) {
    std::vector<int> comp(g.n(), -1);
    int next = 0;
    for (VertexId s = 0; s < g.n(); ++s) {
        if (removed[s] || comp[s] != -1) continue;
        std::deque<VertexId> q{s};
        comp[s] = next;
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            for (EdgeId e : g.rotation[x]) {
                VertexId y = g.edges[e].other(x);
                if (!removed[y] && comp[y] == -1) {
                    comp[y] = next;
                    q.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

// Face sizes counted by an independent walk of the rotation system.
inline std::vector<size_t> face_sizes(const PlanarGraph& g) {
    std::vector<size_t> sizes;
    std::vector<uint8_t> used(2 * g.m(), 0);
    for (uint32_t start = 0; start < 2 * g.m(); ++start) {
        if (used[start]) continue;
        size_t len = 0;
        uint32_t d = start;
        while (!used[d]) {
            used[d] = 1;
            ++len;
            EdgeId e = d >> 1;
            VertexId head = (d & 1) ? g.edges[e].u : g.edges[e].v;
            const auto& rot = g.rotation[head];
            size_t i = size_t(std::find(rot.begin(), rot.end(), e) - rot.begin());
            EdgeId next = rot[(i + 1) % rot.size()];
            d = 2 * next + (g.edges[next].u == head ? 0 : 1);
        }
        sizes.push_back(len);
    }
    return sizes;
}

// Sets every k-th real edge to length zero.
inline PlanarGraph with_zero_edges(PlanarGraph g, size_t k) {
    for (size_t e = 0; e < g.m(); e += k)
        if (!g.edges[e].artificial) g.edges[e].length = 0;
    return g;
}

inline const char* kTriangleFile =
    "PLGRAPH 1\n"
    "# smallest triangulated graph\n"
    "3 3 2\n"
    "V 0 0\nV 1 0\nV 2 1\n"
    "E 0 0 1 1\nE 1 1 2 1\nE 2 2 0 1\n"
    "R 0 0 2\nR 1 1 0\nR 2 2 1\n";

}  // namespace plo::test
