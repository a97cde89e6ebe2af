#pragma once

#include <vector>

#include "plo/graph.hpp"

namespace plo {

struct DistanceMap {
    VertexId source = kNoVertex;
    std::vector<Dist> dist;

    Dist operator[](VertexId v) const { return dist[v]; }
};

/*
 * Shortest-path tree over the real edges. h[v] is the weighted distance from
 * the root, level[v] the hop depth; levels is the largest level.
 */
struct Spt {
    VertexId root = kNoVertex;
    std::vector<VertexId> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<Dist> h;
    std::vector<uint32_t> level;
    uint32_t levels = 0;

    size_t size() const { return parent.size(); }
    bool is_tree_edge(EdgeId e) const;
    bool is_ancestor(VertexId a, VertexId b) const;
    VertexId lca(VertexId a, VertexId b) const;

    friend bool operator==(const Spt&, const Spt&) = default;
};

struct SsspResult {
    DistanceMap dist;
    Spt tree;
};

// Label-setting search from source. Among equal tentative distances the parent
// with the smaller vertex id wins, then the smaller edge id.
SsspResult sssp(const PlanarGraph& g, VertexId source);

// Distances only.
DistanceMap distances_from(const PlanarGraph& g, VertexId source);

struct Center {
    VertexId root = kNoVertex;
    uint32_t radius = 0;            // hop levels of the root's tree
    Dist weighted_eccentricity = 0; // informational

    friend bool operator==(const Center&, const Center&) = default;
};

// Vertex whose shortest-path tree has the fewest levels; ties to smaller id.
Center find_center(const PlanarGraph& g);

struct LabelDistance {
    Dist distance = kInfinity;
    VertexId witness = kNoVertex;

    friend bool operator==(const LabelDistance&, const LabelDistance&) = default;
};

// Ground truth: nearest vertex carrying `label`, smallest id on ties.
LabelDistance exact_label_distance(const PlanarGraph& g, VertexId u, Label label);

// Nearest vertex per label given the distance map of a source; absent labels
// keep distance kInfinity.
std::vector<LabelDistance> exact_label_distances(const PlanarGraph& g, const DistanceMap& from);

}  // namespace plo
