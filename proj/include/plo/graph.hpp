#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace plo {

using VertexId = uint32_t;
using EdgeId = uint32_t;
using Label = uint32_t;
using Dist = uint64_t;

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
constexpr Dist kInfinity = std::numeric_limits<Dist>::max();

// Real edges carry lengths in [0, kMaxEdgeLength]; artificial edges carry
// kInfinity and never take part in a distance computation.
constexpr uint64_t kMaxEdgeLength = uint64_t(1) << 31;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    uint64_t length = 0;
    bool artificial = false;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/*
 * Undirected vertex-labeled graph with a combinatorial embedding. rotation[v]
 * lists the ids of the edges incident to v in counterclockwise order.
 *
 * Darts: edge e has darts 2e (u -> v) and 2e+1 (v -> u).
 */
struct PlanarGraph {
    std::vector<Label> labels;
    uint32_t num_labels = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> rotation;

    PlanarGraph() = default;
    PlanarGraph(size_t n, uint32_t label_count)
        : labels(n, 0), num_labels(label_count), rotation(n) {}

    size_t n() const { return labels.size(); }
    size_t m() const { return edges.size(); }

    // Appends an edge without touching the rotation system.
    EdgeId add_edge(VertexId u, VertexId v, uint64_t length, bool artificial = false) {
        edges.push_back(Edge{u, v, length, artificial});
        return EdgeId(edges.size() - 1);
    }

    size_t artificial_count() const;

    friend bool operator==(const PlanarGraph&, const PlanarGraph&) = default;
};

inline VertexId dart_tail(const PlanarGraph& g, uint32_t dart) {
    const Edge& e = g.edges[dart >> 1];
    return (dart & 1) ? e.v : e.u;
}
inline VertexId dart_head(const PlanarGraph& g, uint32_t dart) {
    const Edge& e = g.edges[dart >> 1];
    return (dart & 1) ? e.u : e.v;
}
// The dart of edge e leaving x.
inline uint32_t dart_from(const PlanarGraph& g, EdgeId e, VertexId x) {
    return 2 * e + (g.edges[e].u == x ? 0u : 1u);
}

/*
 * Faces induced by the rotation system. The successor of dart (x -> y via e)
 * is the dart leaving y along the edge following e in rotation[y].
 */
struct FaceStructure {
    std::vector<uint32_t> dart_face;
    std::vector<std::vector<uint32_t>> faces;  // darts in walk order

    size_t count() const { return faces.size(); }
};

FaceStructure compute_faces(const PlanarGraph& g);

// Walks every dart once, returns the face count and checks n - m + f = 2.
size_t validate_faces(const PlanarGraph& g);

// Checks ids, loops, duplicate real edges, rotation consistency, real-edge
// connectivity, the edge bound and Euler's formula. Throws plo::Error.
void validate(const PlanarGraph& g);

// Returns a copy in which every face is a triangle. Added edges are artificial
// and are appended after the existing ones; existing rotations keep their order.
PlanarGraph triangulate(const PlanarGraph& g, size_t* added = nullptr);

// PLGRAPH v1 text format.
PlanarGraph parse_graph(std::istream& in);
PlanarGraph parse_graph(std::string_view text);
PlanarGraph load_graph(const std::string& path);
void serialize_graph(const PlanarGraph& g, std::ostream& out);
std::string serialize_graph(const PlanarGraph& g);
void save_graph(const PlanarGraph& g, const std::string& path);

}  // namespace plo
