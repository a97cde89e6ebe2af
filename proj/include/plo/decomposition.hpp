#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "plo/graph.hpp"
#include "plo/shortest_paths.hpp"

namespace plo {

using PieceId = uint32_t;
constexpr PieceId kNoPiece = std::numeric_limits<PieceId>::max();

enum class Side : uint8_t { Exterior, Interior, OnCycle };

/*
 * A root-monotone path of the shortest-path tree: nodes[0] is the apex and
 * every later node is a tree child of the one before it, so the distance
 * between two path nodes equals the difference of their h-values.
 */
struct SeparatorPath {
    std::vector<VertexId> nodes;
    std::vector<Dist> h;

    size_t size() const { return nodes.size(); }
    std::optional<uint32_t> position(VertexId v) const;

    friend bool operator==(const SeparatorPath&, const SeparatorPath&) = default;
};

/*
 * Fundamental cycle of a non-tree edge, split at its apex (the lowest common
 * tree ancestor of the edge's endpoints) into two descending paths. Both paths
 * start at the apex. nontree_edge == kNoEdge marks the root-only separator used
 * when the graph has no cycle at all (n <= 2).
 */
struct Separator {
    EdgeId nontree_edge = kNoEdge;
    VertexId apex = kNoVertex;
    std::array<SeparatorPath, 2> paths;
    std::vector<VertexId> cycle_vertices;  // sorted

    bool on_cycle(VertexId v) const;

    friend bool operator==(const Separator&, const Separator&) = default;
};

// Exact induced-subgraph distance from a leaf member to the nearest member
// carrying a label.
struct LeafEntry {
    VertexId u = 0;
    Label label = 0;
    Dist distance = 0;
    VertexId witness = 0;

    friend bool operator==(const LeafEntry&, const LeafEntry&) = default;
};

struct Piece {
    PieceId id = 0;
    PieceId parent = kNoPiece;
    uint32_t depth = 0;
    std::vector<VertexId> members;  // sorted
    std::optional<Separator> separator;
    std::vector<PieceId> children;
    std::vector<LeafEntry> leaf_table;  // sorted by (u, label)

    bool is_leaf() const { return !separator.has_value(); }
    const LeafEntry* leaf_lookup(VertexId u, Label label) const;

    friend bool operator==(const Piece&, const Piece&) = default;
};

struct Rgd {
    std::vector<Piece> pieces;
    PieceId root = 0;
    std::vector<PieceId> deepest_piece;
    uint32_t leaf_max = 1;

    uint32_t depth() const;
    // Root first, ending at `piece`.
    std::vector<PieceId> ancestors(PieceId piece) const;
    PieceId lca(PieceId p, PieceId q) const;

    friend bool operator==(const Rgd&, const Rgd&) = default;
};

Separator fundamental_cycle(const PlanarGraph& g, const Spt& spt, EdgeId e);

// Two-colors the faces by a dual traversal that never crosses a cycle edge.
// The face left of dart 2e seeds Interior, the face of dart 2e+1 Exterior.
std::vector<Side> classify_sides(const PlanarGraph& g, const FaceStructure& faces,
                                 const Spt& spt, const Separator& sep);
std::vector<Side> classify_sides(const PlanarGraph& g, const Spt& spt, const Separator& sep);

struct SideWeights {
    uint64_t side_a = 0;  // the side away from the dual root face
    uint64_t side_b = 0;
    uint64_t cycle = 0;

    uint64_t max_side() const { return std::max(side_a, side_b); }
};

/*
 * Evaluates all fundamental cycles of a triangulated graph against a vertex
 * weighting in O(n + m). The non-tree edges form a spanning tree of the dual;
 * removing one of them splits the faces into the two sides of its cycle, and a
 * vertex lies strictly inside the cycle iff the dual lca of its faces does.
 */
class SeparatorFinder {
public:
    SeparatorFinder(const PlanarGraph& g, const Spt& spt);

    const FaceStructure& faces() const { return faces_; }
    const std::vector<EdgeId>& nontree_edges() const { return nontree_; }

    // Side weights for every non-tree edge, aligned with nontree_edges().
    std::vector<SideWeights> side_weights(std::span<const uint8_t> weights) const;

    // Balanced separator minimizing the heavier side, then the edge id.
    Separator choose(std::span<const uint8_t> weights) const;

private:
    uint32_t dual_lca(uint32_t a, uint32_t b) const;

    const PlanarGraph& g_;
    const Spt& spt_;
    FaceStructure faces_;
    std::vector<EdgeId> nontree_;
    std::vector<uint32_t> child_face_;     // per non-tree edge
    std::vector<VertexId> apex_;           // per non-tree edge
    std::vector<uint32_t> dual_parent_;
    std::vector<uint32_t> dual_depth_;
    std::vector<uint32_t> tin_, tout_;
    std::vector<uint32_t> vertex_anchor_;  // dual lca of each vertex's faces
    std::vector<VertexId> by_level_;
};

Separator choose_separator(const PlanarGraph& g, const Spt& spt, std::span<const uint8_t> weights);

// g must be triangulated; spt spans its real edges.
Rgd build_rgd(const PlanarGraph& g, const Spt& spt, uint32_t leaf_max);

// Recomputes a leaf's induced-subgraph table from the current labels of g.
void rebuild_leaf_table(Piece& piece, const PlanarGraph& g);

}  // namespace plo
