#pragma once

#include <array>
#include <span>
#include <vector>

#include "plo/decomposition.hpp"
#include "plo/rational.hpp"
#include "plo/shortest_paths.hpp"

namespace plo {

struct Portal {
    uint32_t position = 0;  // index into the separator path
    VertexId z = kNoVertex;
    Dist d = 0;             // exact graph distance from the owning vertex to z
    Dist h = 0;             // distance from the tree root to z

    friend bool operator==(const Portal&, const Portal&) = default;
};

// Path node closest to the source of dist; ties to smaller h, then smaller id.
Portal project(const DistanceMap& dist, const SeparatorPath& path);

/*
 * Greedy portal selection around the projection z0. Toward the root, the
 * candidate farthest from the root is taken while some z with h(z) < h(a)
 * satisfies (1+eps) d(z) < d(a) + h(a) - h(z), where a is the last portal
 * taken; away from the root the closest candidate with h(z) > h(a) and
 * (1+eps) d(z) < d(a) + h(z) - h(a). Output is ordered by position (h
 * ascending). For eps >= 2 no candidate can exist and the result is {z0}.
 */
std::vector<Portal> select_portals(const DistanceMap& dist, const SeparatorPath& path,
                                   const Rational& eps);

// Exhaustive check: every path node w has a portal with
// d_i + |h_i - h(w)| <= (1+eps) * dist(w).
bool verify_distance_property(const DistanceMap& dist, const SeparatorPath& path,
                              std::span<const Portal> portals, const Rational& eps);

// Portal lists of one vertex at one separator-carrying piece.
struct PiecePortals {
    PieceId piece = kNoPiece;
    std::array<std::vector<Portal>, 2> paths;

    friend bool operator==(const PiecePortals&, const PiecePortals&) = default;
};

struct VertexPortalTable {
    // per vertex, ordered from the root piece downward
    std::vector<std::vector<PiecePortals>> per_vertex;

    size_t total_portals() const;
    size_t max_list() const;

    friend bool operator==(const VertexPortalTable&, const VertexPortalTable&) = default;
};

// Portal lists for every vertex at every separator-carrying ancestor of its
// deepest piece, using one exact search per vertex over the real edges.
VertexPortalTable build_vertex_tables(const PlanarGraph& g, const Rgd& rgd, const Rational& eps);

// Strict upper bound 4 / (eps - eps^2) + 1 on a list length, as a rational
// compare: true iff len < 4 / (eps - eps^2) + 1. Only meaningful for eps < 1.
bool within_portal_bound(size_t len, const Rational& eps);

// ceil(4 / (eps - eps^2)) for 0 < eps < 1.
uint64_t portal_bound_ceil(const Rational& eps);

}  // namespace plo
