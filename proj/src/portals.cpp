#include "plo/portals.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "plo/error.hpp"

namespace plo {

Portal project(const DistanceMap& dist, const SeparatorPath& path) {
    if (path.nodes.empty()) throw Error(ErrorCode::BadIndex, "empty separator path");
    uint32_t best = 0;
    for (uint32_t i = 1; i < path.size(); ++i) {
        VertexId a = path.nodes[i];
        VertexId b = path.nodes[best];
        if (std::tuple(dist[a], path.h[i], a) < std::tuple(dist[b], path.h[best], b)) best = i;
    }
    return Portal{best, path.nodes[best], dist[path.nodes[best]], path.h[best]};
}

std::vector<Portal> select_portals(const DistanceMap& dist, const SeparatorPath& path,
                                   const Rational& eps) {
    const Portal z0 = project(dist, path);
    auto portal_at = [&](uint32_t i) {
        return Portal{i, path.nodes[i], dist[path.nodes[i]], path.h[i]};
    };
    std::vector<Portal> out;

    // toward the root
    Portal anchor = z0;
    for (;;) {
        std::optional<uint32_t> pick;
        for (uint32_t i = 0; i < anchor.position; ++i) {
            if (path.h[i] >= anchor.h) continue;
            int64_t room = int64_t(anchor.d) + int64_t(anchor.h) - int64_t(path.h[i]);
            if (!eps.scaled_less(dist[path.nodes[i]], room)) continue;
            if (!pick || path.h[i] >= path.h[*pick]) pick = i;
        }
        if (!pick) break;
        anchor = portal_at(*pick);
        out.push_back(anchor);
    }
    std::reverse(out.begin(), out.end());
    out.push_back(z0);

    // away from the root
    anchor = z0;
    for (;;) {
        std::optional<uint32_t> pick;
        for (uint32_t i = uint32_t(path.size()); i-- > anchor.position + 1;) {
            if (path.h[i] <= anchor.h) continue;
            int64_t room = int64_t(anchor.d) + int64_t(path.h[i]) - int64_t(anchor.h);
            if (!eps.scaled_less(dist[path.nodes[i]], room)) continue;
            if (!pick || path.h[i] <= path.h[*pick]) pick = i;
        }
        if (!pick) break;
        anchor = portal_at(*pick);
        out.push_back(anchor);
    }
    return out;
}

bool verify_distance_property(const DistanceMap& dist, const SeparatorPath& path,
                              std::span<const Portal> portals, const Rational& eps) {
    for (uint32_t i = 0; i < path.size(); ++i) {
        bool covered = false;
        for (const Portal& p : portals) {
            Dist along = p.h > path.h[i] ? p.h - path.h[i] : path.h[i] - p.h;
            if (eps.stretch_leq(p.d + along, dist[path.nodes[i]])) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

size_t VertexPortalTable::total_portals() const {
    size_t total = 0;
    for (const auto& pieces : per_vertex) {
        for (const auto& pp : pieces) total += pp.paths[0].size() + pp.paths[1].size();
    }
    return total;
}

size_t VertexPortalTable::max_list() const {
    size_t longest = 0;
    for (const auto& pieces : per_vertex) {
        for (const auto& pp : pieces) {
            longest = std::max({longest, pp.paths[0].size(), pp.paths[1].size()});
        }
    }
    return longest;
}

VertexPortalTable build_vertex_tables(const PlanarGraph& g, const Rgd& rgd, const Rational& eps) {
    VertexPortalTable table;
    table.per_vertex.resize(g.n());
    for (VertexId v = 0; v < g.n(); ++v) {
        auto chain = rgd.ancestors(rgd.deepest_piece[v]);
        bool any = std::any_of(chain.begin(), chain.end(),
                               [&](PieceId p) { return !rgd.pieces[p].is_leaf(); });
        if (!any) continue;
        DistanceMap dist = distances_from(g, v);
        for (PieceId p : chain) {
            const Piece& piece = rgd.pieces[p];
            if (piece.is_leaf()) continue;
            PiecePortals pp;
            pp.piece = p;
            for (int side = 0; side < 2; ++side) {
                pp.paths[side] = select_portals(dist, piece.separator->paths[side], eps);
            }
            table.per_vertex[v].push_back(std::move(pp));
        }
    }
    return table;
}

bool within_portal_bound(size_t len, const Rational& eps) {
    // len - 1 < 4 / (eps - eps^2)  <=>  (len - 1) * (p q - p^2) < 4 q^2
    Wide p = eps.num, q = eps.den;
    Wide slack = p * q - p * p;
    if (slack <= 0) return true;
    Wide lhs = Wide(len > 0 ? len - 1 : 0) * slack;
    return lhs < 4 * q * q;
}

uint64_t portal_bound_ceil(const Rational& eps) {
    Wide p = eps.num, q = eps.den;
    Wide slack = p * q - p * p;
    if (slack <= 0) return 1;
    Wide num = 4 * q * q;
    return uint64_t((num + slack - 1) / slack);
}

}  // namespace plo
