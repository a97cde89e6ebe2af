#include "plo/oracle.hpp"

#include "plo/error.hpp"

namespace plo {

void OracleConfig::validate() const {
    if (!three_stretch && !(eps.num > 0 && eps.num < eps.den)) {
        throw Error(ErrorCode::BadConfig, "eps must satisfy 0 < eps < 1, got " + eps.str());
    }
    if (eps.num > Rational::kMaxPart || eps.den > Rational::kMaxPart || eps.den <= 0) {
        throw Error(ErrorCode::BadConfig, "eps parts must lie in [1, 2^20]");
    }
    if (leaf_max < 1) throw Error(ErrorCode::BadConfig, "leaf_max must be at least 1");
}

Oracle Oracle::build(const PlanarGraph& g, const OracleConfig& cfg) {
    cfg.validate();
    validate(g);
    Oracle o;
    o.cfg_ = cfg;
    o.graph_ = g;
    if (cfg.root_override) {
        if (*cfg.root_override >= g.n()) throw Error(ErrorCode::BadVertex, "root override out of range");
        SsspResult r = sssp(g, *cfg.root_override);
        o.center_.root = *cfg.root_override;
        o.center_.radius = r.tree.levels;
        for (Dist d : r.dist.dist) o.center_.weighted_eccentricity = std::max(o.center_.weighted_eccentricity, d);
    } else {
        o.center_ = find_center(g);
    }
    o.spt_ = sssp(g, o.center_.root).tree;
    o.triangulated_ = triangulate(g);
    o.rgd_ = build_rgd(o.triangulated_, o.spt_, cfg.leaf_max);
    o.portals_ = build_vertex_tables(g, o.rgd_, cfg.effective_eps());
    o.index_ = build_label_index(o.portals_, g.labels, g.num_labels, o.rgd_);
    o.count_labels();
    return o;
}

void Oracle::count_labels() {
    label_counts_.assign(graph_.num_labels, 0);
    for (Label l : graph_.labels) ++label_counts_[l];
}

QueryResult Oracle::query(VertexId u, Label label, RangeMode mode) const {
    if (u >= graph_.n()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(u) + " out of range");
    if (label_count(label) == 0) {
        throw Error(ErrorCode::LabelAbsent, "no vertex carries label " + std::to_string(label));
    }
    QueryResult result;
    if (graph_.labels[u] == label) {
        result.d = 0;
        result.witness = u;
        return result;
    }
    auto& stats = result.stats;
    auto offer = [&](Dist d, VertexId witness) {
        if (d < result.d) {
            result.d = d;
            result.witness = witness;
        }
    };

    for (const PiecePortals& pp : portals_.per_vertex[u]) {
        ++stats.pieces_visited;
        const PieceLabelEntry* ple = index_.find(label, pp.piece);
        if (!ple) continue;
        for (int side = 0; side < 2; ++side) {
            const LabelPathIndex& lpi = ple->paths[side];
            if (lpi.empty()) continue;
            const auto& entries = lpi.entries();
            for (const Portal& zu : pp.paths[side]) {
                ++stats.portals_examined;
                Split split = lpi.locate_split(zu.h, zu.position, mode);
                stats.search_steps += split.steps;
                if (split.plus_begin < entries.size()) {
                    ++stats.rmq_calls;
                    const LabelEntry& e = entries[lpi.rmq_plus().query(split.plus_begin, entries.size() - 1)];
                    offer(zu.d + (e.h - zu.h) + e.d_min, e.witness);
                }
                if (split.minus_end > 0) {
                    ++stats.rmq_calls;
                    const LabelEntry& e = entries[lpi.rmq_minus().query(0, split.minus_end - 1)];
                    offer(zu.d + (zu.h - e.h) + e.d_min, e.witness);
                }
            }
        }
    }

    if (rgd_.leaf_max > 1) {
        const Piece& piece = rgd_.pieces[rgd_.deepest_piece[u]];
        if (piece.is_leaf()) {
            if (const LeafEntry* entry = piece.leaf_lookup(u, label)) {
                offer(entry->distance, entry->witness);
            }
        }
    }
    if (result.witness == kNoVertex) {
        throw Error(ErrorCode::LabelAbsent, "label " + std::to_string(label) +
                                                " unreachable through the portal index");
    }
    return result;
}

size_t Oracle::change_label(VertexId v, Label label) {
    if (v >= graph_.n()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
    if (label >= graph_.num_labels) {
        throw Error(ErrorCode::LabelAbsent, "label " + std::to_string(label) + " out of range");
    }
    const Label old_label = graph_.labels[v];
    if (old_label == label) return 0;

    size_t touched = 0;
    auto& old_table = index_.per_label[old_label];
    auto& new_table = index_.per_label[label];
    for (const PiecePortals& pp : portals_.per_vertex[v]) {
        auto old_it = old_table.find(pp.piece);
        if (old_it == old_table.end()) {
            throw Error(ErrorCode::FormatError, "label index lacks a contribution of vertex " +
                                                    std::to_string(v));
        }
        auto [new_it, fresh] = new_table.try_emplace(pp.piece);
        if (fresh) {
            const auto& sep = *rgd_.pieces[pp.piece].separator;
            for (int side = 0; side < 2; ++side) {
                new_it->second.paths[side] = LabelPathIndex(uint32_t(sep.paths[side].size()));
            }
        }
        for (int side = 0; side < 2; ++side) {
            if (pp.paths[side].empty()) continue;
            LabelPathIndex& from = old_it->second.paths[side];
            LabelPathIndex& to = new_it->second.paths[side];
            for (const Portal& p : pp.paths[side]) {
                if (!from.remove(p, v)) {
                    throw Error(ErrorCode::FormatError, "portal of vertex " + std::to_string(v) +
                                                            " missing from its label index");
                }
                to.add(p, v);
            }
            from.rebuild();
            to.rebuild();
            touched += 2;
        }
        if (old_it->second.empty()) old_table.erase(old_it);
    }

    graph_.labels[v] = label;
    triangulated_.labels[v] = label;
    --label_counts_[old_label];
    ++label_counts_[label];

    Piece& leaf = rgd_.pieces[rgd_.deepest_piece[v]];
    if (leaf.is_leaf() && leaf.members.size() > 1) rebuild_leaf_table(leaf, triangulated_);
    return touched;
}

SpaceReport Oracle::stats() const {
    SpaceReport r;
    r.pieces = rgd_.pieces.size();
    r.vertex_portals = portals_.total_portals();
    r.label_entries = index_.entries();
    r.contributors = index_.contributors();
    r.rmq_cells = index_.rmq_cells();
    r.bitvector_words = index_.bitvector_words();
    for (const Piece& p : rgd_.pieces) r.leaf_cells += p.leaf_table.size();
    return r;
}

bool operator==(const Oracle& a, const Oracle& b) {
    return a.cfg_ == b.cfg_ && a.graph_ == b.graph_ && a.triangulated_ == b.triangulated_ &&
           a.center_ == b.center_ && a.spt_ == b.spt_ && a.rgd_ == b.rgd_ &&
           a.portals_ == b.portals_ && a.index_ == b.index_;
}

}  // namespace plo
