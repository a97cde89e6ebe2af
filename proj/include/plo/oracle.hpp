#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plo/decomposition.hpp"
#include "plo/graph.hpp"
#include "plo/label_index.hpp"
#include "plo/portals.hpp"
#include "plo/rational.hpp"
#include "plo/shortest_paths.hpp"

namespace plo {

struct OracleConfig {
    Rational eps{1, 2};
    bool three_stretch = false;  // single projection portal per path, eps taken as 2
    RangeMode range_mode = RangeMode::BinarySearch;
    uint32_t leaf_max = 1;
    std::optional<VertexId> root_override;

    Rational effective_eps() const { return three_stretch ? Rational{2, 1} : eps; }
    // Throws BadConfig unless 0 < eps < 1 (or three_stretch) and leaf_max >= 1.
    void validate() const;

    friend bool operator==(const OracleConfig&, const OracleConfig&) = default;
};

struct QueryStats {
    uint32_t pieces_visited = 0;
    uint32_t portals_examined = 0;
    uint32_t search_steps = 0;
    uint32_t rmq_calls = 0;
};

struct QueryResult {
    Dist d = kInfinity;
    VertexId witness = kNoVertex;
    QueryStats stats;
};

struct SpaceReport {
    size_t pieces = 0;
    size_t vertex_portals = 0;
    size_t label_entries = 0;
    size_t contributors = 0;
    size_t rmq_cells = 0;
    size_t bitvector_words = 0;
    size_t leaf_cells = 0;
};

/*
 * Approximate vertex-to-label distance oracle. Built once from a labeled
 * planar graph, it answers query(u, label) with a distance d and a witness
 * vertex of that label such that delta <= d <= (1 + eps) delta, where delta is
 * the exact distance from u to the nearest vertex carrying the label.
 *
 * Queries are const and may run concurrently; change_label needs exclusive
 * access.
 */
class Oracle {
public:
    static Oracle build(const PlanarGraph& g, const OracleConfig& cfg);

    QueryResult query(VertexId u, Label label) const { return query(u, label, cfg_.range_mode); }
    QueryResult query(VertexId u, Label label, RangeMode mode) const;

    // Same contract as query(); the witness is an approximate nearest neighbor.
    QueryResult nearest_labeled(VertexId u, Label label) const { return query(u, label); }

    // Moves v to `label`. Returns the number of (label, piece, path) portal
    // indexes rewritten.
    size_t change_label(VertexId v, Label label);

    SpaceReport stats() const;

    const OracleConfig& config() const { return cfg_; }
    const PlanarGraph& graph() const { return graph_; }
    const PlanarGraph& triangulated() const { return triangulated_; }
    const Center& center() const { return center_; }
    const Spt& spt() const { return spt_; }
    const Rgd& rgd() const { return rgd_; }
    const VertexPortalTable& portal_tables() const { return portals_; }
    const LabelIndex& label_index() const { return index_; }
    size_t label_count(Label label) const {
        return label < label_counts_.size() ? label_counts_[label] : 0;
    }

    void save(std::ostream& out) const;
    void save(const std::string& path) const;
    std::string to_bytes() const;
    static Oracle load(std::istream& in);
    static Oracle load(const std::string& path);
    static Oracle from_bytes(const std::string& bytes);

    // Test hook for negative controls.
    LabelIndex& mutable_label_index() { return index_; }

    friend bool operator==(const Oracle&, const Oracle&);

private:
    void count_labels();

    OracleConfig cfg_;
    PlanarGraph graph_;
    PlanarGraph triangulated_;
    Center center_;
    Spt spt_;
    Rgd rgd_;
    VertexPortalTable portals_;
    LabelIndex index_;
    std::vector<size_t> label_counts_;
};

}  // namespace plo
