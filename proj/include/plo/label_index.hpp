#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "plo/portals.hpp"
#include "plo/rank_bitvector.hpp"
#include "plo/rmq.hpp"

namespace plo {

enum class RangeMode : uint8_t { BinarySearch = 0, Bitvector = 1 };

struct Contributor {
    Dist d = 0;
    VertexId v = 0;

    auto operator<=>(const Contributor&) const = default;
};

// One path node acting as a portal for at least one vertex of the label.
struct LabelEntry {
    uint32_t position = 0;
    VertexId z = kNoVertex;
    Dist h = 0;
    Dist d_min = 0;
    VertexId witness = kNoVertex;
    std::vector<Contributor> contributors;  // sorted; front() is (d_min, witness)

    friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

// Where C+ begins and C- ends within the sorted entries.
struct Split {
    size_t plus_begin = 0;  // first entry with h >= h_u
    size_t minus_end = 0;   // one past the last entry with h <= h_u
    uint32_t steps = 0;

    friend bool operator==(const Split& a, const Split& b) {
        return a.plus_begin == b.plus_begin && a.minus_end == b.minus_end;
    }
};

/*
 * Portals of one label on one separator path, one entry per path position,
 * ordered by position (equivalently by h). Keeps RMQ structures over
 * d_min + h and d_min - h, and a bitvector marking occupied positions.
 */
class LabelPathIndex {
public:
    LabelPathIndex() = default;
    explicit LabelPathIndex(uint32_t path_length) : path_length_(path_length) {}

    uint32_t path_length() const { return path_length_; }
    bool empty() const { return entries_.empty(); }
    const std::vector<LabelEntry>& entries() const { return entries_; }

    // Mutations leave the derived structures stale until rebuild().
    void add(const Portal& portal, VertexId contributor);
    bool remove(const Portal& portal, VertexId contributor);
    void rebuild();

    Split locate_split(Dist h_u, uint32_t pos_u, RangeMode mode) const;

    const SparseTableRMQ& rmq_plus() const { return rmq_plus_; }
    const SparseTableRMQ& rmq_minus() const { return rmq_minus_; }
    const RankBitvector& omega() const { return omega_; }

    // Test hook for negative controls.
    std::vector<LabelEntry>& mutable_entries() { return entries_; }

    friend bool operator==(const LabelPathIndex& a, const LabelPathIndex& b) {
        return a.path_length_ == b.path_length_ && a.entries_ == b.entries_;
    }

private:
    uint32_t path_length_ = 0;
    std::vector<LabelEntry> entries_;
    SparseTableRMQ rmq_plus_;
    SparseTableRMQ rmq_minus_;
    RankBitvector omega_;
};

struct PieceLabelEntry {
    std::array<LabelPathIndex, 2> paths;

    bool empty() const { return paths[0].empty() && paths[1].empty(); }
    friend bool operator==(const PieceLabelEntry&, const PieceLabelEntry&) = default;
};

struct LabelIndex {
    // per label: piece id -> portals of that label on the piece's two paths
    std::vector<std::unordered_map<PieceId, PieceLabelEntry>> per_label;

    const PieceLabelEntry* find(Label label, PieceId piece) const;

    size_t entries() const;
    size_t contributors() const;
    size_t rmq_cells() const;
    size_t bitvector_words() const;

    friend bool operator==(const LabelIndex&, const LabelIndex&) = default;
};

LabelIndex build_label_index(const VertexPortalTable& tables, const std::vector<Label>& labels,
                             uint32_t num_labels, const Rgd& rgd);

}  // namespace plo
