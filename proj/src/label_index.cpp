#include "plo/label_index.hpp"

#include <algorithm>

#include "plo/error.hpp"

namespace plo {

namespace {

auto by_position(std::vector<LabelEntry>& entries, uint32_t position) {
    return std::lower_bound(entries.begin(), entries.end(), position,
                            [](const LabelEntry& e, uint32_t p) { return e.position < p; });
}

}  // namespace

void LabelPathIndex::add(const Portal& portal, VertexId contributor) {
    if (portal.position >= path_length_) {
        throw Error(ErrorCode::BadIndex, "portal position beyond path length");
    }
    auto it = by_position(entries_, portal.position);
    if (it == entries_.end() || it->position != portal.position) {
        LabelEntry entry;
        entry.position = portal.position;
        entry.z = portal.z;
        entry.h = portal.h;
        it = entries_.insert(it, std::move(entry));
    }
    Contributor c{portal.d, contributor};
    auto& cs = it->contributors;
    cs.insert(std::lower_bound(cs.begin(), cs.end(), c), c);
    it->d_min = cs.front().d;
    it->witness = cs.front().v;
}

bool LabelPathIndex::remove(const Portal& portal, VertexId contributor) {
    auto it = by_position(entries_, portal.position);
    if (it == entries_.end() || it->position != portal.position) return false;
    auto& cs = it->contributors;
    auto c = std::lower_bound(cs.begin(), cs.end(), Contributor{portal.d, contributor});
    if (c == cs.end() || c->v != contributor || c->d != portal.d) return false;
    cs.erase(c);
    if (cs.empty()) {
        entries_.erase(it);
    } else {
        it->d_min = cs.front().d;
        it->witness = cs.front().v;
    }
    return true;
}

void LabelPathIndex::rebuild() {
    std::vector<int64_t> plus, minus;
    plus.reserve(entries_.size());
    minus.reserve(entries_.size());
    omega_ = RankBitvector(path_length_);
    for (const LabelEntry& e : entries_) {
        plus.push_back(int64_t(e.d_min) + int64_t(e.h));
        minus.push_back(int64_t(e.d_min) - int64_t(e.h));
        omega_.set(e.position);
    }
    omega_.finalize();
    rmq_plus_ = SparseTableRMQ(std::move(plus));
    rmq_minus_ = SparseTableRMQ(std::move(minus));
}

Split LabelPathIndex::locate_split(Dist h_u, uint32_t pos_u, RangeMode mode) const {
    Split s;
    if (mode == RangeMode::BinarySearch) {
        size_t lo = 0, hi = entries_.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            ++s.steps;
            if (entries_[mid].h < h_u) lo = mid + 1; else hi = mid;
        }
        s.plus_begin = lo;
        hi = entries_.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            ++s.steps;
            if (entries_[mid].h <= h_u) lo = mid + 1; else hi = mid;
        }
        s.minus_end = lo;
        return s;
    }
    // Entries before pos_u have h <= h_u and entries from pos_u on have
    // h >= h_u; equal h only occurs across zero-length edges.
    const size_t r = omega_.rank(pos_u);
    s.steps = 1;
    s.plus_begin = r;
    while (s.plus_begin > 0 && entries_[s.plus_begin - 1].h >= h_u) {
        --s.plus_begin;
        ++s.steps;
    }
    s.minus_end = r + (omega_.test(pos_u) ? 1 : 0);
    while (s.minus_end < entries_.size() && entries_[s.minus_end].h <= h_u) {
        ++s.minus_end;
        ++s.steps;
    }
    return s;
}

const PieceLabelEntry* LabelIndex::find(Label label, PieceId piece) const {
    if (label >= per_label.size()) return nullptr;
    auto it = per_label[label].find(piece);
    return it == per_label[label].end() ? nullptr : &it->second;
}

size_t LabelIndex::entries() const {
    size_t total = 0;
    for (const auto& table : per_label) {
        for (const auto& [piece, ple] : table) {
            total += ple.paths[0].entries().size() + ple.paths[1].entries().size();
        }
    }
    return total;
}

size_t LabelIndex::contributors() const {
    size_t total = 0;
    for (const auto& table : per_label) {
        for (const auto& [piece, ple] : table) {
            for (const auto& path : ple.paths) {
                for (const auto& e : path.entries()) total += e.contributors.size();
            }
        }
    }
    return total;
}

size_t LabelIndex::rmq_cells() const {
    size_t total = 0;
    for (const auto& table : per_label) {
        for (const auto& [piece, ple] : table) {
            for (const auto& path : ple.paths) {
                total += path.rmq_plus().cells() + path.rmq_minus().cells();
            }
        }
    }
    return total;
}

size_t LabelIndex::bitvector_words() const {
    size_t total = 0;
    for (const auto& table : per_label) {
        for (const auto& [piece, ple] : table) {
            for (const auto& path : ple.paths) total += path.omega().words();
        }
    }
    return total;
}

LabelIndex build_label_index(const VertexPortalTable& tables, const std::vector<Label>& labels,
                             uint32_t num_labels, const Rgd& rgd) {
    LabelIndex index;
    index.per_label.resize(num_labels);
    for (VertexId v = 0; v < tables.per_vertex.size(); ++v) {
        auto& table = index.per_label[labels[v]];
        for (const PiecePortals& pp : tables.per_vertex[v]) {
            auto [it, fresh] = table.try_emplace(pp.piece);
            if (fresh) {
                const auto& sep = *rgd.pieces[pp.piece].separator;
                for (int side = 0; side < 2; ++side) {
                    it->second.paths[side] = LabelPathIndex(uint32_t(sep.paths[side].size()));
                }
            }
            for (int side = 0; side < 2; ++side) {
                for (const Portal& p : pp.paths[side]) it->second.paths[side].add(p, v);
            }
        }
    }
    for (auto& table : index.per_label) {
        for (auto& [piece, ple] : table) {
            for (auto& path : ple.paths) path.rebuild();
        }
    }
    return index;
}

}  // namespace plo
