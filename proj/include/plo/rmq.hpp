#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace plo {

/*
 * Sparse-table range-minimum structure over 64-bit keys. query(i, j) returns
 * the index of the smallest key in [i, j], preferring the smaller index.
 */
class SparseTableRMQ {
public:
    SparseTableRMQ() = default;
    explicit SparseTableRMQ(std::vector<int64_t> keys);

    size_t size() const { return keys_.size(); }
    int64_t key(size_t i) const { return keys_[i]; }
    size_t query(size_t i, size_t j) const;

    // Number of stored argmin cells.
    size_t cells() const;

private:
    size_t better(size_t a, size_t b) const {
        return keys_[b] < keys_[a] || (keys_[b] == keys_[a] && b < a) ? b : a;
    }

    std::vector<int64_t> keys_;
    std::vector<std::vector<uint32_t>> levels_;  // levels_[k][i]: argmin of [i, i + 2^k)
};

}  // namespace plo
