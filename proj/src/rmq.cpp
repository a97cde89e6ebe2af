#include "plo/rmq.hpp"

#include <bit>

#include "plo/error.hpp"

namespace plo {

SparseTableRMQ::SparseTableRMQ(std::vector<int64_t> keys) : keys_(std::move(keys)) {
    const size_t n = keys_.size();
    if (n == 0) return;
    levels_.emplace_back(n);
    for (size_t i = 0; i < n; ++i) levels_[0][i] = uint32_t(i);
    for (size_t k = 1; (size_t(1) << k) <= n; ++k) {
        const size_t half = size_t(1) << (k - 1);
        const auto& prev = levels_[k - 1];
        std::vector<uint32_t> level(n - (size_t(1) << k) + 1);
        for (size_t i = 0; i < level.size(); ++i) {
            level[i] = uint32_t(better(prev[i], prev[i + half]));
        }
        levels_.push_back(std::move(level));
    }
}

size_t SparseTableRMQ::query(size_t i, size_t j) const {
    if (i > j || j >= keys_.size()) {
        throw Error(ErrorCode::BadRange, "rmq range [" + std::to_string(i) + ", " +
                                             std::to_string(j) + "] over " +
                                             std::to_string(keys_.size()) + " keys");
    }
    const size_t k = std::bit_width(j - i + 1) - 1;
    return better(levels_[k][i], levels_[k][j + 1 - (size_t(1) << k)]);
}

size_t SparseTableRMQ::cells() const {
    size_t total = 0;
    for (const auto& level : levels_) total += level.size();
    return total;
}

}  // namespace plo
