#include "plo/rank_bitvector.hpp"

#include "plo/error.hpp"

namespace plo {

void RankBitvector::set(size_t i, bool value) {
    if (i >= length_) throw Error(ErrorCode::BadIndex, "bit index out of range");
    if (value) {
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    } else {
        words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
}

void RankBitvector::finalize() {
    prefix_.assign(words_.size() + 1, 0);
    for (size_t w = 0; w < words_.size(); ++w) {
        prefix_[w + 1] = prefix_[w] + uint32_t(std::popcount(words_[w]));
    }
}

size_t RankBitvector::rank(size_t i) const {
    if (i > length_) throw Error(ErrorCode::BadIndex, "rank position out of range");
    const size_t w = i >> 6;
    const size_t r = i & 63;
    size_t count = prefix_[w];
    if (r) count += size_t(std::popcount(words_[w] & ((uint64_t(1) << r) - 1)));
    return count;
}

}  // namespace plo
