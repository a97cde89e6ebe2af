#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace plo {

/*
 * Bit array with a popcount prefix per 64-bit word, so rank is one table read
 * plus one masked popcount.
 */
class RankBitvector {
public:
    RankBitvector() = default;
    explicit RankBitvector(size_t length) : length_(length), words_((length + 63) / 64, 0) {}

    size_t size() const { return length_; }
    size_t words() const { return words_.size(); }

    void set(size_t i, bool value = true);
    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    // Call after the last set() and before rank().
    void finalize();

    // Number of set bits at positions < i, for 0 <= i <= size().
    size_t rank(size_t i) const;

private:
    size_t length_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint32_t> prefix_;
};

}  // namespace plo
