#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace plo {

using Wide = __int128;

/*
 * Exact non-negative rational used for the stretch parameter. Numerator and
 * denominator are bounded by 2^20 so that scaled distance comparisons fit in
 * 128-bit integers.
 */
struct Rational {
    int64_t num = 1;
    int64_t den = 2;

    static constexpr int64_t kMaxPart = int64_t(1) << 20;

    // Parses "P/Q" or a bare integer "P".
    static Rational parse(std::string_view text);

    std::string str() const;
    double to_double() const { return double(num) / double(den); }

    // True iff lhs <= (1 + this) * rhs, evaluated exactly.
    bool stretch_leq(uint64_t lhs, uint64_t rhs) const {
        return Wide(den) * Wide(lhs) <= Wide(den + num) * Wide(rhs);
    }
    // True iff (1 + this) * lhs < rhs, evaluated exactly.
    bool scaled_less(uint64_t lhs, int64_t rhs) const {
        return Wide(den + num) * Wide(lhs) < Wide(den) * Wide(rhs);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return Wide(a.num) * b.den == Wide(b.num) * a.den;
    }
};

// Exact comparison of a/b against c/d for non-negative values with b, d > 0.
inline int compare_fractions(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    Wide lhs = Wide(a) * Wide(d);
    Wide rhs = Wide(c) * Wide(b);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace plo
