#include "plo/rational.hpp"

#include <charconv>
#include <numeric>

#include "plo/error.hpp"

namespace plo {

namespace {

int64_t parse_part(std::string_view part, std::string_view whole) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
        throw Error(ErrorCode::BadConfig, "not a rational: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    Rational r;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        r.num = parse_part(text, text);
        r.den = 1;
    } else {
        r.num = parse_part(text.substr(0, slash), text);
        r.den = parse_part(text.substr(slash + 1), text);
    }
    if (r.num <= 0 || r.den <= 0 || r.num > kMaxPart || r.den > kMaxPart) {
        throw Error(ErrorCode::BadConfig,
                    "rational parts must lie in [1, 2^20]: '" + std::string(text) + "'");
    }
    int64_t g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace plo
