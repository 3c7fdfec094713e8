#include "succmso/bigint.hpp"

#include "succmso/error.hpp"

namespace succmso {

std::size_t bit_length(const BigInt& value) {
    if (value <= 0) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(value)) + 1;
}

BigInt pow2(std::size_t exponent) {
    BigInt out = 1;
    out <<= exponent;
    return out;
}

BigInt parse_decimal(std::string_view text) {
    if (text.empty()) fail(ErrorCode::kBadParam, "empty decimal string");
    BigInt out = 0;
    for (char c : text) {
        if (c < '0' || c > '9') fail(ErrorCode::kBadParam, "not a decimal integer: '" + std::string(text) + "'");
        out *= 10;
        out += c - '0';
    }
    return out;
}

std::uint64_t to_u64(const BigInt& value, std::string_view what) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
        fail(ErrorCode::kBadParam, std::string(what) + " does not fit in 64 bits");
    return value.convert_to<std::uint64_t>();
}

} // namespace succmso
