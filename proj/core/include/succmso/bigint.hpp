#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace succmso {

using BigInt = boost::multiprecision::cpp_int;

/// Number of bits needed to write `value` in binary (0 for 0). `value` must be nonnegative.
std::size_t bit_length(const BigInt& value);

BigInt pow2(std::size_t exponent);

/// Decimal string to BigInt; rejects signs, empty strings and non-digits.
BigInt parse_decimal(std::string_view text);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Narrowing conversion that throws BadParam instead of truncating.
std::uint64_t to_u64(const BigInt& value, std::string_view what);

} // namespace succmso
