#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace twobridge {

using BigInt = boost::multiprecision::cpp_int;

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);

// Floor division and the matching non-negative remainder (b > 0 for mod).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod(const BigInt& a, const BigInt& m);

/// Inverse of a modulo m in [0, m), or nullopt when gcd(a, m) != 1.
std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& m);

std::string to_string(const BigInt& a);

/// Parses an optionally signed decimal integer; throws ParseError.
BigInt parse_bigint(std::string_view text);

/// nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const BigInt& a);

}  // namespace twobridge
