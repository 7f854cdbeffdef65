#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

using BigInt = boost::multiprecision::cpp_int;

/// A finite run of exact integers (a column, a row-sum sequence, OEIS terms).
using Sequence = std::vector<BigInt>;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer; throws Error(ParseError).
BigInt parse_bigint(std::string_view text);

/// Comma-separated decimal rendering, e.g. "1,1,2,4,9".
std::string format_sequence(const Sequence& seq);

/// Inverse of format_sequence; surrounding whitespace and a trailing comma are
/// tolerated.
Sequence parse_sequence(std::string_view text);

}  // namespace motzkin
