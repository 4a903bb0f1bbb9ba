#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace redpow {

/// Unbounded signed integer used for every coefficient, value and count.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal literal; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

}  // namespace redpow
