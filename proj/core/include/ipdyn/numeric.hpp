#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ipdyn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Narrowing that reports overflow instead of wrapping.
std::optional<std::int64_t> to_int64(const BigInt& value);

/// "3", "-1/2"; denominators of one are omitted.
std::string format_rational(const Rational& value);

}  // namespace ipdyn
