#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace abacus {

/// Non-negative integer of unbounded size. Abacus values grow with the
/// number of rods, so no fixed width is assumed anywhere in the library.
using Natural = boost::multiprecision::cpp_int;

/// 10^exponent.
Natural power_of_ten(std::size_t exponent);

/// Parses a plain decimal string ("0", "73", ...). Throws DomainError
/// (InvalidArgument) on signs, blanks or non-digits.
Natural parse_natural(std::string_view text);

inline std::string to_decimal(const Natural& n) { return n.str(); }

}  // namespace abacus
