#include "abacus/natural.hpp"

#include "abacus/error.hpp"

namespace abacus {

Natural power_of_ten(std::size_t exponent) {
  Natural result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw DomainError(ErrorCode::InvalidArgument, "empty number");
  Natural result = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw DomainError(ErrorCode::InvalidArgument,
                        "not a non-negative decimal integer: " + std::string(text));
    }
    result = result * 10 + (c - '0');
  }
  return result;
}

}  // namespace abacus
