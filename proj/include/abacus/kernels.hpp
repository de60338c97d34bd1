#pragma once

// Exhaustive scans over value ranges and configuration spaces. Each kernel
// exists twice: `serial` is the reference, `parallel` splits the outer loop
// with OpenMP. Both must agree exactly; the tests hold them to that.

#include "abacus/core.hpp"
#include "abacus/worksheet.hpp"

#include <cstdint>

namespace abacus::kernels {

struct MinimalityStats {
  std::uint64_t checked = 0;      // values n scanned
  std::uint64_t inscriptions = 0; // configs enumerated over all n
  std::uint64_t missing = 0;      // economical form absent from the enumeration
  std::uint64_t violations = 0;   // another inscription uses fewer beads
  std::uint64_t ties = 0;         // another inscription uses as many beads

  friend bool operator==(const MinimalityStats&, const MinimalityStats&) = default;
};

/// 18^rods: every (lower, upper) choice on every rod.
std::uint64_t config_space(std::size_t rods);

/// Mixed-radix decoding of 0 <= index < config_space(rods).
AbacusConfig config_from_index(std::uint64_t index, std::size_t rods);

namespace serial {

MinimalityStats economical_minimality(std::size_t rods, std::uint64_t begin, std::uint64_t end);
std::uint64_t roundtrip_failures(std::size_t rods, std::uint64_t begin, std::uint64_t end);
std::uint64_t drawing_roundtrip_failures(std::size_t rods, DrawingStyle style);

}  // namespace serial

namespace parallel {

MinimalityStats economical_minimality(std::size_t rods, std::uint64_t begin, std::uint64_t end);
std::uint64_t roundtrip_failures(std::size_t rods, std::uint64_t begin, std::uint64_t end);
std::uint64_t drawing_roundtrip_failures(std::size_t rods, DrawingStyle style);

/// Worker count OpenMP will use; 1 when built without OpenMP.
int max_threads();

}  // namespace parallel

}  // namespace abacus::kernels
