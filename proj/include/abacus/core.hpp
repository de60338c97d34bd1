#pragma once

#include "abacus/natural.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace abacus {

inline constexpr int kLowerBeads = 5;  // one-unit counters per rod
inline constexpr int kUpperBeads = 2;  // five-unit counters per rod
inline constexpr int kMaxRodValue = kLowerBeads + 5 * kUpperBeads;
inline constexpr std::size_t kDefaultRodCount = 6;

/// Activated counters on one rod. Beads are counted from the beam outward,
/// so `lower == 3` means the three lower beads nearest the beam are up.
struct RodState {
  int lower = 0;
  int upper = 0;

  constexpr bool valid() const noexcept {
    return lower >= 0 && lower <= kLowerBeads && upper >= 0 && upper <= kUpperBeads;
  }
  constexpr int value() const noexcept { return lower + 5 * upper; }
  constexpr int beads() const noexcept { return lower + upper; }

  friend constexpr bool operator==(const RodState&, const RodState&) = default;
  friend constexpr auto operator<=>(const RodState&, const RodState&) = default;
};

/// Full bead state of a suan-pan. Rod 0 is the units rod (rightmost), rod k
/// carries rank 10^k. Every instance satisfies the per-rod bead bounds.
class AbacusConfig {
 public:
  explicit AbacusConfig(std::size_t rod_count = kDefaultRodCount);
  explicit AbacusConfig(std::vector<RodState> rods);

  std::size_t rod_count() const noexcept { return rods_.size(); }
  std::span<const RodState> rods() const noexcept { return rods_; }
  const RodState& rod(std::size_t index) const;

  /// Copy with one rod replaced; validates the new rod.
  AbacusConfig with_rod(std::size_t index, RodState state) const;

  bool is_zero() const noexcept;

  friend bool operator==(const AbacusConfig&, const AbacusConfig&) = default;
  friend auto operator<=>(const AbacusConfig&, const AbacusConfig&) = default;

 private:
  std::vector<RodState> rods_;
};

Natural read_value(const AbacusConfig& config);

/// Sum of activated beads over all rods.
std::size_t bead_count(const AbacusConfig& config);

/// Digit-wise canonical inscription: upper = d / 5, lower = d % 5 per digit.
/// Throws Overflow when n >= 10^rod_count.
AbacusConfig set_economical(const Natural& n, std::size_t rod_count = kDefaultRodCount);

/// What the "positioning" icon does. Throws Overflow when the value of a
/// non-economical config needs more rods than the config has.
AbacusConfig normalize(const AbacusConfig& config);

bool is_economical(const AbacusConfig& config);

/// Visits every valid config on `rod_count` rods whose value is n, in a
/// fixed order (units-rod choices vary slowest). Nothing is visited when n
/// cannot be written as sum v_k 10^k with 0 <= v_k <= 15.
void for_each_inscription(const Natural& n, std::size_t rod_count,
                          const std::function<void(const AbacusConfig&)>& visit);

std::vector<AbacusConfig> enumerate_inscriptions(const Natural& n,
                                                 std::size_t rod_count = kDefaultRodCount);

/// Swaps five activated one-unit counters for one five-unit counter on the
/// same rod. Requires lower == 5 and upper <= 1, else ExchangeUnavailable.
AbacusConfig exchange_five_units(const AbacusConfig& config, std::size_t rod);

/// Swaps two activated five-unit counters on `rod` for one one-unit counter
/// on `rod + 1`. Requires upper == 2 there and room on the next rod.
AbacusConfig exchange_to_next_rod(const AbacusConfig& config, std::size_t rod);

/// All (upper, lower) splits of a rod value, fewest beads first.
std::vector<RodState> rod_splits(int rod_value);

}  // namespace abacus
