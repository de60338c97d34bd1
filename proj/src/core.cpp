#include "abacus/core.hpp"

#include "abacus/error.hpp"

#include <string>

namespace abacus {

namespace {

void check_rod(const RodState& rod, std::size_t index) {
  if (!rod.valid()) {
    throw DomainError(ErrorCode::InvalidConfig,
                      "rod " + std::to_string(index) + " has lower=" + std::to_string(rod.lower) +
                          " upper=" + std::to_string(rod.upper));
  }
}

// Largest value representable by `rods` rods when every rod holds 15.
Natural capacity(std::size_t rods) {
  return (power_of_ten(rods) - 1) / 9 * kMaxRodValue;
}

}  // namespace

AbacusConfig::AbacusConfig(std::size_t rod_count) : rods_(rod_count) {
  if (rod_count == 0) throw DomainError(ErrorCode::InvalidConfig, "an abacus needs at least one rod");
}

AbacusConfig::AbacusConfig(std::vector<RodState> rods) : rods_(std::move(rods)) {
  if (rods_.empty()) throw DomainError(ErrorCode::InvalidConfig, "an abacus needs at least one rod");
  for (std::size_t k = 0; k < rods_.size(); ++k) check_rod(rods_[k], k);
}

const RodState& AbacusConfig::rod(std::size_t index) const {
  if (index >= rods_.size()) {
    throw DomainError(ErrorCode::OutOfRange, "no rod " + std::to_string(index) + " on a " +
                                                 std::to_string(rods_.size()) + "-rod abacus");
  }
  return rods_[index];
}

AbacusConfig AbacusConfig::with_rod(std::size_t index, RodState state) const {
  rod(index);
  check_rod(state, index);
  AbacusConfig copy = *this;
  copy.rods_[index] = state;
  return copy;
}

bool AbacusConfig::is_zero() const noexcept {
  for (const auto& r : rods_) {
    if (r.lower != 0 || r.upper != 0) return false;
  }
  return true;
}

Natural read_value(const AbacusConfig& config) {
  Natural value = 0;
  const auto rods = config.rods();
  for (std::size_t k = rods.size(); k-- > 0;) value = value * 10 + rods[k].value();
  return value;
}

std::size_t bead_count(const AbacusConfig& config) {
  std::size_t count = 0;
  for (const auto& r : config.rods()) count += static_cast<std::size_t>(r.beads());
  return count;
}

AbacusConfig set_economical(const Natural& n, std::size_t rod_count) {
  if (rod_count == 0) throw DomainError(ErrorCode::InvalidConfig, "an abacus needs at least one rod");
  if (n < 0 || n >= power_of_ten(rod_count)) {
    throw DomainError(ErrorCode::Overflow,
                      to_decimal(n) + " does not fit on " + std::to_string(rod_count) + " rods");
  }
  std::vector<RodState> rods(rod_count);
  Natural rest = n;
  for (std::size_t k = 0; k < rod_count; ++k) {
    const int digit = static_cast<int>(rest % 10);
    rest /= 10;
    rods[k] = RodState{digit % 5, digit / 5};
  }
  return AbacusConfig(std::move(rods));
}

AbacusConfig normalize(const AbacusConfig& config) {
  return set_economical(read_value(config), config.rod_count());
}

bool is_economical(const AbacusConfig& config) {
  for (const auto& r : config.rods()) {
    if (r.upper > 1 || r.lower > 4) return false;
  }
  return true;
}

std::vector<RodState> rod_splits(int rod_value) {
  std::vector<RodState> splits;
  for (int upper = kUpperBeads; upper >= 0; --upper) {
    const int lower = rod_value - 5 * upper;
    if (lower >= 0 && lower <= kLowerBeads) splits.push_back(RodState{lower, upper});
  }
  return splits;
}

void for_each_inscription(const Natural& n, std::size_t rod_count,
                          const std::function<void(const AbacusConfig&)>& visit) {
  if (rod_count == 0 || n < 0 || n > capacity(rod_count)) return;

  // First pass: choose a value 0..15 per rod, lowest rank first. Rod k must
  // absorb the remainder mod 10, optionally plus ten borrowed from above.
  std::vector<std::vector<int>> rod_values;
  std::vector<int> current(rod_count);
  auto choose = [&](auto&& self, std::size_t k, const Natural& rest) -> void {
    if (k + 1 == rod_count) {
      if (rest <= kMaxRodValue) {
        current[k] = static_cast<int>(rest);
        rod_values.push_back(current);
      }
      return;
    }
    if (rest > capacity(rod_count - k)) return;
    const int digit = static_cast<int>(rest % 10);
    for (int v = digit; v <= kMaxRodValue; v += 10) {
      if (rest < v) break;
      current[k] = v;
      self(self, k + 1, (rest - v) / 10);
    }
  };
  choose(choose, 0, n);

  // Second pass: expand each rod value into its bead splits.
  std::vector<RodState> rods(rod_count);
  for (const auto& values : rod_values) {
    auto expand = [&](auto&& self, std::size_t k) -> void {
      if (k == rod_count) {
        visit(AbacusConfig(rods));
        return;
      }
      for (const RodState& split : rod_splits(values[k])) {
        rods[k] = split;
        self(self, k + 1);
      }
    };
    expand(expand, 0);
  }
}

std::vector<AbacusConfig> enumerate_inscriptions(const Natural& n, std::size_t rod_count) {
  std::vector<AbacusConfig> out;
  for_each_inscription(n, rod_count, [&](const AbacusConfig& c) { out.push_back(c); });
  return out;
}

AbacusConfig exchange_five_units(const AbacusConfig& config, std::size_t rod) {
  const RodState& r = config.rod(rod);
  if (r.lower != kLowerBeads || r.upper >= kUpperBeads) {
    throw DomainError(ErrorCode::ExchangeUnavailable,
                      "exchanging five one-unit counters on rod " + std::to_string(rod) +
                          " needs 5 active lower beads and a free five-unit counter");
  }
  return config.with_rod(rod, RodState{0, r.upper + 1});
}

AbacusConfig exchange_to_next_rod(const AbacusConfig& config, std::size_t rod) {
  const RodState& r = config.rod(rod);
  if (r.upper != kUpperBeads || rod + 1 >= config.rod_count() ||
      config.rod(rod + 1).lower >= kLowerBeads) {
    throw DomainError(ErrorCode::ExchangeUnavailable,
                      "exchanging two five-unit counters on rod " + std::to_string(rod) +
                          " needs both active and a free one-unit counter on the next rod");
  }
  const RodState& next = config.rod(rod + 1);
  return config.with_rod(rod, RodState{r.lower, 0})
      .with_rod(rod + 1, RodState{next.lower + 1, next.upper});
}

}  // namespace abacus
