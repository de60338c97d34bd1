#pragma once

#include "abacus/verbalizer.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abacus {

/// Raised fingers on two hands. When present, `fingers` flags individual
/// fingers: 0..4 are the left hand from thumb to little finger, 5..9 the
/// right hand in the same order.
struct HandShape {
  int left = 0;
  int right = 0;
  std::optional<std::array<bool, 10>> fingers;

  bool valid() const;
  int total() const { return left + right; }
  friend bool operator==(const HandShape&, const HandShape&) = default;
};

enum class FingerSystemName { FrenchStandard, Chambaa, Makonde };

std::string_view to_string(FingerSystemName name);
FingerSystemName parse_finger_system(std::string_view name);

struct FingerSystem {
  FingerSystemName name;
  std::set<int> supported_values;
  std::string description;
};

const FingerSystem& finger_system(FingerSystemName name);

/// Terms grouped by hand, e.g. chambaa 7 = (2+2)+3 is {{2,2},{3}}.
struct FingerDecomposition {
  FingerSystemName system;
  int value = 0;
  std::vector<std::vector<Term>> hands;
  std::string formula;  // "7=(2+2)+3"
};

/// All (left, right) with left + right = n and each hand in 0..5.
/// Throws OutOfRange for n > 10.
std::vector<std::pair<int, int>> enumerate_hand_decompositions(int n);

/// Throws UnsupportedValue outside the system's supported values.
FingerDecomposition cultural_decomposition(int n, FingerSystemName system);

/// Checks which fingers are used against the system's convention. French:
/// raised fingers start at the thumb, first hand filled before the second.
/// Makonde: marked (folded) fingers start at the left little finger.
/// Chambaa: hands hold the groups of the system's decomposition. Returns
/// false when the mask is absent or does not follow the convention.
bool follows_convention(const HandShape& shape, FingerSystemName system);

}  // namespace abacus
