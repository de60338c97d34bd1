#pragma once

#include "abacus/core.hpp"
#include "abacus/gesture.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace abacus {

enum class ReasoningTag { Counting, Ordinality, Calculating, QuantityValue, Exchange, TrialError };

std::string_view to_string(ReasoningTag tag);
ReasoningTag parse_reasoning_tag(std::string_view name);

/// Addends contributed by consecutive gestures on one rod, in rod units
/// (1..5 each). A group of several addends renders in parentheses, e.g. the
/// five one-unit counters later exchanged: (1+1+1+1+1).
struct AddendGroup {
  std::size_t rod = 0;
  std::vector<int> addends;
  friend bool operator==(const AddendGroup&, const AddendGroup&) = default;
};

using Decomposition = std::vector<AddendGroup>;

struct RodReport {
  std::size_t rod = 0;
  std::set<ReasoningTag> tags;
  Decomposition decomposition;
  friend bool operator==(const RodReport&, const RodReport&) = default;
};

namespace notes {
inline constexpr std::string_view kAmbiguousSingleBead = "AmbiguousSingleBead";
inline constexpr std::string_view kSingleGesture = "SingleGesture";
inline constexpr std::string_view kMultiRod = "MultiRod";
}  // namespace notes

struct TechniqueReport {
  std::string technique_id;  // empty when no catalogued technique matches
  std::set<ReasoningTag> tags;
  Decomposition decomposition;
  std::string formula;
  bool correct = false;
  std::vector<std::string> notes;
  std::vector<RodReport> rods;  // filled when the trace touches several rods

  bool has_note(std::string_view note) const;
  friend bool operator==(const TechniqueReport&, const TechniqueReport&) = default;
};

/// Replays the trace from `initial` and labels it. Propagates ReplayError.
TechniqueReport classify(const Trace& trace, const Natural& target, const AbacusConfig& initial);

/// Same, starting from an empty abacus wide enough for the target.
TechniqueReport classify(const Trace& trace, const Natural& target,
                         std::size_t rod_count = kDefaultRodCount);

/// Renders a decomposition as "8=5+3", "25=20+5=(10+10)+5", or a bare "3"
/// for a single addend. With rank weights off, addends stay in rod units.
std::string decomposition_formula(const TechniqueReport& report, bool rank_weights = true);

/// Sum of the decomposition with each addend scaled by its rod's rank.
Natural decomposition_value(const Decomposition& decomposition);

}  // namespace abacus
