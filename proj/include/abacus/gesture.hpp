#pragma once

#include "abacus/core.hpp"
#include "abacus/error.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace abacus {

enum class Register { VirtualAbacus, MaterialAbacus, Worksheet, Fingers, Oral };

std::string_view to_string(Register reg);
Register parse_register(std::string_view name);

// Virtual-register clicks. Bead indices count outward from the beam, 1-based.
struct ClickLower {
  std::size_t rod = 0;
  int bead = 1;
  friend bool operator==(const ClickLower&, const ClickLower&) = default;
};
struct ClickUpper {
  std::size_t rod = 0;
  int bead = 1;
  friend bool operator==(const ClickUpper&, const ClickUpper&) = default;
};

// Material-register single motions of a contiguous run of beads.
struct MoveLower {
  std::size_t rod = 0;
  int delta = 1;
  friend bool operator==(const MoveLower&, const MoveLower&) = default;
};
struct MoveUpper {
  std::size_t rod = 0;
  int delta = 1;
  friend bool operator==(const MoveUpper&, const MoveUpper&) = default;
};
// Both parts of one rod moved in a single gesture (material only).
struct CompoundMove {
  std::size_t rod = 0;
  int lower_delta = 0;
  int upper_delta = 0;
  friend bool operator==(const CompoundMove&, const CompoundMove&) = default;
};

struct ExchangeFive {
  std::size_t rod = 0;
  friend bool operator==(const ExchangeFive&, const ExchangeFive&) = default;
};

struct IconSetZero {
  friend bool operator==(const IconSetZero&, const IconSetZero&) = default;
};
struct IconPositioning {
  friend bool operator==(const IconPositioning&, const IconPositioning&) = default;
};
struct IconSeeNumber {
  bool on = true;
  friend bool operator==(const IconSeeNumber&, const IconSeeNumber&) = default;
};

using Gesture = std::variant<ClickLower, ClickUpper, MoveLower, MoveUpper, CompoundMove,
                             ExchangeFive, IconSetZero, IconPositioning, IconSeeNumber>;

bool is_icon(const Gesture& gesture);
std::string_view gesture_type(const Gesture& gesture);

/// One recorded task attempt.
struct Trace {
  Register reg = Register::VirtualAbacus;
  std::optional<Natural> target;
  std::vector<Gesture> gestures;
  // Either empty or one entry per gesture: milliseconds since attempt start.
  std::vector<std::optional<std::int64_t>> timestamps_ms;
  bool see_number_initially_on = false;
};

bool gesture_legal_in(const Gesture& gesture, Register reg);

/// Applies one gesture to the bead state. Throws IllegalGestureForRegister,
/// OutOfRange (bead bounds, bad rod or bead index) or Overflow (positioning).
/// IconSeeNumber leaves the config untouched.
AbacusConfig apply(const AbacusConfig& config, const Gesture& gesture, Register reg);

struct ReplayResult {
  // history[0] is the initial config; history[i + 1] follows gesture i.
  std::vector<AbacusConfig> history;
  // Whether the digit display is on after each prefix, same indexing.
  std::vector<bool> see_number;

  const AbacusConfig& final_config() const { return history.back(); }
};

/// Raised by replay; identifies the first gesture that could not be applied.
class ReplayError : public DomainError {
 public:
  ReplayError(std::size_t step, ErrorCode cause, const std::string& message)
      : DomainError(ErrorCode::UnreplayableTrace, message), step_(step), cause_(cause) {}

  std::size_t step() const noexcept { return step_; }
  ErrorCode cause() const noexcept { return cause_; }

 private:
  std::size_t step_;
  ErrorCode cause_;
};

ReplayResult replay(const Trace& trace, const AbacusConfig& initial);

/// Bead gestures in the trace; software icons are not counted.
std::size_t gesture_count(const Trace& trace);

}  // namespace abacus
