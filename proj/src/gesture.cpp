#include "abacus/gesture.hpp"

#include <string>

namespace abacus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

int toggle_run(int active, int bead, int beads_on_part, std::size_t rod) {
  if (bead < 1 || bead > beads_on_part) {
    throw DomainError(ErrorCode::OutOfRange, "rod " + std::to_string(rod) + " has no bead " +
                                                 std::to_string(bead) + " on that part");
  }
  return bead > active ? bead : bead - 1;
}

int shifted(int active, int delta, int beads_on_part, std::size_t rod) {
  if (delta == 0 || delta < -beads_on_part || delta > beads_on_part) {
    throw DomainError(ErrorCode::OutOfRange, "move of " + std::to_string(delta) + " beads");
  }
  const int next = active + delta;
  if (next < 0 || next > beads_on_part) {
    throw DomainError(ErrorCode::OutOfRange, "rod " + std::to_string(rod) + " cannot move " +
                                                 std::to_string(delta) + " beads from " +
                                                 std::to_string(active));
  }
  return next;
}

}  // namespace

std::string_view to_string(Register reg) {
  switch (reg) {
    case Register::VirtualAbacus: return "VIRTUAL_ABACUS";
    case Register::MaterialAbacus: return "MATERIAL_ABACUS";
    case Register::Worksheet: return "WORKSHEET";
    case Register::Fingers: return "FINGERS";
    case Register::Oral: return "ORAL";
  }
  return "?";
}

Register parse_register(std::string_view name) {
  for (auto reg : {Register::VirtualAbacus, Register::MaterialAbacus, Register::Worksheet,
                   Register::Fingers, Register::Oral}) {
    if (to_string(reg) == name) return reg;
  }
  if (name == "R_VA") return Register::VirtualAbacus;
  if (name == "R_MA") return Register::MaterialAbacus;
  throw DomainError(ErrorCode::InvalidArgument, "unknown register: " + std::string(name));
}

bool is_icon(const Gesture& gesture) {
  return std::holds_alternative<IconSetZero>(gesture) ||
         std::holds_alternative<IconPositioning>(gesture) ||
         std::holds_alternative<IconSeeNumber>(gesture);
}

std::string_view gesture_type(const Gesture& gesture) {
  return std::visit(overloaded{
                        [](const ClickLower&) { return std::string_view("ClickLower"); },
                        [](const ClickUpper&) { return std::string_view("ClickUpper"); },
                        [](const MoveLower&) { return std::string_view("MoveLower"); },
                        [](const MoveUpper&) { return std::string_view("MoveUpper"); },
                        [](const CompoundMove&) { return std::string_view("CompoundMove"); },
                        [](const ExchangeFive&) { return std::string_view("ExchangeFive"); },
                        [](const IconSetZero&) { return std::string_view("IconSetZero"); },
                        [](const IconPositioning&) { return std::string_view("IconPositioning"); },
                        [](const IconSeeNumber&) { return std::string_view("IconSeeNumber"); },
                    },
                    gesture);
}

bool gesture_legal_in(const Gesture& gesture, Register reg) {
  const bool is_virtual = reg == Register::VirtualAbacus;
  const bool is_material = reg == Register::MaterialAbacus;
  return std::visit(overloaded{
                        [&](const ClickLower&) { return is_virtual; },
                        [&](const ClickUpper&) { return is_virtual; },
                        [&](const MoveLower&) { return is_material; },
                        [&](const MoveUpper&) { return is_material; },
                        [&](const CompoundMove&) { return is_material; },
                        [&](const ExchangeFive&) { return is_virtual || is_material; },
                        [&](const IconSetZero&) { return is_virtual; },
                        [&](const IconPositioning&) { return is_virtual; },
                        [&](const IconSeeNumber&) { return is_virtual; },
                    },
                    gesture);
}

AbacusConfig apply(const AbacusConfig& config, const Gesture& gesture, Register reg) {
  if (!gesture_legal_in(gesture, reg)) {
    throw DomainError(ErrorCode::IllegalGestureForRegister,
                      std::string(gesture_type(gesture)) + " is not available in " +
                          std::string(to_string(reg)));
  }
  return std::visit(
      overloaded{
          [&](const ClickLower& g) {
            RodState r = config.rod(g.rod);
            r.lower = toggle_run(r.lower, g.bead, kLowerBeads, g.rod);
            return config.with_rod(g.rod, r);
          },
          [&](const ClickUpper& g) {
            RodState r = config.rod(g.rod);
            r.upper = toggle_run(r.upper, g.bead, kUpperBeads, g.rod);
            return config.with_rod(g.rod, r);
          },
          [&](const MoveLower& g) {
            RodState r = config.rod(g.rod);
            r.lower = shifted(r.lower, g.delta, kLowerBeads, g.rod);
            return config.with_rod(g.rod, r);
          },
          [&](const MoveUpper& g) {
            RodState r = config.rod(g.rod);
            r.upper = shifted(r.upper, g.delta, kUpperBeads, g.rod);
            return config.with_rod(g.rod, r);
          },
          [&](const CompoundMove& g) {
            RodState r = config.rod(g.rod);
            r.lower = shifted(r.lower, g.lower_delta, kLowerBeads, g.rod);
            r.upper = shifted(r.upper, g.upper_delta, kUpperBeads, g.rod);
            return config.with_rod(g.rod, r);
          },
          [&](const ExchangeFive& g) { return exchange_five_units(config, g.rod); },
          [&](const IconSetZero&) { return AbacusConfig(config.rod_count()); },
          [&](const IconPositioning&) { return normalize(config); },
          [&](const IconSeeNumber&) { return config; },
      },
      gesture);
}

ReplayResult replay(const Trace& trace, const AbacusConfig& initial) {
  ReplayResult result;
  result.history.reserve(trace.gestures.size() + 1);
  result.history.push_back(initial);
  result.see_number.push_back(trace.see_number_initially_on);
  for (std::size_t i = 0; i < trace.gestures.size(); ++i) {
    const Gesture& g = trace.gestures[i];
    try {
      result.history.push_back(apply(result.history.back(), g, trace.reg));
    } catch (const DomainError& e) {
      throw ReplayError(i, e.code(),
                        "step " + std::to_string(i) + " (" + std::string(gesture_type(g)) +
                            "): " + e.what());
    }
    bool shown = result.see_number.back();
    if (const auto* see = std::get_if<IconSeeNumber>(&g)) shown = see->on;
    result.see_number.push_back(shown);
  }
  return result;
}

std::size_t gesture_count(const Trace& trace) {
  std::size_t count = 0;
  for (const auto& g : trace.gestures) {
    if (!is_icon(g)) ++count;
  }
  return count;
}

}  // namespace abacus
