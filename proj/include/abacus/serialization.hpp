#pragma once

// JSON wire formats shared by the CLI, the HTTP service and trace files.

#include "abacus/classifier.hpp"
#include "abacus/core.hpp"
#include "abacus/fingers.hpp"
#include "abacus/gesture.hpp"
#include "abacus/verbalizer.hpp"

#include "json.hpp"

namespace nlohmann {

// Numbers that fit in 64 bits are plain JSON integers; larger ones are
// decimal strings. Both spellings are accepted on input.
template <>
struct adl_serializer<abacus::Natural> {
  static void to_json(json& j, const abacus::Natural& n);
  static void from_json(const json& j, abacus::Natural& n);
};

}  // namespace nlohmann

namespace abacus {

using json = nlohmann::json;

// {"rods": [{"lower": int, "upper": int}, ...]}, index 0 = units.
void to_json(json& j, const AbacusConfig& config);
void from_json(const json& j, AbacusConfig& config);

void to_json(json& j, const Register& reg);
void from_json(const json& j, Register& reg);

// {"type": "ClickLower", "rod": 0, "bead": 3}, {"type": "MoveLower",
// "rod": 0, "delta": 2}, {"type": "CompoundMove", "rod": 0,
// "lower_delta": 3, "upper_delta": 1}, {"type": "IconSeeNumber", "on": true}.
void to_json(json& j, const Gesture& gesture);
void from_json(const json& j, Gesture& gesture);

// {"register", "target"?, "see_number_initially_on", "gestures": [...]},
// where each gesture may carry "t_ms". A bare JSON array of gestures is
// also accepted; its register is inferred from the gesture kinds.
void to_json(json& j, const Trace& trace);
void from_json(const json& j, Trace& trace);

void to_json(json& j, const ReasoningTag& tag);
void from_json(const json& j, ReasoningTag& tag);

// {technique_id, tags, decomposition, formula, correct, notes, rods?}. The
// decomposition is an array of addend groups, each an array of rank-weighted
// addends: [[1,1,1,1,1],[3]] or [[10],[10],[5]].
void to_json(json& j, const TechniqueReport& report);
void from_json(const json& j, TechniqueReport& report);

void to_json(json& j, const Language& lang);
void from_json(const json& j, Language& lang);

// Terms as {"atom": 3} or {"product": [3, 20]}.
void to_json(json& j, const Term& term);
void to_json(json& j, const NumeralForm& form);

// {left, right, fingers?: [10 booleans]}
void to_json(json& j, const HandShape& shape);
void from_json(const json& j, HandShape& shape);
void to_json(json& j, const FingerDecomposition& decomposition);

}  // namespace abacus
