#include "abacus/serialization.hpp"

#include "abacus/error.hpp"

#include <limits>

namespace nlohmann {

void adl_serializer<abacus::Natural>::to_json(json& j, const abacus::Natural& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) {
    j = static_cast<std::uint64_t>(n);
  } else {
    j = abacus::to_decimal(n);
  }
}

void adl_serializer<abacus::Natural>::from_json(const json& j, abacus::Natural& n) {
  if (j.is_number_unsigned()) {
    n = j.get<std::uint64_t>();
  } else if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    n = j.get<std::int64_t>();
  } else if (j.is_string()) {
    n = abacus::parse_natural(j.get<std::string>());
  } else {
    throw abacus::DomainError(abacus::ErrorCode::InvalidArgument,
                              "expected a non-negative integer, got " + j.dump());
  }
}

}  // namespace nlohmann

namespace abacus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::size_t rod_of(const json& j) { return j.at("rod").get<std::size_t>(); }

// Decomposition addends travel rank-weighted; a weighted addend a*10^k with
// a in 1..9 determines its rod unambiguously.
std::pair<std::size_t, int> unweight(const Natural& weighted) {
  if (weighted <= 0) throw DomainError(ErrorCode::InvalidArgument, "addends are positive");
  Natural v = weighted;
  std::size_t rod = 0;
  while (v % 10 == 0) {
    v /= 10;
    ++rod;
  }
  if (v > 9) throw DomainError(ErrorCode::InvalidArgument, "addend " + to_decimal(weighted) + " spans rods");
  return {rod, static_cast<int>(v)};
}

json decomposition_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& g : d) {
    json group = json::array();
    for (int a : g.addends) group.push_back(power_of_ten(g.rod) * a);
    out.push_back(std::move(group));
  }
  return out;
}

Decomposition decomposition_from(const json& j) {
  Decomposition d;
  for (const auto& group : j) {
    AddendGroup g;
    bool first = true;
    for (const auto& item : group) {
      const auto [rod, a] = unweight(item.get<Natural>());
      if (!first && rod != g.rod) {
        throw DomainError(ErrorCode::InvalidArgument, "an addend group stays on one rod");
      }
      g.rod = rod;
      g.addends.push_back(a);
      first = false;
    }
    d.push_back(std::move(g));
  }
  return d;
}

Register infer_register(const std::vector<Gesture>& gestures) {
  for (const auto& g : gestures) {
    if (std::holds_alternative<MoveLower>(g) || std::holds_alternative<MoveUpper>(g) ||
        std::holds_alternative<CompoundMove>(g)) {
      return Register::MaterialAbacus;
    }
  }
  return Register::VirtualAbacus;
}

}  // namespace

void to_json(json& j, const AbacusConfig& config) {
  json rods = json::array();
  for (const auto& r : config.rods()) rods.push_back({{"lower", r.lower}, {"upper", r.upper}});
  j = {{"rods", std::move(rods)}};
}

void from_json(const json& j, AbacusConfig& config) {
  std::vector<RodState> rods;
  for (const auto& r : j.at("rods")) rods.push_back(RodState{r.at("lower").get<int>(), r.at("upper").get<int>()});
  config = AbacusConfig(std::move(rods));
}

void to_json(json& j, const Register& reg) { j = std::string(to_string(reg)); }
void from_json(const json& j, Register& reg) { reg = parse_register(j.get<std::string>()); }

void to_json(json& j, const Gesture& gesture) {
  j = {{"type", std::string(gesture_type(gesture))}};
  std::visit(overloaded{
                 [&](const ClickLower& g) { j["rod"] = g.rod, j["bead"] = g.bead; },
                 [&](const ClickUpper& g) { j["rod"] = g.rod, j["bead"] = g.bead; },
                 [&](const MoveLower& g) { j["rod"] = g.rod, j["delta"] = g.delta; },
                 [&](const MoveUpper& g) { j["rod"] = g.rod, j["delta"] = g.delta; },
                 [&](const CompoundMove& g) {
                   j["rod"] = g.rod;
                   j["lower_delta"] = g.lower_delta;
                   j["upper_delta"] = g.upper_delta;
                 },
                 [&](const ExchangeFive& g) { j["rod"] = g.rod; },
                 [&](const IconSetZero&) {},
                 [&](const IconPositioning&) {},
                 [&](const IconSeeNumber& g) { j["on"] = g.on; },
             },
             gesture);
}

void from_json(const json& j, Gesture& gesture) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "ClickLower") {
    gesture = ClickLower{rod_of(j), j.at("bead").get<int>()};
  } else if (type == "ClickUpper") {
    gesture = ClickUpper{rod_of(j), j.at("bead").get<int>()};
  } else if (type == "MoveLower") {
    gesture = MoveLower{rod_of(j), j.at("delta").get<int>()};
  } else if (type == "MoveUpper") {
    gesture = MoveUpper{rod_of(j), j.at("delta").get<int>()};
  } else if (type == "CompoundMove") {
    gesture = CompoundMove{rod_of(j), j.at("lower_delta").get<int>(), j.at("upper_delta").get<int>()};
  } else if (type == "ExchangeFive") {
    gesture = ExchangeFive{rod_of(j)};
  } else if (type == "IconSetZero") {
    gesture = IconSetZero{};
  } else if (type == "IconPositioning") {
    gesture = IconPositioning{};
  } else if (type == "IconSeeNumber") {
    gesture = IconSeeNumber{j.value("on", true)};
  } else {
    throw DomainError(ErrorCode::InvalidArgument, "unknown gesture type: " + type);
  }
}

void to_json(json& j, const Trace& trace) {
  json gestures = json::array();
  for (std::size_t i = 0; i < trace.gestures.size(); ++i) {
    json g = trace.gestures[i];
    if (i < trace.timestamps_ms.size() && trace.timestamps_ms[i]) g["t_ms"] = *trace.timestamps_ms[i];
    gestures.push_back(std::move(g));
  }
  j = {{"register", trace.reg},
       {"see_number_initially_on", trace.see_number_initially_on},
       {"gestures", std::move(gestures)}};
  if (trace.target) j["target"] = *trace.target;
}

void from_json(const json& j, Trace& trace) {
  trace = Trace{};
  const json& gestures = j.is_array() ? j : j.at("gestures");
  bool timed = false;
  for (const auto& g : gestures) {
    trace.gestures.push_back(g.get<Gesture>());
    std::optional<std::int64_t> t;
    if (g.contains("t_ms")) {
      t = g.at("t_ms").get<std::int64_t>();
      timed = true;
    }
    trace.timestamps_ms.push_back(t);
  }
  if (!timed) trace.timestamps_ms.clear();
  if (j.is_object() && j.contains("register")) {
    trace.reg = j.at("register").get<Register>();
  } else {
    trace.reg = infer_register(trace.gestures);
  }
  if (j.is_object()) {
    if (j.contains("target") && !j.at("target").is_null()) trace.target = j.at("target").get<Natural>();
    trace.see_number_initially_on = j.value("see_number_initially_on", false);
  }
}

void to_json(json& j, const ReasoningTag& tag) { j = std::string(to_string(tag)); }
void from_json(const json& j, ReasoningTag& tag) { tag = parse_reasoning_tag(j.get<std::string>()); }

void to_json(json& j, const TechniqueReport& report) {
  j = {{"technique_id", report.technique_id},
       {"tags", report.tags},
       {"decomposition", decomposition_json(report.decomposition)},
       {"formula", report.formula},
       {"correct", report.correct},
       {"notes", report.notes}};
  if (!report.rods.empty()) {
    json rods = json::array();
    for (const auto& r : report.rods) {
      rods.push_back({{"rod", r.rod}, {"tags", r.tags}, {"decomposition", decomposition_json(r.decomposition)}});
    }
    j["rods"] = std::move(rods);
  }
}

void from_json(const json& j, TechniqueReport& report) {
  report = TechniqueReport{};
  report.technique_id = j.at("technique_id").get<std::string>();
  report.tags = j.at("tags").get<std::set<ReasoningTag>>();
  report.decomposition = decomposition_from(j.at("decomposition"));
  report.formula = j.at("formula").get<std::string>();
  report.correct = j.at("correct").get<bool>();
  report.notes = j.value("notes", std::vector<std::string>{});
  if (j.contains("rods")) {
    for (const auto& r : j.at("rods")) {
      report.rods.push_back(RodReport{r.at("rod").get<std::size_t>(), r.at("tags").get<std::set<ReasoningTag>>(),
                                      decomposition_from(r.at("decomposition"))});
    }
  }
}

void to_json(json& j, const Language& lang) { j = std::string(to_string(lang)); }
void from_json(const json& j, Language& lang) { lang = parse_language(j.get<std::string>()); }

void to_json(json& j, const Term& term) {
  if (term.base) {
    j = {{"product", {term.factor, *term.base}}};
  } else {
    j = {{"atom", term.factor}};
  }
}

void to_json(json& j, const NumeralForm& form) {
  j = {{"value", form.value},
       {"language", form.language},
       {"words", form.words},
       {"terms", form.terms},
       {"formula", form.formula}};
}

void to_json(json& j, const HandShape& shape) {
  j = {{"left", shape.left}, {"right", shape.right}};
  if (shape.fingers) j["fingers"] = *shape.fingers;
}

void from_json(const json& j, HandShape& shape) {
  shape.left = j.at("left").get<int>();
  shape.right = j.at("right").get<int>();
  shape.fingers.reset();
  if (j.contains("fingers")) shape.fingers = j.at("fingers").get<std::array<bool, 10>>();
  if (!shape.valid()) throw DomainError(ErrorCode::InvalidArgument, "invalid hand shape " + j.dump());
}

void to_json(json& j, const FingerDecomposition& decomposition) {
  j = {{"system", std::string(to_string(decomposition.system))},
       {"value", decomposition.value},
       {"hands", decomposition.hands},
       {"formula", decomposition.formula}};
}

}  // namespace abacus
