#include "abacus/classifier.hpp"

#include "abacus/error.hpp"

#include <algorithm>
#include <optional>

namespace abacus {

namespace {

constexpr ReasoningTag kAllTags[] = {ReasoningTag::Counting,      ReasoningTag::Ordinality,
                                     ReasoningTag::Calculating,   ReasoningTag::QuantityValue,
                                     ReasoningTag::Exchange,      ReasoningTag::TrialError};

// What a bead gesture did to its rod, as seen by the technique catalogue.
enum class EventKind { Step, Block, Five, Compound, Exchange, Rebuild };

struct Event {
  EventKind kind;
  std::size_t rod;
};

struct Group {
  std::size_t rod;
  std::vector<int> addends;
  bool from_step;  // a single +1 lower activation
};

struct RodContext {
  int run_length = 0;         // current run of +1 lower steps
  bool run_after_five = false;
  bool five_pending = false;  // last event was a five-unit activation
  std::set<ReasoningTag> tags;
  bool touched = false;
};

class Analyzer {
 public:
  Analyzer(std::size_t rod_count) : rods_(rod_count) {}

  void seed(const AbacusConfig& initial) {
    for (std::size_t k = 0; k < initial.rod_count(); ++k) emit_blocks(k, initial.rod(k));
  }

  void step(std::size_t rod) {
    RodContext& c = touch(rod);
    if (c.run_length == 0) {
      c.run_after_five = c.five_pending;
      c.five_pending = false;
    }
    ++c.run_length;
    groups_.push_back(Group{rod, {1}, true});
    events_.push_back({EventKind::Step, rod});
  }

  void block(std::size_t rod, int beads) {
    RodContext& c = touch(rod);
    close_run(rod);
    if (c.five_pending) {
      tag(rod, ReasoningTag::Calculating);
      c.five_pending = false;
    } else {
      tag(rod, ReasoningTag::Ordinality);
    }
    groups_.push_back(Group{rod, {beads}, false});
    events_.push_back({EventKind::Block, rod});
  }

  void five(std::size_t rod, int counters) {
    RodContext& c = touch(rod);
    close_run(rod);
    close_five(rod);
    for (int i = 0; i < counters; ++i) groups_.push_back(Group{rod, {5}, false});
    c.five_pending = true;
    events_.push_back({EventKind::Five, rod});
  }

  void compound(std::size_t rod, int lower, int counters) {
    touch(rod);
    close_run(rod);
    close_five(rod);
    tag(rod, ReasoningTag::Calculating);
    for (int i = 0; i < counters; ++i) groups_.push_back(Group{rod, {5}, false});
    groups_.push_back(Group{rod, {lower}, false});
    events_.push_back({EventKind::Compound, rod});
  }

  void exchange(std::size_t rod) {
    touch(rod);
    close_run(rod);
    close_five(rod);
    tag(rod, ReasoningTag::Exchange);
    // Five one-by-one activations just exchanged become one group.
    std::vector<std::size_t> mine;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      if (groups_[i].rod == rod) mine.push_back(i);
    }
    if (mine.size() >= 5) {
      const std::vector<std::size_t> last(mine.end() - 5, mine.end());
      const bool stepped = std::all_of(last.begin(), last.end(), [&](std::size_t i) {
        return groups_[i].from_step && groups_[i].addends == std::vector<int>{1};
      });
      if (stepped) {
        groups_[last.front()] = Group{rod, {1, 1, 1, 1, 1}, false};
        for (auto it = last.rbegin(); it + 1 != last.rend(); ++it) {
          groups_.erase(groups_.begin() + static_cast<std::ptrdiff_t>(*it));
        }
      }
    }
    events_.push_back({EventKind::Exchange, rod});
  }

  // Rod state changed by a correction or an icon: its earlier addends no
  // longer describe it, so they are replaced by the rod's current beads.
  void rebuild(std::size_t rod, const RodState& state) {
    touch(rod);
    close_run(rod);
    close_five(rod);
    std::erase_if(groups_, [&](const Group& g) { return g.rod == rod; });
    emit_blocks(rod, state);
    events_.push_back({EventKind::Rebuild, rod});
  }

  void trial_error(std::optional<std::size_t> rod) {
    tags_.insert(ReasoningTag::TrialError);
    if (rod) touch(*rod).tags.insert(ReasoningTag::TrialError);
  }

  void finish() {
    for (std::size_t k = 0; k < rods_.size(); ++k) {
      close_run(k);
      close_five(k);
    }
  }

  void note(std::string_view text) {
    if (std::find(notes_.begin(), notes_.end(), text) == notes_.end()) notes_.emplace_back(text);
  }

  const std::set<ReasoningTag>& tags() const { return tags_; }
  const std::vector<Event>& events() const { return events_; }
  std::vector<std::string>& notes() { return notes_; }

  Decomposition decomposition(std::optional<std::size_t> only_rod = std::nullopt) const {
    Decomposition out;
    for (const auto& g : groups_) {
      if (!only_rod || g.rod == *only_rod) out.push_back(AddendGroup{g.rod, g.addends});
    }
    return out;
  }

  std::vector<RodReport> rod_reports() const {
    std::vector<RodReport> out;
    for (std::size_t k = 0; k < rods_.size(); ++k) {
      if (rods_[k].touched) out.push_back(RodReport{k, rods_[k].tags, decomposition(k)});
    }
    return out;
  }

  std::size_t touched_rods() const {
    return static_cast<std::size_t>(
        std::count_if(rods_.begin(), rods_.end(), [](const RodContext& c) { return c.touched; }));
  }

 private:
  RodContext& touch(std::size_t rod) {
    rods_[rod].touched = true;
    return rods_[rod];
  }

  void tag(std::size_t rod, ReasoningTag t) {
    tags_.insert(t);
    rods_[rod].tags.insert(t);
  }

  void emit_blocks(std::size_t rod, const RodState& state) {
    for (int i = 0; i < state.upper; ++i) groups_.push_back(Group{rod, {5}, false});
    if (state.lower > 0) groups_.push_back(Group{rod, {state.lower}, false});
  }

  void close_run(std::size_t rod) {
    RodContext& c = rods_[rod];
    if (c.run_length >= 2) {
      tag(rod, ReasoningTag::Counting);
      if (c.run_after_five) tag(rod, ReasoningTag::QuantityValue);
    } else if (c.run_length == 1) {
      // One bead in one gesture: counting and ordinality look the same.
      if (c.run_after_five) tag(rod, ReasoningTag::Calculating);
      note(notes::kAmbiguousSingleBead);
    }
    c.run_length = 0;
    c.run_after_five = false;
  }

  void close_five(std::size_t rod) {
    RodContext& c = rods_[rod];
    if (c.five_pending) tag(rod, ReasoningTag::QuantityValue);
    c.five_pending = false;
  }

  std::vector<RodContext> rods_;
  std::vector<Group> groups_;
  std::vector<Event> events_;
  std::set<ReasoningTag> tags_;
  std::vector<std::string> notes_;
};

bool deactivates(const AbacusConfig& before, const AbacusConfig& after) {
  for (std::size_t k = 0; k < before.rod_count(); ++k) {
    if (after.rod(k).lower < before.rod(k).lower || after.rod(k).upper < before.rod(k).upper) {
      return true;
    }
  }
  return false;
}

// Index into the history from which the value equals the target for good;
// history.size() when the final value is wrong.
std::size_t settle_index(const ReplayResult& replayed, const Natural& target) {
  std::size_t settle = replayed.history.size();
  for (std::size_t i = replayed.history.size(); i-- > 0;) {
    if (read_value(replayed.history[i]) != target) break;
    settle = i;
  }
  return settle;
}

std::string signature(const std::vector<Event>& events, std::size_t rod, bool& other_rods) {
  std::string sig;
  for (const auto& e : events) {
    if (e.rod != rod) {
      other_rods = true;
      continue;
    }
    switch (e.kind) {
      case EventKind::Step: sig += 's'; break;
      case EventKind::Block: sig += 'b'; break;
      case EventKind::Five: sig += 'f'; break;
      case EventKind::Compound: sig += 'c'; break;
      case EventKind::Exchange: sig += 'x'; break;
      case EventKind::Rebuild: sig += 'r'; break;
    }
  }
  return sig;
}

// Technique catalogue. Targets with one non-zero digit d follow the
// "set 3" table (d < 5) or the "set 8" table (d >= 5) on that digit's rod;
// targets with several non-zero digits follow the "set 73" table, which
// labels the final inscription.
std::string technique_id(const std::set<ReasoningTag>& tags, Register reg, bool correct,
                         const Natural& target, const AbacusConfig& final_config,
                         const std::vector<Event>& events) {
  std::vector<std::pair<std::size_t, int>> digits;
  Natural rest = target;
  for (std::size_t k = 0; rest > 0; ++k) {
    const int d = static_cast<int>(rest % 10);
    rest /= 10;
    if (d != 0) digits.emplace_back(k, d);
  }
  const bool five_family = digits.size() == 1 && digits.front().second >= 5;

  if (tags.contains(ReasoningTag::TrialError)) {
    if (reg != Register::VirtualAbacus) return "";
    return five_family ? "RVA_T6" : "RVA_T3";
  }
  if (!correct || digits.empty()) return "";
  if (digits.size() > 1) return is_economical(final_config) ? "RA_T1" : "RA_T2";

  const auto [rod, digit] = digits.front();
  bool other_rods = false;
  const std::string sig = signature(events, rod, other_rods);
  if (other_rods) return "";

  if (digit < 5) {
    if (digit >= 2 && sig == std::string(static_cast<std::size_t>(digit), 's')) return "RA_T1";
    if (digit >= 2 && sig == "b") return "RA_T2";
    return "";
  }
  const int extra = digit - 5;
  const std::string ones(static_cast<std::size_t>(extra), 's');
  if (extra >= 1 && (sig == "fb" || sig == "fs")) return "RA_T1";
  if (extra >= 2 && sig == "f" + ones) return "RA_T2";
  if (sig == "sssssx" + ones) return "RA_T3";
  if (extra >= 2 && sig == "sssssxb") return "RA_T4";
  if (extra >= 1 && sig == "c") return "RMA_T5";
  return "";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string_view to_string(ReasoningTag tag) {
  switch (tag) {
    case ReasoningTag::Counting: return "COUNTING";
    case ReasoningTag::Ordinality: return "ORDINALITY";
    case ReasoningTag::Calculating: return "CALCULATING";
    case ReasoningTag::QuantityValue: return "QUANTITY_VALUE";
    case ReasoningTag::Exchange: return "EXCHANGE";
    case ReasoningTag::TrialError: return "TRIAL_ERROR";
  }
  return "?";
}

ReasoningTag parse_reasoning_tag(std::string_view name) {
  for (auto tag : kAllTags) {
    if (to_string(tag) == name) return tag;
  }
  throw DomainError(ErrorCode::InvalidArgument, "unknown reasoning tag: " + std::string(name));
}

bool TechniqueReport::has_note(std::string_view note) const {
  return std::find(notes.begin(), notes.end(), note) != notes.end();
}

TechniqueReport classify(const Trace& trace, const Natural& target, const AbacusConfig& initial) {
  const ReplayResult replayed = replay(trace, initial);
  const AbacusConfig& final_config = replayed.final_config();
  const std::size_t settle = settle_index(replayed, target);

  Analyzer analyzer(initial.rod_count());
  analyzer.seed(initial);

  std::size_t compounds = 0;
  for (std::size_t s = 0; s < trace.gestures.size(); ++s) {
    const Gesture& g = trace.gestures[s];
    const AbacusConfig& before = replayed.history[s];
    const AbacusConfig& after = replayed.history[s + 1];
    // Gesture s produced history[s + 1]; anything up to the settle point
    // happened while the student was still searching.
    const bool searching = s + 1 <= settle;

    if (std::holds_alternative<IconSeeNumber>(g)) {
      if (searching) analyzer.trial_error(std::nullopt);
      continue;
    }
    if (std::holds_alternative<IconSetZero>(g) || std::holds_alternative<IconPositioning>(g)) {
      if (searching && std::holds_alternative<IconSetZero>(g) && !before.is_zero()) {
        analyzer.trial_error(std::nullopt);
      }
      for (std::size_t k = 0; k < after.rod_count(); ++k) {
        if (before.rod(k) != after.rod(k)) analyzer.rebuild(k, after.rod(k));
      }
      continue;
    }
    if (const auto* x = std::get_if<ExchangeFive>(&g)) {
      analyzer.exchange(x->rod);
      continue;
    }

    const std::size_t rod = std::visit(
        [](const auto& v) -> std::size_t {
          if constexpr (requires { v.rod; }) return v.rod;
          else return 0;
        },
        g);
    const int dl = after.rod(rod).lower - before.rod(rod).lower;
    const int du = after.rod(rod).upper - before.rod(rod).upper;

    if (dl < 0 || du < 0) {
      if (searching && deactivates(before, after)) analyzer.trial_error(rod);
      analyzer.rebuild(rod, after.rod(rod));
    } else if (dl > 0 && du > 0) {
      ++compounds;
      analyzer.compound(rod, dl, du);
    } else if (du > 0) {
      analyzer.five(rod, du);
    } else if (dl == 1) {
      analyzer.step(rod);
    } else if (dl > 1) {
      analyzer.block(rod, dl);
    }
  }
  analyzer.finish();

  TechniqueReport report;
  report.correct = read_value(final_config) == target;
  report.tags = analyzer.tags();
  report.decomposition = analyzer.decomposition();
  if (compounds == 1 && gesture_count(trace) == 1) analyzer.note(notes::kSingleGesture);
  if (analyzer.touched_rods() > 1) {
    analyzer.note(notes::kMultiRod);
    report.rods = analyzer.rod_reports();
  }
  report.notes = analyzer.notes();
  report.technique_id = technique_id(report.tags, trace.reg, report.correct, target, final_config,
                                     analyzer.events());
  report.formula = decomposition_formula(report, true);
  return report;
}

TechniqueReport classify(const Trace& trace, const Natural& target, std::size_t rod_count) {
  std::size_t rods = rod_count == 0 ? 1 : rod_count;
  while (target >= power_of_ten(rods)) ++rods;
  return classify(trace, target, AbacusConfig(rods));
}

Natural decomposition_value(const Decomposition& decomposition) {
  Natural total = 0;
  for (const auto& g : decomposition) {
    const Natural weight = power_of_ten(g.rod);
    for (int a : g.addends) total += weight * a;
  }
  return total;
}

std::string decomposition_formula(const TechniqueReport& report, bool rank_weights) {
  const Decomposition& parts = report.decomposition;
  auto scaled = [&](const AddendGroup& g, int a) -> Natural {
    return rank_weights ? power_of_ten(g.rod) * a : Natural(a);
  };
  auto render_group = [&](const AddendGroup& g) {
    std::vector<std::string> items;
    for (int a : g.addends) items.push_back(to_decimal(scaled(g, a)));
    return items.size() > 1 ? "(" + join(items) + ")" : join(items);
  };

  Natural total = 0;
  std::size_t addends = 0;
  for (const auto& g : parts) {
    for (int a : g.addends) total += scaled(g, a);
    addends += g.addends.size();
  }
  const std::string annotation = report.has_note(notes::kSingleGesture) ? " (one gesture)" : "";
  if (addends <= 1) return to_decimal(total) + annotation;

  // Maximal runs of groups on the same rod.
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (segments.empty() || parts[segments.back().first].rod != parts[i].rod) {
      segments.emplace_back(i, i + 1);
    } else {
      segments.back().second = i + 1;
    }
  }

  std::string formula = to_decimal(total) + "=";
  if (!rank_weights || segments.size() == 1) {
    std::vector<std::string> items;
    for (const auto& g : parts) items.push_back(render_group(g));
    return formula + join(items) + annotation;
  }

  std::vector<std::string> sums, details;
  for (const auto& [begin, end] : segments) {
    Natural sum = 0;
    std::vector<std::string> items;
    for (std::size_t i = begin; i < end; ++i) {
      for (int a : parts[i].addends) sum += scaled(parts[i], a);
      items.push_back(render_group(parts[i]));
    }
    sums.push_back(to_decimal(sum));
    const std::string body = join(items);
    details.push_back(end - begin > 1 ? "(" + body + ")" : body);
  }
  const std::string middle = join(sums);
  const std::string detail = join(details);
  formula += middle;
  if (detail != middle) formula += "=" + detail;
  return formula + annotation;
}

}  // namespace abacus
