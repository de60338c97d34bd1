#include "abacus/worksheet.hpp"

#include "abacus/error.hpp"

#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace abacus {

namespace {

struct Frame {
  double width;
  double height;
  double beam_y;
};

std::string num(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << v;
  return out.str();
}

Frame frame_of(std::size_t rods, const Theme& t) {
  const double upper_span = kUpperBeads * t.bead_pitch + t.clearance + t.bead_radius;
  const double lower_span = kLowerBeads * t.bead_pitch + t.clearance + t.bead_radius;
  return Frame{2 * t.margin + static_cast<double>(rods) * t.rod_spacing,
               2 * t.margin + upper_span + lower_span + t.beam_thickness,
               t.margin + upper_span + t.beam_thickness / 2};
}

double rod_x(std::size_t rod, std::size_t rods, const Theme& t) {
  return t.margin + (static_cast<double>(rods - 1 - rod) + 0.5) * t.rod_spacing;
}

// Centre of a bead, measured from the beam: active beads rest against it,
// inactive ones sit one clearance further away.
double bead_y(const Frame& f, const Theme& t, bool upper, int slot, bool active) {
  const double distance = t.beam_thickness / 2 + t.bead_radius + (slot - 1) * t.bead_pitch +
                          (active ? 0.0 : t.clearance);
  return upper ? f.beam_y - distance : f.beam_y + distance;
}

// Frame, rods and beam; kept in every style so positions stay readable.
void draw_frame(std::ostringstream& svg, const Frame& f, std::size_t rods, const Theme& t) {
  svg << "<rect class=\"frame\" x=\"" << num(t.margin / 2) << "\" y=\"" << num(t.margin / 2)
      << "\" width=\"" << num(f.width - t.margin) << "\" height=\"" << num(f.height - t.margin)
      << "\" fill=\"none\" stroke=\"#5a3a1a\" stroke-width=\"3\"/>\n";
  for (std::size_t k = 0; k < rods; ++k) {
    const double x = rod_x(k, rods, t);
    svg << "<line class=\"rod\" data-rod=\"" << k << "\" x1=\"" << num(x) << "\" y1=\"" << num(t.margin / 2)
        << "\" x2=\"" << num(x) << "\" y2=\"" << num(f.height - t.margin / 2)
        << "\" stroke=\"#8a6a4a\" stroke-width=\"2\"/>\n";
  }
  svg << "<rect class=\"beam\" x=\"" << num(t.margin / 2) << "\" y=\"" << num(f.beam_y - t.beam_thickness / 2)
      << "\" width=\"" << num(f.width - t.margin) << "\" height=\"" << num(t.beam_thickness)
      << "\" fill=\"#5a3a1a\"/>\n";
}

void draw_bead(std::ostringstream& svg, double x, double y, const Theme& t, std::size_t rod,
               std::string_view part, int slot, bool active) {
  svg << "<circle class=\"bead " << (active ? "active" : "inactive") << "\" data-rod=\"" << rod
      << "\" data-part=\"" << part << "\" data-slot=\"" << slot << "\" cx=\"" << num(x) << "\" cy=\""
      << num(y) << "\" r=\"" << num(t.bead_radius) << "\" fill=\"" << (active ? "#c0392b" : "#ffffff")
      << "\" stroke=\"#333333\"/>\n";
}

struct Fragment {
  std::string body;
  json structure;
  Frame frame;
};

Fragment draw(const AbacusConfig& config, DrawingStyle style, const Theme& t) {
  const std::size_t rods = config.rod_count();
  const Frame f = frame_of(rods, t);
  std::ostringstream svg;
  draw_frame(svg, f, rods, t);

  json rod_list = json::array();
  for (std::size_t k = 0; k < rods; ++k) {
    const RodState& r = config.rod(k);
    const double x = rod_x(k, rods, t);
    json entry = {{"rod", k}};
    switch (style) {
      case DrawingStyle::FullBeads: {
        json glyphs = json::array();
        for (int s = 1; s <= kUpperBeads; ++s) {
          const bool on = s <= r.upper;
          draw_bead(svg, x, bead_y(f, t, true, s, on), t, k, "upper", s, on);
          glyphs.push_back({{"part", "upper"}, {"slot", s}, {"active", on}});
        }
        for (int s = 1; s <= kLowerBeads; ++s) {
          const bool on = s <= r.lower;
          draw_bead(svg, x, bead_y(f, t, false, s, on), t, k, "lower", s, on);
          glyphs.push_back({{"part", "lower"}, {"slot", s}, {"active", on}});
        }
        entry["glyphs"] = std::move(glyphs);
        break;
      }
      case DrawingStyle::ActivatedOnly: {
        json glyphs = json::array();
        for (int s = 1; s <= r.upper; ++s) {
          draw_bead(svg, x, bead_y(f, t, true, s, true), t, k, "upper", s, true);
          glyphs.push_back({{"offset", -s}});
        }
        for (int s = 1; s <= r.lower; ++s) {
          draw_bead(svg, x, bead_y(f, t, false, s, true), t, k, "lower", s, true);
          glyphs.push_back({{"offset", s}});
        }
        entry["glyphs"] = std::move(glyphs);
        break;
      }
      case DrawingStyle::Symbolic: {
        json strokes = json::array();
        auto stroke = [&](bool upper, int length) {
          const double y0 = upper ? f.beam_y - t.beam_thickness / 2 : f.beam_y + t.beam_thickness / 2;
          const double y1 = bead_y(f, t, upper, length, true) + (upper ? -t.bead_radius : t.bead_radius);
          svg << "<line class=\"stroke\" data-rod=\"" << k << "\" data-part=\"" << (upper ? "upper" : "lower")
              << "\" data-length=\"" << length << "\" x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\""
              << num(x) << "\" y2=\"" << num(y1) << "\" stroke=\"#c0392b\" stroke-width=\"5\"/>\n";
          svg << "<text x=\"" << num(x + t.bead_radius) << "\" y=\"" << num((y0 + y1) / 2)
              << "\" font-size=\"10\">" << length << "</text>\n";
          strokes.push_back({{"part", upper ? "upper" : "lower"}, {"length", length}});
        };
        if (r.upper > 0) stroke(true, r.upper);
        if (r.lower > 0) stroke(false, r.lower);
        entry["strokes"] = std::move(strokes);
        break;
      }
    }
    rod_list.push_back(std::move(entry));
  }
  json structure = {{"style", style}, {"rod_count", rods}, {"rods", std::move(rod_list)}};
  return Fragment{svg.str(), std::move(structure), f};
}

[[noreturn]] void malformed(const std::string& why) { throw DomainError(ErrorCode::MalformedDrawing, why); }

int int_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name) || !j.at(name).is_number_integer()) {
    malformed(std::string("missing integer field '") + name + "'");
  }
  return j.at(name).get<int>();
}

// Active slots 1..n of one rod part, each given once.
int contiguous_run(const std::vector<int>& slots, int beads, const std::string& where) {
  std::set<int> seen(slots.begin(), slots.end());
  if (seen.size() != slots.size()) malformed(where + ": a bead is drawn twice");
  if (static_cast<int>(slots.size()) > beads) {
    malformed(where + ": " + std::to_string(slots.size()) + " beads drawn, the part has " + std::to_string(beads));
  }
  int expected = 1;
  for (int s : seen) {
    if (s != expected++) malformed(where + ": activated beads must touch the beam");
  }
  return static_cast<int>(slots.size());
}

RodState parse_rod(const json& entry, DrawingStyle style, std::size_t rod) {
  const std::string where = "rod " + std::to_string(rod);
  switch (style) {
    case DrawingStyle::FullBeads: {
      if (!entry.contains("glyphs") || !entry.at("glyphs").is_array()) malformed(where + ": no glyphs");
      std::vector<int> upper, lower;
      std::set<std::pair<std::string, int>> drawn;
      for (const auto& g : entry.at("glyphs")) {
        if (!g.contains("part") || !g.at("part").is_string() || !g.contains("active") ||
            !g.at("active").is_boolean()) {
          malformed(where + ": glyph needs part and active");
        }
        const std::string part = g.at("part").get<std::string>();
        const int slot = int_field(g, "slot");
        const int beads = part == "upper" ? kUpperBeads : part == "lower" ? kLowerBeads : -1;
        if (beads < 0) malformed(where + ": unknown part '" + part + "'");
        if (slot < 1 || slot > beads) malformed(where + ": no " + part + " slot " + std::to_string(slot));
        if (!drawn.emplace(part, slot).second) malformed(where + ": a bead is drawn twice");
        if (g.at("active").get<bool>()) (part == "upper" ? upper : lower).push_back(slot);
      }
      if (drawn.size() != static_cast<std::size_t>(kUpperBeads + kLowerBeads)) {
        malformed(where + ": full drawings show all " + std::to_string(kUpperBeads + kLowerBeads) + " beads");
      }
      return RodState{contiguous_run(lower, kLowerBeads, where), contiguous_run(upper, kUpperBeads, where)};
    }
    case DrawingStyle::ActivatedOnly: {
      if (!entry.contains("glyphs") || !entry.at("glyphs").is_array()) malformed(where + ": no glyphs");
      std::vector<int> upper, lower;
      for (const auto& g : entry.at("glyphs")) {
        if (!g.is_object() || !g.contains("offset")) {
          throw DomainError(ErrorCode::AmbiguousDrawing, where + ": glyph without a position");
        }
        const int offset = int_field(g, "offset");
        if (offset == 0) throw DomainError(ErrorCode::AmbiguousDrawing, where + ": glyph drawn on the beam");
        (offset < 0 ? upper : lower).push_back(offset < 0 ? -offset : offset);
      }
      return RodState{contiguous_run(lower, kLowerBeads, where), contiguous_run(upper, kUpperBeads, where)};
    }
    case DrawingStyle::Symbolic: {
      if (!entry.contains("strokes") || !entry.at("strokes").is_array()) malformed(where + ": no strokes");
      RodState r;
      bool has_upper = false, has_lower = false;
      for (const auto& s : entry.at("strokes")) {
        if (!s.contains("part") || !s.at("part").is_string()) malformed(where + ": stroke without part");
        const std::string part = s.at("part").get<std::string>();
        const int length = int_field(s, "length");
        if (part == "upper") {
          if (has_upper || length < 1 || length > kUpperBeads) malformed(where + ": bad upper stroke");
          has_upper = true;
          r.upper = length;
        } else if (part == "lower") {
          if (has_lower || length < 1 || length > kLowerBeads) malformed(where + ": bad lower stroke");
          has_lower = true;
          r.lower = length;
        } else {
          malformed(where + ": unknown part '" + part + "'");
        }
      }
      return r;
    }
  }
  return {};
}

std::string svg_document(double width, double height, const std::string& body) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
      << body << "</svg>\n";
  return out.str();
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(DrawingStyle style) {
  switch (style) {
    case DrawingStyle::FullBeads: return "FULL_BEADS";
    case DrawingStyle::ActivatedOnly: return "ACTIVATED_ONLY";
    case DrawingStyle::Symbolic: return "SYMBOLIC";
  }
  return "?";
}

DrawingStyle parse_drawing_style(std::string_view name) {
  for (auto s : {DrawingStyle::FullBeads, DrawingStyle::ActivatedOnly, DrawingStyle::Symbolic}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError(ErrorCode::InvalidArgument, "unknown drawing style: " + std::string(name));
}

void to_json(json& j, const DrawingStyle& style) { j = std::string(to_string(style)); }
void from_json(const json& j, DrawingStyle& style) { style = parse_drawing_style(j.get<std::string>()); }

Drawing render(const AbacusConfig& config, DrawingStyle style, const Theme& theme) {
  Fragment fragment = draw(config, style, theme);
  return Drawing{svg_document(fragment.frame.width, fragment.frame.height, fragment.body),
                 std::move(fragment.structure)};
}

AbacusConfig parse_drawing(const json& structure) {
  if (!structure.is_object() || !structure.contains("style") || !structure.at("style").is_string()) {
    malformed("drawing has no style");
  }
  DrawingStyle style;
  try {
    style = parse_drawing_style(structure.at("style").get<std::string>());
  } catch (const DomainError& e) {
    malformed(e.what());
  }
  const int rod_count = int_field(structure, "rod_count");
  if (rod_count < 1) malformed("drawing needs at least one rod");
  if (!structure.contains("rods") || !structure.at("rods").is_array()) malformed("drawing has no rods");

  std::vector<RodState> rods(static_cast<std::size_t>(rod_count));
  std::vector<bool> seen(rods.size(), false);
  for (const auto& entry : structure.at("rods")) {
    const int rod = int_field(entry, "rod");
    if (rod < 0 || rod >= rod_count) malformed("rod index " + std::to_string(rod) + " outside the frame");
    if (seen[static_cast<std::size_t>(rod)]) malformed("rod " + std::to_string(rod) + " described twice");
    seen[static_cast<std::size_t>(rod)] = true;
    rods[static_cast<std::size_t>(rod)] = parse_rod(entry, style, static_cast<std::size_t>(rod));
  }
  return AbacusConfig(std::move(rods));
}

WorksheetDocument worksheet_generate(const WorksheetSpec& spec, const Theme& theme) {
  if (spec.rod_count == 0) throw DomainError(ErrorCode::InvalidSpec, "worksheet needs at least one rod");

  struct Prepared {
    const WorksheetItem* item;
    AbacusConfig printed;
    AbacusConfig answer;
  };
  std::vector<Prepared> prepared;
  for (std::size_t i = 0; i < spec.items.size(); ++i) {
    const WorksheetItem& item = spec.items[i];
    if (item.kind == ItemKind::Set) {
      if (!item.target) throw DomainError(ErrorCode::InvalidSpec, "SET item " + std::to_string(i) + " has no target");
      prepared.push_back({&item, AbacusConfig(spec.rod_count), set_economical(*item.target, spec.rod_count)});
    } else {
      if (!item.printed) throw DomainError(ErrorCode::InvalidSpec, "READ item " + std::to_string(i) + " has no config");
      if (item.printed->rod_count() != spec.rod_count) {
        throw DomainError(ErrorCode::InvalidSpec, "READ item " + std::to_string(i) + " has " +
                                                      std::to_string(item.printed->rod_count()) + " rods, sheet has " +
                                                      std::to_string(spec.rod_count));
      }
      prepared.push_back({&item, *item.printed, *item.printed});
    }
  }

  // Fisher-Yates over the raw engine output; mt19937_64 is fully specified,
  // so the order is identical on every platform for a given seed.
  std::mt19937_64 engine(spec.seed);
  for (std::size_t i = prepared.size(); i > 1; --i) {
    std::swap(prepared[i - 1], prepared[static_cast<std::size_t>(engine() % i)]);
  }

  WorksheetDocument doc;
  doc.key = json::object();
  const Frame f = frame_of(spec.rod_count, theme);
  const double cell_w = f.width + 2 * theme.margin;
  const double cell_h = f.height + 3 * theme.margin;
  const std::size_t columns = 2;

  std::ostringstream page;
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    const Prepared& p = prepared[i];
    const Fragment fragment = draw(p.printed, p.item->style, theme);
    doc.structures.push_back(fragment.structure);

    const Natural value = read_value(p.answer);
    doc.key[std::to_string(i)] = {{"kind", p.item->kind == ItemKind::Set ? "SET" : "READ"},
                                  {"value", value},
                                  {"config", p.answer}};

    const std::size_t slot = i % kItemsPerPage;
    const double x = static_cast<double>(slot % columns) * cell_w;
    const double y = 2 * theme.margin + static_cast<double>(slot / columns) * cell_h;
    const std::string prompt = p.item->kind == ItemKind::Set ? "Set " + to_decimal(value) + " on the abacus."
                                                             : "Read the number: ________";
    page << "<g class=\"item\" data-index=\"" << i << "\" transform=\"translate(" << num(x) << "," << num(y)
         << ")\">\n"
         << "<text x=\"" << num(theme.margin / 2) << "\" y=\"" << num(theme.margin / 2)
         << "\" font-size=\"12\">" << (i + 1) << ". " << escape(prompt) << "</text>\n"
         << "<g transform=\"translate(0," << num(theme.margin) << ")\">\n"
         << fragment.body << "</g>\n</g>\n";

    if (slot + 1 == kItemsPerPage || i + 1 == prepared.size()) {
      const std::size_t rows = (slot + columns) / columns;
      const std::string heading = "<text x=\"" + num(theme.margin / 2) + "\" y=\"" + num(theme.margin) +
                                  "\" font-size=\"14\">" + escape(spec.title) + "</text>\n";
      doc.pages.push_back(svg_document(columns * cell_w, 2 * theme.margin + static_cast<double>(rows) * cell_h,
                                       heading + page.str()));
      page.str("");
    }
  }
  return doc;
}

void from_json(const json& j, WorksheetSpec& spec) {
  spec = WorksheetSpec{};
  spec.rod_count = j.value("rod_count", kDefaultRodCount);
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.title = j.value("title", spec.title);
  for (const auto& it : j.value("items", json::array())) {
    WorksheetItem item;
    const std::string kind = it.at("kind").get<std::string>();
    if (kind == "SET") {
      item.kind = ItemKind::Set;
      item.target = it.at("target").get<Natural>();
    } else if (kind == "READ") {
      item.kind = ItemKind::Read;
      item.printed = it.at("config").get<AbacusConfig>();
    } else {
      throw DomainError(ErrorCode::InvalidSpec, "unknown worksheet item kind: " + kind);
    }
    item.style = it.value("style", DrawingStyle::FullBeads);
    spec.items.push_back(std::move(item));
  }
}

void to_json(json& j, const WorksheetSpec& spec) {
  json items = json::array();
  for (const auto& item : spec.items) {
    json it = {{"kind", item.kind == ItemKind::Set ? "SET" : "READ"}, {"style", item.style}};
    if (item.target) it["target"] = *item.target;
    if (item.printed) it["config"] = *item.printed;
    items.push_back(std::move(it));
  }
  j = {{"rod_count", spec.rod_count}, {"seed", spec.seed}, {"title", spec.title}, {"items", std::move(items)}};
}

}  // namespace abacus
