#pragma once

#include "abacus/core.hpp"
#include "abacus/serialization.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abacus {

enum class DrawingStyle {
  FullBeads,      // every bead, activated ones filled
  ActivatedOnly,  // rod frame and beam, plus the activated beads
  Symbolic,       // one stroke per activated run, labelled with its length
};

std::string_view to_string(DrawingStyle style);
DrawingStyle parse_drawing_style(std::string_view name);

/// Geometry of a drawn abacus, in SVG user units.
struct Theme {
  double bead_radius = 9.0;
  double bead_pitch = 20.0;   // distance between neighbouring bead centres
  double rod_spacing = 34.0;
  double beam_thickness = 6.0;
  double clearance = 14.0;    // gap separating inactive beads from active ones
  double margin = 16.0;
};

struct Drawing {
  std::string svg;
  json structure;
};

/// Structure layouts, all with {"style", "rod_count", "rods": [...]}, one
/// entry per rod {"rod": k, ...}:
///   FULL_BEADS      "glyphs": [{"part": "lower"|"upper", "slot": 1.., "active": bool}]
///   ACTIVATED_ONLY  "glyphs": [{"offset": n}], n > 0 below the beam, n < 0 above,
///                   |n| = slot counted from the beam
///   SYMBOLIC        "strokes": [{"part": ..., "length": n}]
Drawing render(const AbacusConfig& config, DrawingStyle style, const Theme& theme = {});

/// Reads back a structural description. Throws MalformedDrawing for
/// impossible bead layouts and AmbiguousDrawing when an ACTIVATED_ONLY glyph
/// cannot be placed above or below the beam.
AbacusConfig parse_drawing(const json& structure);

enum class ItemKind { Set, Read };

struct WorksheetItem {
  ItemKind kind = ItemKind::Read;
  std::optional<Natural> target;        // SET
  std::optional<AbacusConfig> printed;  // READ
  DrawingStyle style = DrawingStyle::FullBeads;
};

struct WorksheetSpec {
  std::vector<WorksheetItem> items;
  std::size_t rod_count = kDefaultRodCount;
  std::uint64_t seed = 0;
  std::string title = "Chinese abacus";
};

struct WorksheetDocument {
  std::vector<std::string> pages;     // one SVG document per page
  json key;                           // {"<index>": {"kind", "value", "config"}}
  std::vector<json> structures;       // printed drawing of each item, document order
};

inline constexpr std::size_t kItemsPerPage = 6;

/// Items are shuffled by `seed`; the same spec and seed give the same bytes.
/// Throws Overflow for SET targets that do not fit on the rods and
/// InvalidSpec for items missing their target or config.
WorksheetDocument worksheet_generate(const WorksheetSpec& spec, const Theme& theme = {});

void to_json(json& j, const DrawingStyle& style);
void from_json(const json& j, DrawingStyle& style);
void from_json(const json& j, WorksheetSpec& spec);
void to_json(json& j, const WorksheetSpec& spec);

}  // namespace abacus
