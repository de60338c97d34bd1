#include "abacus/error.hpp"
#include "abacus/kernels.hpp"
#include "abacus/serialization.hpp"
#include "abacus/worksheet.hpp"

#include <gtest/gtest.h>

using namespace abacus;

namespace {

constexpr DrawingStyle kStyles[] = {DrawingStyle::FullBeads, DrawingStyle::ActivatedOnly, DrawingStyle::Symbolic};

ErrorCode code_of(const json& structure) {
  try {
    parse_drawing(structure);
  } catch (const DomainError& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed " << structure.dump();
  return ErrorCode::NotFound;
}

}  // namespace

TEST(Render, ExhaustiveRoundTripOnTwoRods) {
  for (DrawingStyle style : kStyles) {
    for (std::uint64_t i = 0; i < kernels::config_space(2); ++i) {
      const AbacusConfig c = kernels::config_from_index(i, 2);
      EXPECT_EQ(parse_drawing(render(c, style).structure), c) << to_string(style) << " " << i;
    }
  }
}

TEST(Render, ThreeStylesForThree) {
  const auto three = set_economical(3, 1);
  const auto full = render(three, DrawingStyle::FullBeads).structure;
  EXPECT_EQ(full["rods"][0]["glyphs"].size(), 7u);
  const auto activated = render(three, DrawingStyle::ActivatedOnly).structure;
  EXPECT_EQ(activated["rods"][0]["glyphs"].size(), 3u);
  const auto symbolic = render(three, DrawingStyle::Symbolic).structure;
  ASSERT_EQ(symbolic["rods"][0]["strokes"].size(), 1u);
  EXPECT_EQ(symbolic["rods"][0]["strokes"][0]["length"], 3);
  EXPECT_NE(render(three, DrawingStyle::FullBeads).svg.find("<svg"), std::string::npos);
}

TEST(ParseDrawing, Malformed) {
  EXPECT_EQ(code_of(json::object()), ErrorCode::MalformedDrawing);
  auto s = render(set_economical(3, 1), DrawingStyle::Symbolic).structure;
  s["rods"][0]["strokes"][0]["length"] = 6;
  EXPECT_EQ(code_of(s), ErrorCode::MalformedDrawing);
  auto g = render(set_economical(3, 1), DrawingStyle::ActivatedOnly).structure;
  g["rods"][0]["glyphs"][2]["offset"] = 5;  // slots 1, 2, 5: a gap
  EXPECT_EQ(code_of(g), ErrorCode::MalformedDrawing);
}

TEST(ParseDrawing, AmbiguousActivatedGlyph) {
  auto g = render(set_economical(3, 1), DrawingStyle::ActivatedOnly).structure;
  g["rods"][0]["glyphs"][0].erase("offset");
  EXPECT_EQ(code_of(g), ErrorCode::AmbiguousDrawing);
  g["rods"][0]["glyphs"][0]["offset"] = 0;
  EXPECT_EQ(code_of(g), ErrorCode::AmbiguousDrawing);
}

TEST(Worksheet, DeterministicForSeed) {
  WorksheetSpec spec;
  spec.rod_count = 2;
  spec.seed = 42;
  for (int n : {3, 8, 25, 73}) spec.items.push_back({ItemKind::Set, Natural(n), std::nullopt, DrawingStyle::FullBeads});
  spec.items.push_back({ItemKind::Read, std::nullopt, AbacusConfig(std::vector<RodState>{{5, 2}, {1, 0}}),
                        DrawingStyle::ActivatedOnly});
  for (int n : {1, 2, 4}) spec.items.push_back({ItemKind::Set, Natural(n), std::nullopt, DrawingStyle::Symbolic});

  const auto a = worksheet_generate(spec);
  const auto b = worksheet_generate(spec);
  EXPECT_EQ(a.pages, b.pages);
  EXPECT_EQ(a.key, b.key);
  EXPECT_EQ(a.pages.size(), 2u);
  EXPECT_EQ(a.key.size(), 8u);

  spec.seed = 43;
  EXPECT_NE(worksheet_generate(spec).key, a.key);
}

TEST(Worksheet, KeyMatchesPrintedDrawings) {
  WorksheetSpec spec;
  spec.rod_count = 2;
  spec.seed = 1;
  spec.items.push_back({ItemKind::Read, std::nullopt, AbacusConfig(std::vector<RodState>{{5, 0}, {2, 0}}),
                        DrawingStyle::FullBeads});
  spec.items.push_back({ItemKind::Set, Natural(73), std::nullopt, DrawingStyle::FullBeads});
  const auto doc = worksheet_generate(spec);
  for (std::size_t i = 0; i < doc.structures.size(); ++i) {
    const json& entry = doc.key[std::to_string(i)];
    const AbacusConfig printed = parse_drawing(doc.structures[i]);
    if (entry["kind"] == "READ") {
      EXPECT_EQ(read_value(printed), entry["value"].get<Natural>());
    } else {
      EXPECT_TRUE(printed.is_zero());
      EXPECT_EQ(entry["config"].get<AbacusConfig>(), set_economical(73, 2));
    }
  }
}

TEST(Worksheet, Errors) {
  WorksheetSpec spec;
  spec.rod_count = 2;
  spec.items.push_back({ItemKind::Set, Natural(100), std::nullopt, DrawingStyle::FullBeads});
  try {
    worksheet_generate(spec);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
  spec.items = {{ItemKind::Read, std::nullopt, std::nullopt, DrawingStyle::FullBeads}};
  EXPECT_THROW(worksheet_generate(spec), DomainError);
}

TEST(Worksheet, SpecJson) {
  const json j = json::parse(R"({"rod_count": 2, "seed": 9, "items": [
    {"kind": "SET", "target": 25, "style": "SYMBOLIC"},
    {"kind": "READ", "config": {"rods": [{"lower": 5, "upper": 0}, {"lower": 2, "upper": 0}]}}]})");
  const auto spec = j.get<WorksheetSpec>();
  ASSERT_EQ(spec.items.size(), 2u);
  EXPECT_EQ(spec.items[0].style, DrawingStyle::Symbolic);
  EXPECT_EQ(json(spec).get<WorksheetSpec>().items[1].printed, spec.items[1].printed);
}
