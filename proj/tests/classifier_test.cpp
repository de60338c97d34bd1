#include "abacus/classifier.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace abacus;
using Tags = std::set<ReasoningTag>;
using enum ReasoningTag;

namespace {

constexpr auto VA = Register::VirtualAbacus;
constexpr auto MA = Register::MaterialAbacus;

Trace trace(Register reg, std::vector<Gesture> g) {
  Trace t;
  t.reg = reg;
  t.gestures = std::move(g);
  return t;
}

std::vector<Gesture> ones(std::size_t rod, int n) {
  std::vector<Gesture> out;
  for (int i = 0; i < n; ++i) out.push_back(MoveLower{rod, 1});
  return out;
}

std::vector<Gesture> cat(std::vector<std::vector<Gesture>> parts) {
  std::vector<Gesture> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

TEST(SetEight, T1CalculatingTwoGestures) {
  const auto r = classify(trace(MA, {MoveUpper{0, 1}, MoveLower{0, 3}}), 8, 1);
  EXPECT_EQ(r.technique_id, "RA_T1");
  EXPECT_EQ(r.tags, Tags{Calculating});
  EXPECT_EQ(r.formula, "8=5+3");
  EXPECT_TRUE(r.correct);
}

TEST(SetEight, T1OnVirtualAbacus) {
  const auto r = classify(trace(VA, {ClickUpper{0, 1}, ClickLower{0, 3}}), 8, 1);
  EXPECT_EQ(r.technique_id, "RA_T1");
  EXPECT_EQ(r.formula, "8=5+3");
}

TEST(SetEight, T2OverCount) {
  const auto r = classify(trace(MA, cat({{MoveUpper{0, 1}}, ones(0, 3)})), 8, 1);
  EXPECT_EQ(r.technique_id, "RA_T2");
  EXPECT_EQ(r.tags, (Tags{QuantityValue, Counting}));
  EXPECT_EQ(r.formula, "8=5+1+1+1");
}

TEST(SetEight, T3CountingWithExchange) {
  const auto r = classify(trace(MA, cat({ones(0, 5), {ExchangeFive{0}}, ones(0, 3)})), 8, 1);
  EXPECT_EQ(r.technique_id, "RA_T3");
  EXPECT_EQ(r.tags, (Tags{Counting, Exchange}));
  EXPECT_EQ(r.formula, "8=(1+1+1+1+1)+1+1+1");
  ASSERT_EQ(r.decomposition.size(), 4u);
  EXPECT_EQ(r.decomposition[0].addends, (std::vector<int>{1, 1, 1, 1, 1}));
}

TEST(SetEight, T4CountingThenOrdinality) {
  const auto r = classify(trace(MA, cat({ones(0, 5), {ExchangeFive{0}, MoveLower{0, 3}}})), 8, 1);
  EXPECT_EQ(r.technique_id, "RA_T4");
  EXPECT_EQ(r.tags, (Tags{Counting, Exchange, Ordinality}));
  EXPECT_EQ(r.formula, "8=(1+1+1+1+1)+3");
}

TEST(SetEight, T5OneGesture) {
  const auto r = classify(trace(MA, {CompoundMove{0, 3, 1}}), 8, 1);
  EXPECT_EQ(r.technique_id, "RMA_T5");
  EXPECT_EQ(r.tags, Tags{Calculating});
  EXPECT_EQ(r.formula, "8=5+3 (one gesture)");
  EXPECT_TRUE(r.has_note(notes::kSingleGesture));
}

TEST(SetEight, T6TrialAndError) {
  const auto r = classify(trace(VA, {IconSeeNumber{true}, ClickLower{0, 5}, ClickUpper{0, 1}, ClickLower{0, 1},
                                     ClickLower{0, 3}}),
                          8, 1);
  EXPECT_EQ(r.technique_id, "RVA_T6");
  EXPECT_TRUE(r.tags.contains(TrialError));
  EXPECT_TRUE(r.correct);
}

TEST(SetThree, Counting) {
  const auto r = classify(trace(VA, {ClickLower{0, 1}, ClickLower{0, 2}, ClickLower{0, 3}}), 3, 1);
  EXPECT_EQ(r.technique_id, "RA_T1");
  EXPECT_EQ(r.tags, Tags{Counting});
  EXPECT_EQ(r.formula, "3=1+1+1");
}

TEST(SetThree, Ordinality) {
  const auto r = classify(trace(VA, {ClickLower{0, 3}}), 3, 1);
  EXPECT_EQ(r.technique_id, "RA_T2");
  EXPECT_EQ(r.tags, Tags{Ordinality});
  EXPECT_EQ(r.formula, "3");
}

TEST(SetThree, TrialAndError) {
  const auto r = classify(trace(VA, {IconSeeNumber{true}, ClickLower{0, 4}, ClickLower{0, 4}}), 3, 1);
  EXPECT_EQ(r.technique_id, "RVA_T3");
  EXPECT_TRUE(r.tags.contains(TrialError));
  EXPECT_TRUE(r.correct);
}

TEST(SetThree, CorrectionCountsAsTrialError) {
  const auto r = classify(trace(VA, {ClickLower{0, 5}, ClickLower{0, 4}}), 3, 1);
  EXPECT_TRUE(r.tags.contains(TrialError));
}

TEST(SetThree, SeeNumberAfterSettlingIsNotTrialError) {
  const auto r = classify(trace(VA, {ClickLower{0, 3}, IconSeeNumber{true}}), 3, 1);
  EXPECT_FALSE(r.tags.contains(TrialError));
  EXPECT_EQ(r.technique_id, "RA_T2");
}

TEST(Correctness, WrongFinalValue) {
  const auto r = classify(trace(VA, {ClickLower{0, 2}}), 3, 1);
  EXPECT_FALSE(r.correct);
  EXPECT_EQ(r.technique_id, "");
}

TEST(AmbiguousSingleBead, Flagged) {
  const auto r = classify(trace(VA, {ClickLower{0, 1}}), 1, 1);
  EXPECT_TRUE(r.has_note(notes::kAmbiguousSingleBead));
  EXPECT_TRUE(r.correct);
  const auto five_then_one = classify(trace(MA, {MoveUpper{0, 1}, MoveLower{0, 1}}), 6, 1);
  EXPECT_TRUE(five_then_one.has_note(notes::kAmbiguousSingleBead));
  EXPECT_TRUE(five_then_one.tags.contains(Calculating));
}

TEST(SetTwentyFive, InscriptionAWithCountingOnTens) {
  const auto r = classify(trace(VA, {ClickLower{1, 1}, ClickLower{1, 2}, ClickUpper{0, 1}}), 25, 2);
  EXPECT_EQ(r.formula, "25=20+5=(10+10)+5");
  EXPECT_TRUE(r.correct);
  EXPECT_TRUE(r.has_note(notes::kMultiRod));
  ASSERT_EQ(r.rods.size(), 2u);
  EXPECT_EQ(r.rods[1].rod, 1u);
  EXPECT_EQ(r.rods[1].tags, Tags{Counting});
}

TEST(SetSeventyThree, EconomicalAndFrenchLike) {
  const auto a = classify(trace(MA, {MoveLower{0, 3}, MoveUpper{1, 1}, MoveLower{1, 2}}), 73, 2);
  EXPECT_EQ(a.technique_id, "RA_T1");
  EXPECT_TRUE(a.correct);
  const auto b = classify(trace(MA, {MoveLower{0, 3}, MoveUpper{0, 2}, MoveUpper{1, 1}, MoveLower{1, 1}}), 73, 2);
  EXPECT_EQ(b.technique_id, "RA_T2");
  EXPECT_TRUE(b.correct);
  EXPECT_EQ(decomposition_value(b.decomposition), 73);
}

TEST(SetSeventyThree, WithoutRankWeights) {
  const auto a = classify(trace(MA, {MoveLower{0, 3}, MoveUpper{1, 1}, MoveLower{1, 2}}), 73, 2);
  const std::string raw = decomposition_formula(a, false);
  EXPECT_EQ(raw.rfind("10=", 0), 0u) << raw;  // 3 + 5 + 2 in rod units
}

TEST(Formula, SingleAddend) {
  TechniqueReport r;
  r.decomposition = {AddendGroup{0, {3}}};
  EXPECT_EQ(decomposition_formula(r), "3");
  r.decomposition = {AddendGroup{1, {2}}};
  EXPECT_EQ(decomposition_formula(r), "20");
}

TEST(Formula, CorrectionRebuildsFromState) {
  const auto r = classify(trace(VA, {ClickLower{0, 5}, ClickLower{0, 4}}), 3, 1);
  EXPECT_EQ(decomposition_value(r.decomposition), 3);
}

TEST(Classify, TargetWidensRods) {
  const auto r = classify(trace(VA, {ClickLower{2, 1}}), 100, 1);
  EXPECT_TRUE(r.correct);
}

TEST(Classify, PropagatesReplayError) {
  EXPECT_THROW(classify(trace(VA, {CompoundMove{0, 3, 1}}), 8, 1), ReplayError);
}

TEST(Classify, DecompositionSumsToFinalValue) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> kind(0, 7), rod(0, 2), bead(1, 5), up(1, 2);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    Trace t;
    for (int g = 0; g < 10; ++g) {
      const auto r = static_cast<std::size_t>(rod(rng));
      switch (kind(rng)) {
        case 0: case 1: case 2: case 3: t.gestures.push_back(ClickLower{r, bead(rng)}); break;
        case 4: t.gestures.push_back(ClickUpper{r, up(rng)}); break;
        case 5: t.gestures.push_back(ExchangeFive{r}); break;
        case 6: t.gestures.push_back(IconSeeNumber{g % 2 == 1}); break;
        default: t.gestures.push_back(IconPositioning{}); break;
      }
    }
    AbacusConfig start(3);
    AbacusConfig end(3);
    try {
      end = replay(t, start).final_config();
    } catch (const ReplayError&) {
      continue;
    }
    const auto report = classify(t, read_value(end), start);
    EXPECT_EQ(decomposition_value(report.decomposition), read_value(end));
    EXPECT_TRUE(report.correct);
    EXPECT_EQ(classify(t, read_value(end), start), report);
    ++checked;
  }
  EXPECT_GT(checked, 500);
}
