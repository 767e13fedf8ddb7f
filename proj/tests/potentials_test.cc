// Copyright 2026 The lazyeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corpus.hpp"
#include "gtest/gtest.h"
#include "lazyeq.hpp"
#include "oracles.hpp"

namespace lazyeq {
namespace {

using corpus::FixtureProfile;
using corpus::FixtureTree;

TEST(BigDelta, Examples) {
  EXPECT_EQ(BigDelta(*FixtureTree("g3-delta")),
            (std::vector<std::int64_t>{5, 3}));
  EXPECT_EQ(BigDelta(*FixtureTree("g1-kuhn")),
            (std::vector<std::int64_t>{1, 2}));
  auto leaf = corpus::Tree("game { players: a b ; outcomes: x ; tree: [x] ; }");
  EXPECT_EQ(BigDelta(*leaf), (std::vector<std::int64_t>{0, 0}));
}

TEST(SmallDelta, DisplayedProfileOfTheDismissalExample) {
  Profile s = FixtureProfile("g3-delta");
  // Columns x y z t.
  DismissalTable expected = {{1, 0, 1, 3}, {0, 2, 1, 0}};
  EXPECT_EQ(SmallDelta(s), expected);
  EXPECT_EQ(PotentialM(s, 0), 9);
}

TEST(SmallDelta, ObservationsHoldOnRandomGames) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto g = corpus::RandomTree(k);
    std::vector<std::int64_t> big = BigDelta(*g);
    EXPECT_EQ(big, oracle::BigDelta(*g, g->root()));
    std::int64_t total = 1;
    for (std::int64_t d : big) total += d;
    EXPECT_EQ(total, g->num_leaves());
    ProfileSpace<Game> space(g);
    for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 40) {
      Profile s = space.Decode(i);
      DismissalTable d = SmallDelta(s);
      EXPECT_EQ(d, oracle::SmallDelta(*g, s.choices(), g->root()));
      for (PlayerId a = 0; a < g->num_players(); ++a) {
        std::int64_t row = 0;
        for (std::int64_t v : d[a]) row += v;
        EXPECT_EQ(row, big[a]);
      }
    }
  }
}

TEST(Conservation, LazyConversionsPreserveOtherRowsAndShiftOwnRow) {
  for (std::uint64_t k = 0; k < 120; ++k) {
    auto g = corpus::RandomTree(k);
    ProfileSpace<Game> space(g);
    std::vector<int> s;
    for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 30) {
      space.DecodeInto(i, s);
      DismissalTable ds = SmallDeltaRaw(*g, s);
      OutcomeId vs = InducedOutcomeFrom(*g, s, g->root());
      for (PlayerId a = 0; a < g->num_players(); ++a) {
        ForEachLazyConversion(
            *g, s, a,
            [&](const std::vector<int>& t, const std::vector<NodeId>&) {
              DismissalTable dt = SmallDeltaRaw(*g, t);
              OutcomeId vt = InducedOutcomeFrom(*g, t, g->root());
              for (PlayerId b = 0; b < g->num_players(); ++b) {
                if (b != a) {
                  EXPECT_EQ(ds[b], dt[b]);
                }
              }
              for (OutcomeId o = 0; o < g->num_outcomes(); ++o) {
                EXPECT_EQ(ds[a][o] + (vs == o), dt[a][o] + (vt == o));
              }
              return true;
            });
      }
    }
  }
}

TEST(PotentialM, DropsByTheHeightGainOnEveryLazyStep) {
  for (std::uint64_t k = 0; k < 150; ++k) {
    auto g = corpus::RandomTree(k);
    ProfileSpace<Game> space(g);
    for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 30) {
      Profile s = space.Decode(i);
      for (PlayerId a = 0; a < g->num_players(); ++a) {
        if (!IsAcyclic(g->preference(a))) {
          EXPECT_THROW(PotentialM(s, a), Error);
          continue;
        }
        std::int64_t m = PotentialM(s, a);
        EXPECT_GE(m, 0);
        EXPECT_LE(m, StepBound(*g, a));
        for (const Profile& t : LazySuccessors(s, a)) {
          const PreferenceRelation& p = g->preference(a);
          EXPECT_EQ(m - PotentialM(t, a),
                    ChainHeight(p, InducedOutcome(t)) -
                        ChainHeight(p, InducedOutcome(s)));
        }
      }
    }
  }
}

TEST(PotentialM, EmptyPreferenceGivesZero) {
  auto g = corpus::Tree(
      "game { players: a ; outcomes: x y ; tree: (a [x] (a [y] [x])) ; }");
  for (const Profile& s : AllProfiles(g)) EXPECT_EQ(PotentialM(s, 0), 0);
  EXPECT_EQ(StepBound(*g, 0), 0);
}

TEST(Bounds, Examples) {
  EXPECT_EQ(GlobalBound(*FixtureTree("g2-cycle")), 3);
  auto leaf = corpus::Tree("game { players: a ; outcomes: x ; tree: [x] ; }");
  EXPECT_EQ(GlobalBound(*leaf), 0);
  auto crazy = corpus::Tree(
      "game { players: a ; outcomes: x y ; tree: (a [x] [y]) ;"
      " prefer a: pair x y ; prefer a: pair y x ; }");
  EXPECT_THROW(GlobalBound(*crazy), Error);
  EXPECT_THROW(StepBound(*crazy, 0), Error);
}

TEST(Bounds, QuadraticFamilyAttainsTheCountExactly) {
  for (int n = 0; n <= 20; ++n) {
    auto g = FixtureTree("quadratic-" + std::to_string(n));
    EXPECT_EQ(g->num_leaves(), 2 * (n + 1));
    EXPECT_EQ(MaxChainHeight(g->preference(0)), n + 2);
    RunOptions o{.mode = StepMode::kLazy, .policy = Policy::kScripted};
    o.script = *QuadraticScript(*g);
    RunTrace<Game> trace = lazyeq::Run(Profile::FirstChoices(g), o);
    EXPECT_EQ(trace.verdict, Verdict::kTerminatedAtNash) << n;
    EXPECT_EQ(static_cast<int>(trace.steps.size()), (n + 2) * (n + 3) / 2 - 2)
        << n;
    EXPECT_LE(static_cast<std::int64_t>(trace.steps.size()), GlobalBound(*g));
  }
}

TEST(Bounds, PerPlayerLongestPathsStayWithinTheStepBound) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto g = corpus::RandomTree(k);
    LabeledDigraph graph = ImprovementGraph(g, StepMode::kLazy);
    for (PlayerId a = 0; a < g->num_players(); ++a) {
      if (!IsAcyclic(g->preference(a))) continue;
      auto count = MaxLabelCountOnPath(graph, a);
      ASSERT_TRUE(count.has_value());
      EXPECT_LE(static_cast<std::int64_t>(*count), StepBound(*g, a));
    }
    if (corpus::AllAcyclic(*g)) {
      auto longest = LongestPathLength(graph);
      ASSERT_TRUE(longest.has_value());
      EXPECT_LE(static_cast<std::int64_t>(*longest), GlobalBound(*g));
    }
  }
}

}  // namespace
}  // namespace lazyeq
