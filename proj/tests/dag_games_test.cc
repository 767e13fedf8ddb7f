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

#include <cstdio>
#include <set>
#include <utility>

#include "corpus.hpp"
#include "gtest/gtest.h"
#include "lazyeq.hpp"
#include "oracles.hpp"

namespace lazyeq {
namespace {

using corpus::FixtureDagProfile;
using oracle::Choices;

using Edit = std::pair<const char*, const char*>;  // node, chosen successor

DagProfile Apply(const DagProfile& s, const std::vector<Edit>& edits) {
  const DagGame& g = s.game();
  std::vector<int> c = s.choices();
  for (auto [from, to] : edits) {
    NodeId n = g.FindNode(from);
    NodeId target = g.FindNode(to);
    const auto& succ = g.node(n).successors;
    c[n] = static_cast<int>(std::find(succ.begin(), succ.end(), target) -
                            succ.begin());
    EXPECT_LT(c[n], g.node(n).degree()) << from << " -> " << to;
  }
  return DagProfile(s.game_ptr(), c);
}

struct Frame {
  const char* mover;
  std::vector<Edit> edits;
};

std::vector<DagProfile> Frames(const DagProfile& first,
                               const std::vector<Frame>& steps) {
  std::vector<DagProfile> out{first};
  for (const Frame& f : steps) out.push_back(Apply(out.back(), f.edits));
  return out;
}

bool Contains(const std::vector<DagProfile>& v, const DagProfile& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

const std::vector<Frame>& Cycle11() {
  static const std::vector<Frame> frames = {
      {"b", {{"b1", "b3"}}},
      {"a", {{"a1", "a2"}}},
      {"b", {{"b2", "tz"}}},
      {"a", {{"a1", "a3"}, {"a3", "b3"}}},
      {"a", {{"a1", "b1"}, {"a4", "tx"}}},
      {"b", {{"b1", "a2"}}},
      {"a", {{"a2", "a4"}, {"a4", "b4"}}},
      {"b", {{"b1", "b2"}, {"b2", "a3"}, {"b4", "tz"}}},
      {"a", {{"a3", "tx"}}},
      {"b", {{"b1", "a2"}, {"b4", "ty"}}},
      {"a", {{"a2", "b2"}}},
  };
  return frames;
}

const std::vector<Frame>& VeryLazyFrames() {
  static const std::vector<Frame> frames = {
      {"b", {{"b3", "tz4"}}},
      {"a", {{"a2", "ty2"}}},
      {"a", {{"a2", "p5"}, {"a7", "b8"}, {"a9", "tx9"}}},
      {"b", {{"b1", "a3"}}},
      {"a", {{"a3", "a7"}, {"a9", "ty9"}}},
      {"a", {{"a3", "tx3"}}},
      {"b", {{"b1", "b3"}, {"b3", "a7"}, {"b8", "tz8"}}},
      {"b", {{"b1", "tt1"}}},
      {"b", {{"b1", "a2"}, {"b8", "a9"}}},
      {"a", {{"a2", "a3"}, {"a3", "tt3"}}},
      {"a", {{"a3", "b3"}, {"a7", "tx7"}}},
  };
  return frames;
}

TEST(DagInducedPlay, Examples) {
  DagProfile s = FixtureDagProfile("lazy-vs-crazy");
  EXPECT_EQ(s.game().outcomes().name(DagInducedPlay(s).outcome), "0");
  auto single = corpus::Dag(
      "dag { players: a ; outcomes: x ; node r a -> t ; leaf t x ; root r ; }");
  EXPECT_EQ(DagInducedPlay(DagProfile::FirstChoices(single)).outcome, 0);
  for (std::uint64_t k = 0; k < 50; ++k) {
    auto g = corpus::RandomTree(k);
    auto d = TreeToDag(*g);
    ProfileSpace<Game> space(g);
    for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 20) {
      Profile s = space.Decode(i);
      EXPECT_EQ(DagInducedPlay(DagProfile(d, s.choices())).nodes,
                InducedPlay(s).nodes);
    }
  }
}

TEST(DagLazy, TreesAndTheirDagsAgreeNodeForNode) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto g = corpus::RandomTree(k);
    auto d = TreeToDag(*g);
    ProfileSpace<Game> space(g);
    for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 20) {
      Profile s = space.Decode(i);
      DagProfile ds(d, s.choices());
      for (PlayerId a = 0; a < g->num_players(); ++a) {
        std::set<Choices> tree, dag;
        for (const Profile& t : LazySuccessors(s, a)) tree.insert(t.choices());
        for (const DagProfile& t : DagLazySuccessors(ds, a)) {
          dag.insert(t.choices());
          EXPECT_TRUE(DagLazyConvertible(ds, t, a));
          EXPECT_EQ(LazyConvertible(s, Profile(g, t.choices()), a), true);
        }
        EXPECT_EQ(tree, dag);
      }
    }
    if (ProfileCount(*g) > 1024) continue;
    std::set<Choices> tree_ne, dag_ne;
    for (const Profile& s : BruteForceNash(g)) tree_ne.insert(s.choices());
    for (const DagProfile& s : DagNash(d)) dag_ne.insert(s.choices());
    EXPECT_EQ(tree_ne, dag_ne);
    LabeledDigraph tg = ImprovementGraph(g, StepMode::kLazy);
    LabeledDigraph dg = ImprovementGraph(d, StepMode::kLazy);
    ASSERT_EQ(tg.num_edges(), dg.num_edges());
    for (std::size_t v = 0; v < tg.num_nodes(); ++v) {
      for (const auto* e = tg.begin(v); e != tg.end(v); ++e) {
        EXPECT_TRUE(dg.HasEdge(v, e->target));
      }
    }
  }
}

TEST(DagLazy, ReflexiveAndShapeChecked) {
  DagProfile s = FixtureDagProfile("dag-cycle-11");
  EXPECT_TRUE(DagLazyConvertible(s, s, 0));
  DagProfile other = FixtureDagProfile("dag-cycle-8");
  try {
    DagLazyConvertible(s, other, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "shape mismatch");
  }
}

TEST(DagNash, Examples) {
  auto g1 = corpus::FixtureTree("g1-kuhn");
  EXPECT_EQ(DagNash(TreeToDag(*g1)).size(), 2u);
  auto single = corpus::Dag(
      "dag { players: a ; outcomes: x y ; node r a -> m ; node m a -> t ;"
      " leaf t x ; root r ; }");
  EXPECT_EQ(DagNash(single).size(), 1u);
  auto crazy = FixtureDagProfile("lazy-vs-crazy").game_ptr();
  ProfileSpace<DagGame> space(crazy);
  std::vector<std::uint64_t> ne;
  for (const DagProfile& s : DagNash(crazy)) ne.push_back(space.Encode(s));
  EXPECT_EQ(ne, ImprovementSinks(space, StepMode::kLazy));
}

TEST(DagNash, MatchesTheOracleOnRandomDags) {
  for (std::uint64_t k = 0; k < 150; ++k) {
    auto g = corpus::RandomDag(k);
    if (ProfileCount(*g) > 1024) continue;
    std::set<Choices> got;
    for (const DagProfile& s : DagNash(g)) got.insert(s.choices());
    EXPECT_EQ(got, oracle::Nash(*g));
  }
}

TEST(LazyCycles, LengthElevenCycleFrameByFrame) {
  DagProfile first = FixtureDagProfile("dag-cycle-11");
  EXPECT_EQ(first.game().outcomes().name(InducedOutcome(first)), "x");
  std::vector<DagProfile> frames = Frames(first, Cycle11());
  ASSERT_EQ(frames.size(), 12u);
  EXPECT_EQ(frames.back(), first);
  std::set<Choices> distinct;
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    distinct.insert(frames[i].choices());
    PlayerId a = first.game().FindPlayer(Cycle11()[i].mover);
    EXPECT_TRUE(Contains(DagLazySuccessors(frames[i], a), frames[i + 1]))
        << "frame " << i + 1;
  }
  EXPECT_EQ(distinct.size(), 11u);
  EXPECT_TRUE(HasCycle(ImprovementGraph(first.game_ptr(), StepMode::kLazy)));
}

TEST(LazyCycles, LengthEightCycleExists) {
  auto g = FixtureDagProfile("dag-cycle-8").game_ptr();
  LabeledDigraph graph = ImprovementGraph(g, StepMode::kLazy);
  auto cycle = FindCycle(graph);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(
      std::get<PatternWitness>(CheckPreferenceFamily(g->preferences())).pattern,
      2);
}

TEST(LazyCycles, AcyclicPlayerStepsInACycleAgainstACrazyOne) {
  for (const char* name : {"lazy-vs-crazy", "lazy-vs-crazy-primed"}) {
    auto g = FixtureDagProfile(name).game_ptr();
    LabeledDigraph graph = ImprovementGraph(g, StepMode::kLazy);
    EXPECT_TRUE(FindCycle(graph, g->FindPlayer("a")).has_value()) << name;
  }
}

TEST(VeryLazy, FramesAreLazyStepsAndVariantsCycle) {
  DagProfile first = FixtureDagProfile("verylazy-cycle");
  std::vector<DagProfile> frames = Frames(first, VeryLazyFrames());
  ASSERT_EQ(frames.size(), 12u);
  EXPECT_EQ(frames.back(), first);
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    PlayerId a = first.game().FindPlayer(VeryLazyFrames()[i].mover);
    EXPECT_TRUE(Contains(DagLazySuccessors(frames[i], a), frames[i + 1]))
        << "frame " << i + 1;
    for (VeryLazyVariant v :
         {VeryLazyVariant::kMinChanges, VeryLazyVariant::kMinPlayDistance,
          VeryLazyVariant::kMinPlayLength}) {
      if (!Contains(VeryLazySuccessors(frames[i], a, v), frames[i + 1])) {
        std::printf("%s: frame %zu -> %zu is not a minimizer\n",
                    VeryLazyVariantName(v), i + 1, (i + 1) % 11 + 1);
      }
    }
  }
  ProfileSpace<DagGame> space(first.game_ptr());
  for (VeryLazyVariant v :
       {VeryLazyVariant::kMinChanges, VeryLazyVariant::kMinPlayDistance}) {
    EXPECT_TRUE(HasCycle(VeryLazyGraph(space, v))) << VeryLazyVariantName(v);
  }
}

TEST(VeryLazy, ShortestPlaysBypassTheRelayNodes) {
  // Under the shortest-play variant, a reaches x9 through a3 and a7 in
  // fewer edges than through the relay nodes, so the fourth frame is not a
  // minimizer.
  DagProfile first = FixtureDagProfile("verylazy-cycle");
  std::vector<DagProfile> frames = Frames(first, VeryLazyFrames());
  PlayerId a = first.game().FindPlayer("a");
  auto succ = VeryLazySuccessors(frames[2], a, VeryLazyVariant::kMinPlayLength);
  EXPECT_FALSE(Contains(succ, frames[3]));
  OutcomeId x9 = first.game().outcomes().Find("x9");
  bool reaches = false;
  for (const DagProfile& t : succ) {
    if (InducedOutcome(t) == x9) {
      reaches = true;
      EXPECT_LT(InducedPlay(t).path.size(), InducedPlay(frames[3]).path.size());
    }
  }
  EXPECT_TRUE(reaches);
}

TEST(VeryLazy, MinChangesIsLazyOnTreesWithDistinctLeafOutcomes) {
  int checked = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto g = corpus::RandomTree(k);
    std::set<OutcomeId> seen;
    bool distinct = true;
    for (NodeId leaf : g->leaves()) {
      distinct = distinct && seen.insert(g->node(leaf).outcome).second;
    }
    ProfileSpace<Game> space(g);
    for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 10) {
      Profile s = space.Decode(i);
      for (PlayerId a = 0; a < g->num_players(); ++a) {
        std::set<Choices> lazy, very;
        for (const Profile& t : LazySuccessors(s, a)) lazy.insert(t.choices());
        for (const Profile& t :
             VeryLazySuccessors(s, a, VeryLazyVariant::kMinChanges)) {
          very.insert(t.choices());
          EXPECT_TRUE(lazy.count(t.choices()));
        }
        if (distinct) {
          EXPECT_EQ(lazy, very);
        }
      }
    }
    checked += distinct;
  }
  EXPECT_GT(checked, 10);
}

TEST(VeryLazy, EachTargetKeepsExactlyItsMinimizers) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto g = corpus::RandomDag(k);
    ProfileSpace<DagGame> space(g);
    for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 10) {
      DagProfile s = space.Decode(i);
      for (PlayerId a = 0; a < g->num_players(); ++a) {
        std::vector<DagProfile> lazy = LazySuccessors(s, a);
        auto very = VeryLazySuccessors(s, a, VeryLazyVariant::kMinPlayLength);
        std::set<OutcomeId> targets, covered;
        for (const DagProfile& t : lazy) targets.insert(InducedOutcome(t));
        for (const DagProfile& t : very) {
          covered.insert(InducedOutcome(t));
          EXPECT_TRUE(Contains(lazy, t));
          for (const DagProfile& u : lazy) {
            if (InducedOutcome(u) != InducedOutcome(t)) continue;
            EXPECT_LE(InducedPlay(t).path.size(), InducedPlay(u).path.size());
          }
        }
        EXPECT_EQ(targets, covered);
      }
    }
  }
}

PreferenceRelation Chain(int n, std::vector<OutcomeId> order) {
  PreferenceRelation p(n);
  p.AddChain(order);
  return p;
}

TEST(PreferenceFamily, Examples) {
  auto same = CheckPreferenceFamily({Chain(3, {0, 1, 2}), Chain(3, {0, 1, 2})});
  auto& part = std::get<PreferencePartition>(same);
  EXPECT_EQ(part.blocks.size(), 3u);
  // x=0 y=1 z=2; a: z<y<x, b: x<y<z.
  auto w1 = std::get<PatternWitness>(
      CheckPreferenceFamily({Chain(3, {2, 1, 0}), Chain(3, {0, 1, 2})}));
  EXPECT_EQ(w1.pattern, 1);
  auto w2 = std::get<PatternWitness>(
      CheckPreferenceFamily({Chain(3, {2, 1, 0}), Chain(3, {0, 2, 1})}));
  EXPECT_EQ(w2.pattern, 2);
  PreferenceRelation partial(3);
  partial.Add(0, 1);
  try {
    CheckPreferenceFamily({partial});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "preferences not strict-linear");
  }
  auto d11 = FixtureDagProfile("dag-cycle-11").game_ptr();
  EXPECT_EQ(std::get<PatternWitness>(CheckPreferenceFamily(d11->preferences()))
                .pattern,
            1);
}

void ExpectWitnessHolds(const std::vector<PreferenceRelation>& prefs,
                        const PatternWitness& w) {
  const PreferenceRelation& pa = prefs[w.a];
  const PreferenceRelation& pb = prefs[w.b];
  EXPECT_TRUE(pa.Less(w.z, w.y) && pa.Less(w.y, w.x));
  if (w.pattern == 1) {
    EXPECT_TRUE(pb.Less(w.x, w.y) && pb.Less(w.y, w.z));
  } else {
    EXPECT_TRUE(pb.Less(w.x, w.z) && pb.Less(w.z, w.y));
  }
}

void ExpectPartitionHolds(const std::vector<PreferenceRelation>& prefs,
                          const PreferencePartition& part) {
  int n = prefs[0].num_outcomes();
  std::vector<int> block(n, -1);
  for (std::size_t i = 0; i < part.blocks.size(); ++i) {
    EXPECT_LE(part.blocks[i].size(), 2u);
    for (OutcomeId o : part.blocks[i]) block[o] = static_cast<int>(i);
  }
  for (OutcomeId x = 0; x < n; ++x) {
    ASSERT_GE(block[x], 0);
    for (OutcomeId y = 0; y < n; ++y) {
      if (block[x] < block[y]) {
        for (const PreferenceRelation& p : prefs) EXPECT_TRUE(p.Less(x, y));
      }
    }
  }
}

TEST(PreferenceFamily, VerdictsCarryValidCertificates) {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    int players = static_cast<int>(UniformInt(rng, 1, 3));
    int n = static_cast<int>(UniformInt(rng, 1, 5));
    std::vector<PreferenceRelation> prefs;
    if (trial % 2 == 0) {
      prefs = RandomBlockFamily(rng, players, n);
    } else {
      for (int a = 0; a < players; ++a) {
        prefs.push_back(RandomPreference(rng, n, PrefKind::kLinear));
      }
    }
    FamilyVerdict v = CheckPreferenceFamily(prefs);
    if (trial % 2 == 0) {
      EXPECT_TRUE(std::holds_alternative<PreferencePartition>(v));
    }
    if (auto* w = std::get_if<PatternWitness>(&v))
      ExpectWitnessHolds(prefs, *w);
    if (auto* p = std::get_if<PreferencePartition>(&v)) {
      ExpectPartitionHolds(prefs, *p);
    }
  }
}

TEST(PreferenceFamily, CertifiedFamiliesNeverCycle) {
  Rng rng(41);
  for (std::uint64_t k = 0; k < 150; ++k) {
    auto g = corpus::RandomDag(k);
    auto prefs = RandomBlockFamily(rng, g->num_players(), g->num_outcomes());
    ASSERT_TRUE(std::holds_alternative<PreferencePartition>(
        CheckPreferenceFamily(prefs)));
    auto h = g->WithPreferences(prefs);
    EXPECT_FALSE(HasCycle(ImprovementGraph(h, StepMode::kLazy)));
  }
}

TEST(LexPotential, IncreasesOnEveryLazyStepOfWinLoseDags) {
  Rng rng(13);
  int checked = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    GenParams p = corpus::DrawParams(rng, true);
    p.outcomes = 2;
    p.prefs.assign(p.players, PrefKind::kLinear);
    auto g = RandomDagGame(p, k);
    if (ProfileCount(*g) > corpus::kProfileLimit) continue;
    ++checked;
    ProfileSpace<DagGame> space(g);
    LabeledDigraph graph = ImprovementGraph(space, StepMode::kLazy);
    graph.ForEachEdge([&](std::size_t v, const LabeledDigraph::Edge& e) {
      EXPECT_LT(LexPotential(space.Decode(v)),
                LexPotential(space.Decode(e.target)));
    });
  }
  EXPECT_GT(checked, 100);
}

TEST(LexPotential, AllWinningIsMaximalAndNonWinLoseIsRejected) {
  auto g = corpus::Dag(
      "dag { players: a b ; outcomes: l w ; node r a -> m tw ;"
      " node m b -> tl tw ; leaf tl l ; leaf tw w ; root r ;"
      " prefer a: chain l w ; prefer b: chain l w ; }");
  DagProfile s = Apply(DagProfile::FirstChoices(g), {{"m", "tw"}});
  EXPECT_EQ(LexPotential(s), (std::vector<std::uint8_t>{1, 1}));
  EXPECT_TRUE(DagLazySuccessors(s, 0).empty());
  EXPECT_TRUE(DagLazySuccessors(s, 1).empty());
  auto three = FixtureDagProfile("dag-cycle-11");
  EXPECT_THROW(LexPotential(three), Error);
}

TEST(DagSpe, LinearExtensionBackwardPassGivesAnEquilibrium) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto g = corpus::RandomDag(k);
    if (!corpus::AllAcyclic(*g)) continue;
    DagProfile s = DagSpeViaLinearExtension(g);
    EXPECT_TRUE(IsNash(s));
    for (NodeId n : g->internal_nodes()) {
      // Every node's choice is optimal for its owner against the rest.
      for (int j = 0; j < g->node(n).degree(); ++j) {
        std::vector<int> c = s.choices();
        c[n] = j;
        EXPECT_FALSE(g->Prefers(g->node(n).owner,
                                InducedOutcomeFrom(*g, s.choices(), n),
                                InducedOutcomeFrom(*g, c, n)));
      }
    }
  }
}

}  // namespace
}  // namespace lazyeq
