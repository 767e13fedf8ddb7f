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

#include <optional>
#include <set>

#include "corpus.hpp"
#include "gtest/gtest.h"
#include "lazyeq.hpp"
#include "oracles.hpp"

namespace lazyeq {
namespace {

using corpus::FixtureTree;

// Profile indices of the eight-profile example.
enum { kA = 2, kB = 0, kC = 1, kD = 3, kE = 6, kF = 4, kG = 5, kH = 7 };

std::vector<Rational> WeightVector(const Rational& p, const Rational& e) {
  std::vector<Rational> v(8);
  v[kA] = 7 * p;
  v[kB] = 3 * e;
  v[kC] = 6 * e;
  v[kD] = 12 * e;
  v[kE] = 4 * e;
  v[kF] = 4 * p;
  v[kG] = 5 * p;
  v[kH] = 5 * e;
  return v;
}

TEST(BuildChain, EightProfileDiagonalPattern) {
  Rational p(1, 10), e(1, 100);
  PerturbedChain chain = BuildChain(FixtureTree("markov-abcdefgh"), p, e);
  ASSERT_EQ(chain.num_states(), 8u);
  EXPECT_EQ(chain.Entry(kA, kA), 1 - e);
  EXPECT_EQ(chain.Entry(kB, kB), 1 - 2 * p);
  EXPECT_EQ(chain.Entry(kC, kC), 1 - 2 * p);
  EXPECT_EQ(chain.Entry(kD, kD), 1 - p);
  EXPECT_EQ(chain.Entry(kE, kE), 1 - p);
  EXPECT_EQ(chain.Entry(kF, kF), 1 - 2 * e);
  EXPECT_EQ(chain.Entry(kG, kG), 1 - 2 * e);
  EXPECT_EQ(chain.Entry(kH, kH), 1 - p);
}

TEST(BuildChain, WeightVectorIsAnExactFixedPoint) {
  for (auto [p, e] : {std::pair{Rational(1, 10), Rational(1, 100)},
                      std::pair{Rational(1, 16), Rational(1, 64)}}) {
    PerturbedChain chain = BuildChain(FixtureTree("markov-abcdefgh"), p, e);
    std::vector<Rational> v = WeightVector(p, e);
    for (std::size_t j = 0; j < 8; ++j) {
      Rational sum = 0;
      for (std::size_t i = 0; i < 8; ++i) sum += v[i] * chain.Entry(i, j);
      EXPECT_EQ(sum, v[j]) << j;
    }
  }
}

TEST(BuildChain, TwoEquilibriumExample) {
  PerturbedChain chain = BuildChain(FixtureTree("markov-simple"),
                                    Rational(1, 10), Rational(1, 100));
  // A = 0 (upper left), C = 2, D = 3 (lower right).
  EXPECT_TRUE(chain.is_nash(0));
  EXPECT_TRUE(chain.is_nash(3));
  int eps_a = 0;
  for (const ChainTransition& t : chain.row(0)) {
    eps_a += t.kind == TransitionKind::kPerturbation;
  }
  EXPECT_EQ(eps_a, 0);
  std::vector<std::uint32_t> eps_d;
  for (const ChainTransition& t : chain.row(3)) {
    if (t.kind == TransitionKind::kPerturbation) eps_d.push_back(t.target);
  }
  EXPECT_EQ(eps_d, std::vector<std::uint32_t>{2});
}

TEST(BuildChain, SingleProfileIsAbsorbing) {
  auto g = corpus::Tree("game { players: a ; outcomes: x ; tree: [x] ; }");
  PerturbedChain chain = BuildChain(g, Rational(1, 10), Rational(1, 10));
  ASSERT_EQ(chain.num_states(), 1u);
  EXPECT_EQ(chain.Entry(0, 0), 1);
  EXPECT_EQ(StationaryDistribution(chain).distribution,
            std::vector<long double>{1.0L});
}

TEST(BuildChain, RejectsParametersOutOfRange) {
  auto g = FixtureTree("markov-simple");  // three leaves, bound 1/6
  for (auto [p, e] : {std::pair{Rational(1, 6), Rational(1, 100)},
                      std::pair{Rational(1, 10), Rational(0)},
                      std::pair{Rational(-1, 10), Rational(1, 100)}}) {
    try {
      BuildChain(g, p, e);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(std::string(err.what()).rfind("parameters out of range", 0),
                0u);
    }
  }
}

TEST(BuildChain, EdgesFollowTheDefinitionOnRandomGames) {
  for (std::uint64_t k = 0; k < 120; ++k) {
    auto g = corpus::RandomTree(k);
    if (ProfileCount(*g) > 512) continue;
    Rational p(1, 4 * g->num_leaves()), e(1, 8 * g->num_leaves());
    std::optional<PerturbedChain> built;
    try {
      built.emplace(BuildChain(g, p, e));
    } catch (const Error& err) {
      EXPECT_NE(std::string(err.what()).find("row overflow"),
                std::string::npos);
      continue;
    }
    const PerturbedChain& chain = *built;
    ProfileSpace<Game> space(g);
    std::set<oracle::Choices> ne = oracle::Nash(*g);
    LabeledDigraph lazy = ImprovementGraph(space, StepMode::kLazy);
    for (std::size_t i = 0; i < chain.num_states(); ++i) {
      std::vector<int> s = space.Decode(i).choices();
      EXPECT_EQ(chain.is_nash(i), ne.count(s) > 0);
      Rational total = chain.self_loop(i);
      EXPECT_GE(total, 0);
      std::set<std::uint64_t> improvement;
      for (const ChainTransition& t : chain.row(i)) {
        total += t.probability;
        std::vector<int> u = space.Decode(t.target).choices();
        if (t.kind == TransitionKind::kImprovement) {
          EXPECT_EQ(t.probability, p);
          improvement.insert(t.target);
        } else {
          EXPECT_EQ(t.probability, e);
          EXPECT_TRUE(chain.is_nash(i));
          int diff = 0;
          for (NodeId n = 0; n < g->num_nodes(); ++n) diff += s[n] != u[n];
          EXPECT_EQ(diff, 1);
          EXPECT_EQ(oracle::Outcome(*g, s), oracle::Outcome(*g, u));
        }
      }
      EXPECT_EQ(total, 1);
      std::set<std::uint64_t> expected;
      for (const auto* ed = lazy.begin(i); ed != lazy.end(i); ++ed) {
        expected.insert(ed->target);
      }
      EXPECT_EQ(improvement, expected);
    }
  }
}

TEST(StationaryDistribution, MatchesTheWeightVector) {
  Rational p(1, 10), e(1, 100);
  PerturbedChain chain = BuildChain(FixtureTree("markov-abcdefgh"), p, e);
  StationaryResult r = StationaryDistribution(chain);
  std::vector<Rational> v = WeightVector(p, e);
  Rational total = 0;
  for (const Rational& x : v) total += x;
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(static_cast<double>(r.distribution[i]),
                static_cast<double>(ToLongDouble(v[i] / total)), 1e-12);
  }
  EXPECT_LT(r.residual, 1e-12L);
  EXPECT_FALSE(r.reducible);
}

TEST(StationaryDistribution, EdgelessChainStaysUniform) {
  auto g =
      corpus::Tree("game { players: a ; outcomes: x y ; tree: (a [x] [y]) ; }");
  PerturbedChain chain = BuildChain(g, Rational(1, 10), Rational(1, 10));
  StationaryResult r = StationaryDistribution(chain);
  EXPECT_EQ(r.distribution, (std::vector<long double>{0.5L, 0.5L}));
  EXPECT_TRUE(r.reducible);
  EXPECT_EQ(r.closed_classes, 2u);
  StabilityReport report = StableProfiles(g, Rational(1, 10), Rational(1, 100));
  EXPECT_EQ(report.stable, (std::vector<std::uint64_t>{0, 1}));
}

TEST(StableProfiles, EightProfileExample) {
  StabilityReport r = StableProfiles(FixtureTree("markov-abcdefgh"),
                                     Rational(1, 10), Rational(1, 100));
  EXPECT_EQ(r.stable, (std::vector<std::uint64_t>{kA, kF, kG}));
  EXPECT_NEAR(static_cast<double>(r.states[kA].limit), 7.0 / 16, 1e-6);
  EXPECT_NEAR(static_cast<double>(r.states[kF].limit), 1.0 / 4, 1e-6);
  EXPECT_NEAR(static_cast<double>(r.states[kG].limit), 5.0 / 16, 1e-6);
  EXPECT_EQ(r.eps_ladder.size(), 12u);
  EXPECT_EQ(r.eps_ladder[1], Rational(1, 200));
}

TEST(StableProfiles, OnlyTheSubgamePerfectProfileIsStable) {
  StabilityReport r = StableProfiles(FixtureTree("markov-simple"),
                                     Rational(1, 10), Rational(1, 100));
  EXPECT_EQ(r.stable, (std::vector<std::uint64_t>{0}));
  EXPECT_NEAR(static_cast<double>(r.states[0].limit), 1.0, 1e-6);
  EXPECT_FALSE(r.states[3].stable);
  EXPECT_TRUE(r.states[3].is_nash);
}

TEST(StableProfiles, SupportIsNashAndNonNashWeightShrinks) {
  for (const char* name : {"markov-abcdefgh", "markov-simple"}) {
    StabilityReport r =
        StableProfiles(FixtureTree(name), Rational(1, 10), Rational(1, 100));
    for (const StateStability& s : r.states) {
      if (!s.is_nash) {
        EXPECT_LT(std::fabs(s.limit), 1e-6L) << name;
      }
    }
    for (std::size_t k = 0; k + 1 < r.eps_ladder.size(); ++k) {
      long double now = 0, next = 0;
      for (const StateStability& s : r.states) {
        if (s.is_nash) continue;
        now += s.ladder[k];
        next += s.ladder[k + 1];
      }
      EXPECT_LE(next, now + 1e-15L) << name << " rung " << k;
    }
  }
}

TEST(Robustness, SupportSurvivesScaledProbabilities) {
  auto eight = FixtureTree("markov-abcdefgh");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(RobustnessCheck(eight, Rational(1, 30), Rational(1, 300),
                                Rational(2), seed))
        << seed;
  }
  EXPECT_TRUE(RobustnessCheck(eight, Rational(1, 30), Rational(1, 300),
                              Rational(1), 0));
  EXPECT_TRUE(RobustnessCheck(FixtureTree("markov-simple"), Rational(1, 30),
                              Rational(1, 300), Rational(2), 3));
  EXPECT_THROW(
      RobustnessCheck(eight, Rational(1, 10), Rational(1, 100), Rational(2), 0),
      Error);
}

TEST(Dump, RowMajorExactText) {
  PerturbedChain chain = BuildChain(FixtureTree("markov-simple"),
                                    Rational(1, 10), Rational(1, 100));
  std::string dump = chain.Dump();
  std::string first = dump.substr(0, dump.find('\n'));
  EXPECT_EQ(first, "1 0 0 0");
  EXPECT_EQ(FormatRational(chain.Entry(3, 2)), "1/100");
}

}  // namespace
}  // namespace lazyeq
