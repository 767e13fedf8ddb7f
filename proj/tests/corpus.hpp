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

#ifndef LAZYEQ_TESTS_CORPUS_HPP_
#define LAZYEQ_TESTS_CORPUS_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lazyeq.hpp"

namespace lazyeq {
namespace corpus {

// Exhaustive checks stay cheap below this many profiles; larger draws are
// redrawn with the next sub-seed.
inline constexpr std::uint64_t kProfileLimit = 1 << 13;

inline std::shared_ptr<const Game> Tree(const std::string& text) {
  return std::get<TreeDocument>(ParseDocument(text)).game;
}

inline Profile TreeProfile(const std::string& text) {
  return ParseProfile(text);
}

inline std::shared_ptr<const DagGame> Dag(const std::string& text) {
  return std::get<DagDocument>(ParseDocument(text)).game;
}

inline std::shared_ptr<const Game> FixtureTree(const std::string& name) {
  return Tree(FixtureText(name));
}

inline Profile FixtureProfile(const std::string& name) {
  return ParseProfile(FixtureText(name));
}

inline DagProfile FixtureDagProfile(const std::string& name) {
  return ParseDagProfile(FixtureText(name));
}

// Mixed preference classes: one game in five is in payoff mode, otherwise
// every player draws linear, acyclic, swo or crazy independently.
inline GenParams DrawParams(Rng& rng, bool dag) {
  GenParams p;
  p.players = static_cast<int>(UniformInt(rng, 1, 3));
  p.depth = static_cast<int>(UniformInt(rng, 1, 3));
  p.branch = static_cast<int>(UniformInt(rng, 2, 3));
  p.outcomes = static_cast<int>(UniformInt(rng, 2, 5));
  p.nodes = static_cast<int>(UniformInt(rng, 1, 8));
  if (Bernoulli(rng, 1, 5)) {
    p.prefs = {PrefKind::kPayoff};
    if (dag) p.outcomes = static_cast<int>(UniformInt(rng, 2, 4));
  } else {
    p.prefs.clear();
    const PrefKind kinds[] = {PrefKind::kLinear, PrefKind::kAcyclic,
                              PrefKind::kSwo, PrefKind::kCrazy};
    for (int a = 0; a < p.players; ++a) {
      p.prefs.push_back(kinds[UniformIndex(rng, 4)]);
    }
  }
  return p;
}

inline std::shared_ptr<const Game> RandomTree(std::uint64_t k) {
  for (std::uint64_t sub = 0;; ++sub) {
    Rng rng(k * 1000003 + sub);
    GenParams p = DrawParams(rng, false);
    auto g = RandomTreeGame(p, rng());
    if (ProfileCount(*g) <= kProfileLimit) return g;
  }
}

inline std::shared_ptr<const DagGame> RandomDag(std::uint64_t k) {
  for (std::uint64_t sub = 0;; ++sub) {
    Rng rng(k * 1000033 + sub + 77);
    GenParams p = DrawParams(rng, true);
    auto g = RandomDagGame(p, rng());
    if (ProfileCount(*g) <= kProfileLimit) return g;
  }
}

inline bool AllAcyclic(const GameBase& g) {
  for (const PreferenceRelation& p : g.preferences()) {
    if (!IsAcyclic(p)) return false;
  }
  return true;
}

}  // namespace corpus
}  // namespace lazyeq

#endif  // LAZYEQ_TESTS_CORPUS_HPP_
