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

#ifndef LAZYEQ_GENERATORS_HPP_
#define LAZYEQ_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/io.hpp"
#include "lazyeq/normal_form.hpp"
#include "lazyeq/random.hpp"

namespace lazyeq {

enum class PrefKind { kLinear, kAcyclic, kSwo, kCrazy, kPayoff };

inline const char* PrefKindName(PrefKind k) {
  switch (k) {
    case PrefKind::kLinear:
      return "linear";
    case PrefKind::kAcyclic:
      return "acyclic";
    case PrefKind::kSwo:
      return "swo";
    case PrefKind::kCrazy:
      return "crazy";
    case PrefKind::kPayoff:
      return "payoff";
  }
  return "linear";
}

inline PrefKind ParsePrefKind(const std::string& s) {
  if (s == "linear") return PrefKind::kLinear;
  if (s == "acyclic") return PrefKind::kAcyclic;
  if (s == "swo") return PrefKind::kSwo;
  if (s == "crazy") return PrefKind::kCrazy;
  if (s == "payoff") return PrefKind::kPayoff;
  Fail(ErrorKind::kUsage, "unknown preference class '" + s + "'");
}

struct GenParams {
  int players = 2;
  int depth = 2;     // trees
  int branch = 2;    // largest out-degree / strategy count
  int outcomes = 3;  // abstract outcomes, or payoff values 0..outcomes-1
  int nodes = 6;     // non-sink nodes of a dag
  // One entry per player; a single entry applies to every player. kPayoff
  // must then be the only entry.
  std::vector<PrefKind> prefs = {PrefKind::kLinear};
};

inline void CheckParams(const GenParams& p) {
  auto bad = [](const std::string& what) {
    Fail(ErrorKind::kUsage, "generator: " + what);
  };
  if (p.players < 1 || p.players > 16) bad("players must be in 1..16");
  if (p.depth < 0 || p.depth > 12) bad("depth must be in 0..12");
  if (p.branch < 1 || p.branch > 16) bad("branch must be in 1..16");
  if (p.outcomes < 1 || p.outcomes > 64) bad("outcomes must be in 1..64");
  if (p.nodes < 1 || p.nodes > 64) bad("nodes must be in 1..64");
  if (p.prefs.empty()) bad("no preference class");
  if (p.prefs.size() != 1 && static_cast<int>(p.prefs.size()) != p.players) {
    bad("one preference class, or one per player");
  }
  bool payoff = std::find(p.prefs.begin(), p.prefs.end(), PrefKind::kPayoff) !=
                p.prefs.end();
  if (payoff && p.prefs.size() != 1) bad("payoff mode applies to all players");
  for (PrefKind k : p.prefs) {
    if (k == PrefKind::kSwo && p.outcomes < 2) {
      bad("a strict weak order that is not linear needs two outcomes");
    }
  }
}

inline PrefKind KindFor(const GenParams& p, PlayerId a) {
  return p.prefs.size() == 1 ? p.prefs[0] : p.prefs[a];
}

inline std::vector<OutcomeId> RandomPermutation(Rng& rng, int n) {
  std::vector<OutcomeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Shuffle(rng, perm);
  return perm;
}

// A relation of exactly the requested class.
inline PreferenceRelation RandomPreference(Rng& rng, int n, PrefKind kind) {
  PreferenceRelation rel(n);
  switch (kind) {
    case PrefKind::kLinear:
      rel.AddChain(RandomPermutation(rng, n));
      break;
    case PrefKind::kAcyclic: {
      std::vector<OutcomeId> perm = RandomPermutation(rng, n);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (Bernoulli(rng, 1, 2)) rel.Add(perm[i], perm[j]);
        }
      }
      break;
    }
    case PrefKind::kSwo: {
      // Levels with at least one tie.
      std::vector<int> level(n);
      for (int i = 0; i < n; ++i) {
        level[i] = static_cast<int>(UniformIndex(rng, n));
      }
      OutcomeId x = static_cast<OutcomeId>(UniformIndex(rng, n));
      OutcomeId y = static_cast<OutcomeId>(UniformIndex(rng, n - 1));
      if (y >= x) ++y;
      level[y] = level[x];
      for (OutcomeId u = 0; u < n; ++u) {
        for (OutcomeId v = 0; v < n; ++v) {
          if (level[u] < level[v]) rel.Add(u, v);
        }
      }
      break;
    }
    case PrefKind::kCrazy: {
      rel = RandomPreference(rng, n, PrefKind::kAcyclic);
      if (n == 1) {
        rel.Add(0, 0);
      } else {
        OutcomeId x = static_cast<OutcomeId>(UniformIndex(rng, n));
        OutcomeId y = static_cast<OutcomeId>(UniformIndex(rng, n - 1));
        if (y >= x) ++y;
        rel.Add(x, y);
        rel.Add(y, x);
      }
      break;
    }
    case PrefKind::kPayoff:
      Fail(ErrorKind::kUsage, "payoff preferences are derived, not drawn");
  }
  return rel;
}

inline std::vector<std::string> GeneratedPlayers(int n) {
  static const char* kNames = "abcdefghijklmnop";
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, kNames[i]));
  return out;
}

inline std::vector<std::string> GeneratedOutcomes(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("o" + std::to_string(i));
  return out;
}

namespace internal {

// Outcome draws are recorded as payoff vectors or abstract ids.
struct LeafDraw {
  std::vector<Rational> payoff;
  OutcomeId id = kNone;
};

inline LeafDraw DrawLeaf(Rng& rng, const GenParams& p, bool payoff) {
  LeafDraw d;
  if (payoff) {
    for (int a = 0; a < p.players; ++a) {
      d.payoff.emplace_back(static_cast<int>(UniformIndex(rng, p.outcomes)));
    }
  } else {
    d.id = static_cast<OutcomeId>(UniformIndex(rng, p.outcomes));
  }
  return d;
}

inline TreeSpec DrawTree(Rng& rng, const GenParams& p, int level, bool payoff,
                         OutcomeSet& outcomes) {
  bool leaf = level >= p.depth || (level > 0 && Bernoulli(rng, 1, 4));
  if (leaf) {
    LeafDraw d = DrawLeaf(rng, p, payoff);
    return TreeSpec::Leaf(payoff ? outcomes.Intern(d.payoff) : d.id);
  }
  PlayerId owner = static_cast<PlayerId>(UniformIndex(rng, p.players));
  int degree =
      static_cast<int>(UniformInt(rng, std::min(2, p.branch), p.branch));
  std::vector<TreeSpec> children;
  for (int k = 0; k < degree; ++k) {
    children.push_back(DrawTree(rng, p, level + 1, payoff, outcomes));
  }
  return TreeSpec::Node(owner, std::move(children));
}

inline std::vector<PreferenceRelation> DrawPreferences(Rng& rng,
                                                       const GenParams& p,
                                                       int num_outcomes) {
  std::vector<PreferenceRelation> prefs;
  for (PlayerId a = 0; a < p.players; ++a) {
    prefs.push_back(RandomPreference(rng, num_outcomes, KindFor(p, a)));
  }
  return prefs;
}

}  // namespace internal

inline bool IsPayoffParams(const GenParams& p) {
  return p.prefs.size() == 1 && p.prefs[0] == PrefKind::kPayoff;
}

// Non-root nodes above the depth limit become leaves with probability 1/4;
// internal nodes draw their out-degree uniformly in [2, branch].
inline std::shared_ptr<const Game> RandomTreeGame(const GenParams& p,
                                                  std::uint64_t seed) {
  CheckParams(p);
  Rng rng(seed);
  bool payoff = IsPayoffParams(p);
  OutcomeSet outcomes =
      payoff ? OutcomeSet::Payoff(p.players)
             : OutcomeSet::Abstract(GeneratedOutcomes(p.outcomes));
  TreeSpec tree = internal::DrawTree(rng, p, 0, payoff, outcomes);
  std::vector<PreferenceRelation> prefs;
  if (!payoff) prefs = internal::DrawPreferences(rng, p, p.outcomes);
  return Game::Make(GeneratedPlayers(p.players), outcomes, prefs, tree);
}

// Node 0 is the root. Every other non-sink node gets a parent among the
// earlier ones and every sink gets one parent; out-degrees are then topped up
// to a uniform draw in [1, branch]. One sink per outcome value drawn.
inline std::shared_ptr<const DagGame> RandomDagGame(const GenParams& p,
                                                    std::uint64_t seed) {
  CheckParams(p);
  Rng rng(seed);
  bool payoff = IsPayoffParams(p);
  const int n = p.nodes;
  const int sinks = payoff ? std::max(2, p.outcomes) : p.outcomes;
  OutcomeSet outcomes =
      payoff ? OutcomeSet::Payoff(p.players)
             : OutcomeSet::Abstract(GeneratedOutcomes(p.outcomes));
  std::vector<GameNode> nodes(n + sinks);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  for (int j = 0; j < sinks; ++j) names.push_back("t" + std::to_string(j));
  for (int j = 0; j < sinks; ++j) {
    NodeId t = n + j;
    if (payoff) {
      nodes[t].outcome =
          outcomes.Intern(internal::DrawLeaf(rng, p, true).payoff);
    } else {
      nodes[t].outcome = j;
    }
  }
  std::vector<std::vector<char>> edge(n, std::vector<char>(n + sinks, 0));
  for (int j = 1; j < n; ++j) edge[UniformIndex(rng, j)][j] = 1;
  for (int j = 0; j < sinks; ++j) edge[UniformIndex(rng, n)][n + j] = 1;
  for (int i = 0; i < n; ++i) {
    nodes[i].owner = static_cast<PlayerId>(UniformIndex(rng, p.players));
    int want = static_cast<int>(UniformInt(rng, 1, p.branch));
    std::vector<NodeId> free;
    int have = 0;
    for (int t = i + 1; t < n + sinks; ++t) {
      if (edge[i][t]) {
        ++have;
      } else {
        free.push_back(t);
      }
    }
    Shuffle(rng, free);
    for (std::size_t k = 0; have < want && k < free.size(); ++k, ++have) {
      edge[i][free[k]] = 1;
    }
    for (int t = i + 1; t < n + sinks; ++t) {
      if (edge[i][t]) nodes[i].successors.push_back(t);
    }
  }
  std::vector<PreferenceRelation> prefs;
  if (!payoff) prefs = internal::DrawPreferences(rng, p, p.outcomes);
  return DagGame::Make(GeneratedPlayers(p.players), outcomes, prefs, nodes,
                       names, 0);
}

// Strategy counts uniform in [1, branch].
inline std::shared_ptr<const NormalFormGame> RandomNormalFormGame(
    const GenParams& p, std::uint64_t seed) {
  CheckParams(p);
  Rng rng(seed);
  bool payoff = IsPayoffParams(p);
  std::vector<std::vector<std::string>> strategies;
  std::uint64_t count = 1;
  for (int a = 0; a < p.players; ++a) {
    int k = static_cast<int>(UniformInt(rng, 1, p.branch));
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) {
      names.push_back(GeneratedPlayers(p.players)[a] + std::to_string(i));
    }
    strategies.push_back(names);
    count *= k;
  }
  OutcomeSet outcomes =
      payoff ? OutcomeSet::Payoff(p.players)
             : OutcomeSet::Abstract(GeneratedOutcomes(p.outcomes));
  std::vector<OutcomeId> table;
  for (std::uint64_t i = 0; i < count; ++i) {
    internal::LeafDraw d = internal::DrawLeaf(rng, p, payoff);
    table.push_back(payoff ? outcomes.Intern(d.payoff) : d.id);
  }
  std::vector<PreferenceRelation> prefs;
  if (!payoff) prefs = internal::DrawPreferences(rng, p, p.outcomes);
  return std::make_shared<const NormalFormGame>(
      GeneratedPlayers(p.players), strategies, outcomes, table, prefs);
}

// Strict linear orders sharing a random ordered partition into blocks of one
// or two outcomes, each pair oriented independently per player.
inline std::vector<PreferenceRelation> RandomBlockFamily(Rng& rng, int players,
                                                         int num_outcomes) {
  std::vector<OutcomeId> perm = RandomPermutation(rng, num_outcomes);
  std::vector<std::vector<OutcomeId>> blocks;
  for (std::size_t i = 0; i < perm.size();) {
    if (i + 1 < perm.size() && Bernoulli(rng, 1, 2)) {
      blocks.push_back({perm[i], perm[i + 1]});
      i += 2;
    } else {
      blocks.push_back({perm[i]});
      i += 1;
    }
  }
  std::vector<PreferenceRelation> prefs;
  for (int a = 0; a < players; ++a) {
    std::vector<OutcomeId> chain;
    for (const auto& b : blocks) {
      if (b.size() == 2 && Bernoulli(rng, 1, 2)) {
        chain.push_back(b[1]);
        chain.push_back(b[0]);
      } else {
        chain.insert(chain.end(), b.begin(), b.end());
      }
    }
    PreferenceRelation rel(num_outcomes);
    rel.AddChain(chain);
    prefs.push_back(rel);
  }
  return prefs;
}

enum class GenKind { kTree, kDag, kNormalForm };

inline GameDocument GenerateDocument(GenKind kind, const GenParams& p,
                                     std::uint64_t seed) {
  switch (kind) {
    case GenKind::kTree:
      return TreeDocument{RandomTreeGame(p, seed), std::nullopt};
    case GenKind::kDag:
      return DagDocument{RandomDagGame(p, seed), std::nullopt};
    case GenKind::kNormalForm:
      return NormalFormDocument{RandomNormalFormGame(p, seed)};
  }
  Fail(ErrorKind::kUsage, "unknown kind");
}

}  // namespace lazyeq

#endif  // LAZYEQ_GENERATORS_HPP_
