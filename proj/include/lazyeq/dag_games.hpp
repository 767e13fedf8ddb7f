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

#ifndef LAZYEQ_DAG_GAMES_HPP_
#define LAZYEQ_DAG_GAMES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/dynamics.hpp"
#include "lazyeq/equilibria.hpp"
#include "lazyeq/graph.hpp"

namespace lazyeq {

inline Play DagInducedPlay(const DagProfile& s) { return InducedPlay(s); }

inline bool DagLazyConvertible(const DagProfile& s, const DagProfile& t,
                               PlayerId a) {
  return LazyConvertibleOnPlay(s, t, a);
}

inline std::vector<DagProfile> DagLazySuccessors(const DagProfile& s,
                                                 PlayerId a) {
  return LazySuccessors(s, a);
}

// Brute-force equilibria, checked against the sinks of lazy improvement.
inline std::vector<DagProfile> DagNash(std::shared_ptr<const DagGame> game,
                                       std::uint64_t cap = ProfileCap()) {
  ProfileSpace<DagGame> space(std::move(game), cap);
  std::vector<std::uint64_t> ne = NashIndices(space);
  if (ne != ImprovementSinks(space, StepMode::kLazy)) {
    throw std::logic_error("equilibria differ from lazy improvement sinks");
  }
  std::vector<DagProfile> out;
  for (std::uint64_t i : ne) out.push_back(space.Decode(i));
  return out;
}

inline std::shared_ptr<const DagGame> TreeToDag(const Game& g) {
  std::vector<std::string> names;
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    names.push_back("n" + std::to_string(n));
  }
  auto dag = std::make_shared<DagGame>(
      g.players(),
      g.outcomes().payoff_mode() ? OutcomeSet::Abstract(g.outcomes().names())
                                 : g.outcomes(),
      g.preferences(), g.nodes(), names, g.root());
  return dag;
}

// ---------------------------------------------------------------------------
// Preference families over linear orders

// z <_a y <_a x together with x <_b y <_b z (pattern 1) or x <_b z <_b y
// (pattern 2).
struct PatternWitness {
  PlayerId a = kNone;
  PlayerId b = kNone;
  OutcomeId x = kNone;
  OutcomeId y = kNone;
  OutcomeId z = kNone;
  int pattern = 0;
};

// Blocks from worst to best; every player ranks a later block above an
// earlier one, and inside a block the players agree or are exactly opposed.
struct PreferencePartition {
  std::vector<std::vector<OutcomeId>> blocks;
  // Per block, whether some pair of players orders it in opposite ways.
  std::vector<bool> contested;
};

using FamilyVerdict = std::variant<PreferencePartition, PatternWitness>;

inline FamilyVerdict CheckPreferenceFamily(
    const std::vector<PreferenceRelation>& prefs) {
  if (prefs.empty()) Fail(ErrorKind::kPrecondition, "no preferences given");
  for (const PreferenceRelation& p : prefs) {
    if (ClassifyPreference(p) != PreferenceClass::kStrictLinear ||
        p.num_outcomes() != prefs[0].num_outcomes()) {
      Fail(ErrorKind::kPrecondition, "preferences not strict-linear");
    }
  }
  const int n = prefs[0].num_outcomes();
  const int np = static_cast<int>(prefs.size());
  for (int pattern = 1; pattern <= 2; ++pattern) {
    for (PlayerId a = 0; a < np; ++a) {
      for (PlayerId b = 0; b < np; ++b) {
        for (OutcomeId x = 0; x < n; ++x) {
          for (OutcomeId y = 0; y < n; ++y) {
            for (OutcomeId z = 0; z < n; ++z) {
              if (!prefs[a].Less(z, y) || !prefs[a].Less(y, x)) continue;
              bool hit = pattern == 1
                             ? prefs[b].Less(x, y) && prefs[b].Less(y, z)
                             : prefs[b].Less(x, z) && prefs[b].Less(z, y);
              if (hit) return PatternWitness{a, b, x, y, z, pattern};
            }
          }
        }
      }
    }
  }
  // x ~ y iff x <=_a y <=_b x for some a, b; an equivalence here.
  std::vector<int> block(n);
  std::iota(block.begin(), block.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return block[v] == v ? v : block[v] = find(block[v]);
  };
  for (OutcomeId x = 0; x < n; ++x) {
    for (OutcomeId y = 0; y < n; ++y) {
      for (PlayerId a = 0; a < np; ++a) {
        for (PlayerId b = 0; b < np; ++b) {
          if (prefs[a].Less(x, y) && prefs[b].Less(y, x)) {
            block[find(x)] = find(y);
          }
        }
      }
    }
  }
  std::map<int, std::vector<OutcomeId>> groups;
  for (OutcomeId o = 0; o < n; ++o) groups[find(o)].push_back(o);
  PreferencePartition partition;
  for (auto& [root, members] : groups) partition.blocks.push_back(members);
  const PreferenceRelation& first = prefs[0];
  std::sort(partition.blocks.begin(), partition.blocks.end(),
            [&](const auto& u, const auto& v) {
              return first.Less(u.front(), v.front());
            });
  for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
    const auto& blk = partition.blocks[i];
    if (blk.size() > 2) {
      throw std::logic_error("preference family block larger than two");
    }
    bool contested = false;
    if (blk.size() == 2) {
      for (const PreferenceRelation& p : prefs) {
        contested =
            contested || p.Less(blk[0], blk[1]) != first.Less(blk[0], blk[1]);
      }
    }
    partition.contested.push_back(contested);
    for (std::size_t j = i + 1; j < partition.blocks.size(); ++j) {
      for (OutcomeId x : blk) {
        for (OutcomeId y : partition.blocks[j]) {
          for (const PreferenceRelation& p : prefs) {
            if (!p.Less(x, y)) {
              throw std::logic_error("preference family blocks not ordered");
            }
          }
        }
      }
    }
  }
  return partition;
}

// ---------------------------------------------------------------------------
// Win-lose potential

// Non-sink nodes by number: entry i holds the node numbered i + 1; the root
// is numbered last and numbers decrease along every edge.
inline std::vector<NodeId> LexNumbering(const DagGame& g) {
  std::vector<NodeId> out;
  const auto& topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    if (!g.node(*it).IsLeaf()) out.push_back(*it);
  }
  return out;
}

// Entry i is 1 when the owner of the node numbered i + 1 wins the play that
// starts there. Lexicographic comparison starts at entry 0.
inline std::vector<std::uint8_t> LexPotential(const DagProfile& s) {
  const DagGame& g = s.game();
  if (g.num_outcomes() != 2)
    Fail(ErrorKind::kPrecondition, "not a win-lose game");
  std::vector<OutcomeId> win(g.num_players());
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    const PreferenceRelation& p = g.preference(a);
    if (p.Less(0, 1) == p.Less(1, 0)) {
      Fail(ErrorKind::kPrecondition, "not a win-lose game");
    }
    win[a] = p.Less(0, 1) ? 1 : 0;
  }
  std::vector<std::uint8_t> tuple;
  for (NodeId n : LexNumbering(g)) {
    OutcomeId o = InducedOutcomeFrom(g, s.choices(), n);
    tuple.push_back(o == win[g.node(n).owner] ? 1 : 0);
  }
  return tuple;
}

// ---------------------------------------------------------------------------
// Very lazy improvement

enum class VeryLazyVariant { kMinChanges, kMinPlayDistance, kMinPlayLength };

inline const char* VeryLazyVariantName(VeryLazyVariant v) {
  switch (v) {
    case VeryLazyVariant::kMinChanges:
      return "min-changes";
    case VeryLazyVariant::kMinPlayDistance:
      return "min-play-distance";
    case VeryLazyVariant::kMinPlayLength:
      return "min-play-length";
  }
  return "min-changes";
}

// Among the lazy improvements of a towards each improving outcome, the ones
// minimizing the variant's cost; ties keep every minimizer. Play distance is
// ranked through the common prefix length of the old and new plays.
template <class Emit>
void ForEachVeryLazySuccessor(const GameBase& g, const std::vector<int>& s,
                              PlayerId a, VeryLazyVariant variant,
                              Emit&& emit) {
  std::vector<NodeId> old_play = InducedPlayFrom(g, s, g.root()).nodes;
  struct Candidate {
    std::vector<int> choices;
    std::int64_t cost;
  };
  std::map<OutcomeId, std::vector<Candidate>> best;
  ForEachLazySuccessor(
      g, s, a,
      [&](const std::vector<int>& t, const std::vector<NodeId>& trail) {
        std::int64_t cost = 0;
        switch (variant) {
          case VeryLazyVariant::kMinChanges:
            for (NodeId n : g.internal_nodes()) cost += s[n] != t[n];
            break;
          case VeryLazyVariant::kMinPlayDistance: {
            std::size_t k = 0;
            while (k < trail.size() && k < old_play.size() &&
                   trail[k] == old_play[k]) {
              ++k;
            }
            cost = -static_cast<std::int64_t>(k);
            break;
          }
          case VeryLazyVariant::kMinPlayLength:
            cost = static_cast<std::int64_t>(trail.size()) - 1;
            break;
        }
        auto& slot = best[g.node(trail.back()).outcome];
        if (!slot.empty() && cost > slot.front().cost) return true;
        if (!slot.empty() && cost < slot.front().cost) slot.clear();
        slot.push_back({t, cost});
        return true;
      });
  for (auto& [o, candidates] : best) {
    for (const Candidate& c : candidates) emit(c.choices);
  }
}

template <class G>
std::vector<BasicProfile<G>> VeryLazySuccessors(const BasicProfile<G>& s,
                                                PlayerId a,
                                                VeryLazyVariant variant) {
  std::vector<BasicProfile<G>> out;
  ForEachVeryLazySuccessor(
      s.game(), s.choices(), a, variant,
      [&](const std::vector<int>& t) { out.emplace_back(s.game_ptr(), t); });
  return out;
}

template <class G>
LabeledDigraph VeryLazyGraph(const ProfileSpace<G>& space,
                             VeryLazyVariant variant) {
  const G& g = space.game();
  return BuildProfileGraph(space, [&](const std::vector<int>& s, auto&& emit) {
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      ForEachVeryLazySuccessor(g, s, a, variant,
                               [&](const std::vector<int>& t) { emit(t, a); });
    }
  });
}

// ---------------------------------------------------------------------------

// Backward pass over a topological order under linear extensions of the
// preferences: each node keeps the first successor whose continuation is
// best for its owner.
inline DagProfile DagSpeViaLinearExtension(
    const std::shared_ptr<const DagGame>& game) {
  const DagGame& g = *game;
  std::vector<std::vector<int>> rank(g.num_players());
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    PreferenceRelation ext = LinearExtension(g.preference(a));
    rank[a].assign(g.num_outcomes(), 0);
    for (OutcomeId x = 0; x < g.num_outcomes(); ++x) {
      for (OutcomeId y = 0; y < g.num_outcomes(); ++y) {
        if (ext.Less(y, x)) ++rank[a][x];
      }
    }
  }
  std::vector<int> choices(g.num_nodes(), 0);
  std::vector<OutcomeId> induced(g.num_nodes(), kNone);
  const auto& topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const GameNode& node = g.node(*it);
    if (node.IsLeaf()) {
      induced[*it] = node.outcome;
      continue;
    }
    int pick = 0;
    for (int k = 1; k < node.degree(); ++k) {
      if (rank[node.owner][induced[node.successors[k]]] >
          rank[node.owner][induced[node.successors[pick]]]) {
        pick = k;
      }
    }
    choices[*it] = pick;
    induced[*it] = induced[node.successors[pick]];
  }
  DagProfile s(game, choices);
  if (!IsNash(s)) {
    throw std::logic_error("dag backward induction did not produce an NE");
  }
  return s;
}

}  // namespace lazyeq

#endif  // LAZYEQ_DAG_GAMES_HPP_
