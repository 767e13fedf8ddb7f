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

#ifndef LAZYEQ_POTENTIALS_HPP_
#define LAZYEQ_POTENTIALS_HPP_

#include <cstdint>
#include <vector>

#include "lazyeq/core_games.hpp"

namespace lazyeq {

// Delta(g, a): how many subtrees player a passes over in the whole game.
// Indexed by player.
inline std::vector<std::int64_t> BigDelta(const Game& g) {
  std::vector<std::int64_t> delta(g.num_players(), 0);
  for (NodeId n : g.internal_nodes()) {
    delta[g.node(n).owner] += g.node(n).degree() - 1;
  }
  return delta;
}

// delta(s, a, o), indexed [player][outcome].
using DismissalTable = std::vector<std::vector<std::int64_t>>;

inline DismissalTable SmallDeltaRaw(const Game& g,
                                    const std::vector<int>& choices) {
  // Pre-order numbering: children have larger ids than their parent.
  std::vector<OutcomeId> induced(g.num_nodes(), kNone);
  for (NodeId n = g.num_nodes() - 1; n >= 0; --n) {
    const GameNode& node = g.node(n);
    induced[n] =
        node.IsLeaf() ? node.outcome : induced[node.successors[choices[n]]];
  }
  DismissalTable delta(g.num_players(),
                       std::vector<std::int64_t>(g.num_outcomes(), 0));
  for (NodeId n : g.internal_nodes()) {
    const GameNode& node = g.node(n);
    for (int j = 0; j < node.degree(); ++j) {
      if (j != choices[n]) ++delta[node.owner][induced[node.successors[j]]];
    }
  }
  return delta;
}

inline DismissalTable SmallDelta(const Profile& s) {
  return SmallDeltaRaw(s.game(), s.choices());
}

// M(s, a) = sum over o of (h(a, o) - 1) * delta(s, a, o).
inline std::int64_t PotentialMRaw(const Game& g, const DismissalTable& delta,
                                  const std::vector<int>& heights, PlayerId a) {
  std::int64_t m = 0;
  for (OutcomeId o = 0; o < g.num_outcomes(); ++o) {
    m += (heights[o] - 1) * delta[a][o];
  }
  return m;
}

inline std::int64_t PotentialM(const Profile& s, PlayerId a) {
  std::vector<int> heights = ChainHeights(s.game().preference(a));
  return PotentialMRaw(s.game(), SmallDelta(s), heights, a);
}

// (h_a - 1) * Delta(g, a).
inline std::int64_t StepBound(const Game& g, PlayerId a) {
  std::int64_t h = MaxChainHeight(g.preference(a));
  return (h - 1) * BigDelta(g)[a];
}

// (h - 1) * (l - 1) with h the largest chain height over all players.
inline std::int64_t GlobalBound(const Game& g) {
  std::int64_t h = 0;
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    h = std::max<std::int64_t>(h, MaxChainHeight(g.preference(a)));
  }
  return (h - 1) * (g.num_leaves() - 1);
}

}  // namespace lazyeq

#endif  // LAZYEQ_POTENTIALS_HPP_
