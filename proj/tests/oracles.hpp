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

// Deliberately naive reference implementations. They share only the game
// data structures with the library and re-derive everything else from the
// definitions, so agreement with the library is meaningful.

#ifndef LAZYEQ_TESTS_ORACLES_HPP_
#define LAZYEQ_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "lazyeq.hpp"

namespace lazyeq {
namespace oracle {

using Choices = std::vector<int>;

// Every choice vector, built recursively node by node.
inline std::vector<Choices> AllChoices(const GameBase& g) {
  std::vector<Choices> out;
  Choices c(g.num_nodes(), 0);
  std::function<void(NodeId)> rec = [&](NodeId n) {
    if (n == g.num_nodes()) {
      out.push_back(c);
      return;
    }
    if (g.node(n).IsLeaf()) {
      rec(n + 1);
      return;
    }
    for (int k = 0; k < g.node(n).degree(); ++k) {
      c[n] = k;
      rec(n + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<NodeId> PlayNodes(const GameBase& g, const Choices& c,
                                     NodeId from) {
  std::vector<NodeId> nodes{from};
  while (!g.node(nodes.back()).IsLeaf()) {
    const GameNode& node = g.node(nodes.back());
    nodes.push_back(node.successors[c[nodes.back()]]);
  }
  return nodes;
}

inline OutcomeId Outcome(const GameBase& g, const Choices& c,
                         NodeId from = kNone) {
  NodeId start = from == kNone ? g.root() : from;
  return g.node(PlayNodes(g, c, start).back()).outcome;
}

inline bool Convertible(const GameBase& g, const Choices& s, const Choices& t,
                        PlayerId a) {
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    if (!g.node(n).IsLeaf() && g.node(n).owner != a && s[n] != t[n]) {
      return false;
    }
  }
  return true;
}

// Changes only at a's nodes on the new play.
inline bool Lazy(const GameBase& g, const Choices& s, const Choices& t,
                 PlayerId a) {
  if (!Convertible(g, s, t, a)) return false;
  std::vector<NodeId> play = PlayNodes(g, t, g.root());
  std::set<NodeId> on(play.begin(), play.end());
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    if (s[n] != t[n] && !on.count(n)) return false;
  }
  return true;
}

inline bool Less(const GameBase& g, PlayerId a, OutcomeId x, OutcomeId y) {
  for (const auto& [lo, hi] : g.preference(a).Pairs()) {
    if (lo == x && hi == y) return true;
  }
  return false;
}

inline std::set<Choices> Successors(const GameBase& g, const Choices& s,
                                    PlayerId a, bool lazy) {
  std::set<Choices> out;
  OutcomeId v = Outcome(g, s);
  for (const Choices& t : AllChoices(g)) {
    bool ok = lazy ? Lazy(g, s, t, a) : Convertible(g, s, t, a);
    if (ok && Less(g, a, v, Outcome(g, t))) out.insert(t);
  }
  return out;
}

inline std::set<Choices> Nash(const GameBase& g) {
  std::vector<Choices> all = AllChoices(g);
  std::set<Choices> out;
  for (const Choices& s : all) {
    bool ne = true;
    for (const Choices& t : all) {
      for (PlayerId a = 0; a < g.num_players() && ne; ++a) {
        if (Convertible(g, s, t, a) &&
            Less(g, a, Outcome(g, s), Outcome(g, t))) {
          ne = false;
        }
      }
      if (!ne) break;
    }
    if (ne) out.insert(s);
  }
  return out;
}

// Nash in the subgame at top: deviations confined to the subtree.
inline bool NashAt(const Game& g, const Choices& s, NodeId top) {
  for (const Choices& t : AllChoices(g)) {
    bool inside = true;
    for (NodeId n = 0; n < g.num_nodes() && inside; ++n) {
      if (s[n] != t[n] && !g.InSubtree(n, top)) inside = false;
    }
    if (!inside) continue;
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      if (Convertible(g, s, t, a) &&
          Less(g, a, Outcome(g, s, top), Outcome(g, t, top))) {
        return false;
      }
    }
  }
  return true;
}

inline bool Spe(const Game& g, const Choices& s) {
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    if (!g.node(n).IsLeaf() && !NashAt(g, s, n)) return false;
  }
  return true;
}

inline std::vector<std::int64_t> BigDelta(const Game& g, NodeId n) {
  std::vector<std::int64_t> d(g.num_players(), 0);
  const GameNode& node = g.node(n);
  if (node.IsLeaf()) return d;
  for (NodeId c : node.successors) {
    std::vector<std::int64_t> sub = BigDelta(g, c);
    for (PlayerId a = 0; a < g.num_players(); ++a) d[a] += sub[a];
  }
  d[node.owner] += node.degree() - 1;
  return d;
}

inline std::vector<std::vector<std::int64_t>> SmallDelta(const Game& g,
                                                         const Choices& s,
                                                         NodeId n) {
  std::vector<std::vector<std::int64_t>> d(
      g.num_players(), std::vector<std::int64_t>(g.num_outcomes(), 0));
  const GameNode& node = g.node(n);
  if (node.IsLeaf()) return d;
  for (int j = 0; j < node.degree(); ++j) {
    NodeId c = node.successors[j];
    auto sub = SmallDelta(g, s, c);
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      for (OutcomeId o = 0; o < g.num_outcomes(); ++o) d[a][o] += sub[a][o];
    }
    if (j != s[n]) ++d[node.owner][Outcome(g, s, c)];
  }
  return d;
}

// Longest chain (as a node count) ending at o, by exhaustive search.
inline int Height(const PreferenceRelation& p, OutcomeId o) {
  int best = 1;
  for (const auto& [lo, hi] : p.Pairs()) {
    if (hi == o) best = std::max(best, 1 + Height(p, lo));
  }
  return best;
}

}  // namespace oracle
}  // namespace lazyeq

#endif  // LAZYEQ_TESTS_ORACLES_HPP_
