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

#ifndef LAZYEQ_EQUILIBRIA_HPP_
#define LAZYEQ_EQUILIBRIA_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/dynamics.hpp"

namespace lazyeq {

// No player can convert s into a profile it strictly prefers.
inline bool IsNashRaw(const GameBase& g, const std::vector<int>& s) {
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    OutcomeId current = InducedOutcomeFrom(g, s, g.root());
    bool stable = true;
    ForEachConversion(g, s, a, [&](const std::vector<int>& t) {
      if (g.Prefers(a, current, InducedOutcomeFrom(g, t, g.root()))) {
        stable = false;
      }
      return stable;
    });
    if (!stable) return false;
  }
  return true;
}

template <class G>
bool IsNash(const BasicProfile<G>& s) {
  return IsNashRaw(s.game(), s.choices());
}

template <class G>
std::vector<std::uint64_t> NashIndices(const ProfileSpace<G>& space) {
  std::vector<std::uint64_t> out;
  std::vector<int> choices;
  space.DecodeInto(0, choices);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (IsNashRaw(space.game(), choices)) out.push_back(i);
    NextChoices(space.game(), choices);
  }
  return out;
}

template <class G>
std::vector<BasicProfile<G>> BruteForceNash(std::shared_ptr<const G> game,
                                            std::uint64_t cap = ProfileCap()) {
  ProfileSpace<G> space(std::move(game), cap);
  std::vector<BasicProfile<G>> out;
  for (std::uint64_t i : NashIndices(space)) out.push_back(space.Decode(i));
  return out;
}

// The restriction of s to the subgame rooted at top is a Nash equilibrium of
// that subgame.
inline bool IsNashInSubgame(const Game& g, const std::vector<int>& s,
                            NodeId top) {
  OutcomeId current = InducedOutcomeFrom(g, s, top);
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    std::vector<NodeId> mine;
    for (NodeId n = top; n < g.subtree_end(top); ++n) {
      if (g.node(n).owner == a) mine.push_back(n);
    }
    std::vector<int> t = s;
    for (NodeId n : mine) t[n] = 0;
    while (true) {
      if (g.Prefers(a, current, InducedOutcomeFrom(g, t, top))) return false;
      std::size_t i = mine.size();
      while (i > 0) {
        NodeId n = mine[i - 1];
        if (++t[n] < g.node(n).degree()) break;
        t[n] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return true;
}

namespace internal {

inline bool IsSpeAt(const Game& g, const std::vector<int>& s, NodeId n) {
  if (g.node(n).IsLeaf()) return true;
  if (!IsNashInSubgame(g, s, n)) return false;
  for (NodeId c : g.node(n).successors) {
    if (!IsSpeAt(g, s, c)) return false;
  }
  return true;
}

struct Partial {
  std::vector<int> choices;
  OutcomeId outcome;
};

inline std::vector<Partial> BackwardAt(const Game& g, NodeId n,
                                       std::uint64_t cap) {
  const GameNode& node = g.node(n);
  if (node.IsLeaf()) {
    return {Partial{std::vector<int>(g.num_nodes(), 0), node.outcome}};
  }
  std::vector<std::vector<Partial>> sub;
  for (NodeId c : node.successors) sub.push_back(BackwardAt(g, c, cap));
  const PreferenceRelation& pref = g.preference(node.owner);
  std::vector<Partial> out;
  // One output per child, then every child whose outcome is maximal among
  // those outputs.
  std::vector<std::size_t> pick(node.degree(), 0);
  while (true) {
    for (int j = 0; j < node.degree(); ++j) {
      OutcomeId o = sub[j][pick[j]].outcome;
      bool maximal = true;
      for (int i = 0; i < node.degree(); ++i) {
        if (pref.Less(o, sub[i][pick[i]].outcome)) maximal = false;
      }
      if (!maximal) continue;
      Partial p{sub[j][pick[j]].choices, o};
      p.choices[n] = j;
      for (int i = 0; i < node.degree(); ++i) {
        if (i == j) continue;
        NodeId c = node.successors[i];
        const std::vector<int>& from = sub[i][pick[i]].choices;
        std::copy(from.begin() + c, from.begin() + g.subtree_end(c),
                  p.choices.begin() + c);
      }
      out.push_back(std::move(p));
      if (out.size() > cap) {
        Fail(ErrorKind::kResourceCap,
             "backward induction output set too large");
      }
    }
    int i = 0;
    for (; i < node.degree(); ++i) {
      if (++pick[i] < sub[i].size()) break;
      pick[i] = 0;
    }
    if (i == node.degree()) break;
  }
  return out;
}

}  // namespace internal

// Subgame perfect: Nash here and, recursively, in every child subgame.
inline bool IsSpe(const Profile& s) {
  return internal::IsSpeAt(s.game(), s.choices(), s.game().root());
}

// The full output set of backward induction: for every combination of child
// outputs, every child whose outcome no other selected outcome beats.
// Sorted by profile index.
inline std::vector<Profile> BackwardInduction(
    const std::shared_ptr<const Game>& game, std::uint64_t cap = ProfileCap()) {
  for (PlayerId a = 0; a < game->num_players(); ++a) {
    if (!IsAcyclic(game->preference(a))) {
      Fail(ErrorKind::kPrecondition, "preference is cyclic");
    }
  }
  std::vector<internal::Partial> partials =
      internal::BackwardAt(*game, game->root(), cap);
  std::vector<std::vector<int>> all;
  for (auto& p : partials) all.push_back(std::move(p.choices));
  std::sort(all.begin(), all.end());
  std::vector<Profile> out;
  for (auto& c : all) out.emplace_back(game, std::move(c));
  return out;
}

// The first backward induction output by profile index.
inline Profile BackwardInductionFirst(const std::shared_ptr<const Game>& game) {
  return BackwardInduction(game).front();
}

inline Profile SpeViaLinearExtension(const std::shared_ptr<const Game>& game) {
  std::vector<PreferenceRelation> extended;
  for (PlayerId a = 0; a < game->num_players(); ++a) {
    extended.push_back(LinearExtension(game->preference(a)));
  }
  Profile bi = BackwardInductionFirst(game->WithPreferences(extended));
  Profile s(game, bi.choices());
  if (!IsSpe(s)) {
    throw std::logic_error(
        "backward induction under linear extensions "
        "did not produce an SPE");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Payoff-mode epsilon notions

namespace internal {

inline void CheckEpsilon(const GameBase& g, const Rational& eps) {
  if (!g.outcomes().payoff_mode()) {
    Fail(ErrorKind::kPrecondition, "requires payoff mode");
  }
  if (eps < 0) Fail(ErrorKind::kPrecondition, "epsilon must be non-negative");
}

}  // namespace internal

// No unilateral deviation raises the deviator's payoff by more than eps.
template <class G>
bool EpsilonNash(const BasicProfile<G>& s, const Rational& eps) {
  const G& g = s.game();
  internal::CheckEpsilon(g, eps);
  const OutcomeSet& o = g.outcomes();
  OutcomeId current = InducedOutcome(s);
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    bool ok = true;
    ForEachConversion(g, s.choices(), a, [&](const std::vector<int>& t) {
      OutcomeId v = InducedOutcomeFrom(g, t, g.root());
      ok = o.payoff(v)[a] - o.payoff(current)[a] <= eps;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

template <class G>
std::vector<BasicProfile<G>> EpsilonLazySuccessors(const BasicProfile<G>& s,
                                                   PlayerId a,
                                                   const Rational& eps) {
  const G& g = s.game();
  internal::CheckEpsilon(g, eps);
  const OutcomeSet& o = g.outcomes();
  const Rational& base = o.payoff(InducedOutcome(s))[a];
  std::vector<BasicProfile<G>> out;
  ForEachLazyConversion(
      g, s.choices(), a,
      [&](const std::vector<int>& t, const std::vector<NodeId>& trail) {
        if (o.payoff(g.node(trail.back()).outcome)[a] - base > eps) {
          out.emplace_back(s.game_ptr(), t);
        }
        return true;
      });
  return out;
}

// ---------------------------------------------------------------------------

struct EquilibriumReport {
  std::vector<std::uint64_t> ne;
  std::vector<std::uint64_t> spe;
  std::vector<std::uint64_t>
      bi_outputs;  // empty when some preference is cyclic
  bool bi_defined = false;
};

inline EquilibriumReport Equilibria(const std::shared_ptr<const Game>& game) {
  ProfileSpace<Game> space(game);
  EquilibriumReport report;
  report.ne = NashIndices(space);
  for (std::uint64_t i : report.ne) {
    if (IsSpe(space.Decode(i))) report.spe.push_back(i);
  }
  report.bi_defined = true;
  for (PlayerId a = 0; a < game->num_players(); ++a) {
    report.bi_defined = report.bi_defined && IsAcyclic(game->preference(a));
  }
  if (report.bi_defined) {
    for (const Profile& s : BackwardInduction(game)) {
      report.bi_outputs.push_back(space.Encode(s));
    }
  }
  return report;
}

}  // namespace lazyeq

#endif  // LAZYEQ_EQUILIBRIA_HPP_
