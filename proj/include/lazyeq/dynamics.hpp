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

#ifndef LAZYEQ_DYNAMICS_HPP_
#define LAZYEQ_DYNAMICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/graph.hpp"
#include "lazyeq/random.hpp"

namespace lazyeq {

// ---------------------------------------------------------------------------
// Convertibility

inline bool ConvertibleRaw(const GameBase& g, const std::vector<int>& s,
                           const std::vector<int>& t, PlayerId a) {
  for (NodeId n : g.internal_nodes()) {
    if (g.node(n).owner != a && s[n] != t[n]) return false;
  }
  return true;
}

template <class G>
bool Convertible(const BasicProfile<G>& s, const BasicProfile<G>& t,
                 PlayerId a) {
  CheckSameShape(s, t);
  return ConvertibleRaw(s.game(), s.choices(), t.choices(), a);
}

// s and t differ at most at a-owned nodes on the play induced by t.
inline bool LazyConvertibleOnPlayRaw(const GameBase& g,
                                     const std::vector<int>& s,
                                     const std::vector<int>& t, PlayerId a) {
  Play play = InducedPlayFrom(g, t, g.root());
  std::vector<char> on_play(g.num_nodes(), 0);
  for (NodeId n : play.nodes) on_play[n] = 1;
  for (NodeId n : g.internal_nodes()) {
    if (s[n] == t[n]) continue;
    if (g.node(n).owner != a || !on_play[n]) return false;
  }
  return true;
}

template <class G>
bool LazyConvertibleOnPlay(const BasicProfile<G>& s, const BasicProfile<G>& t,
                           PlayerId a) {
  CheckSameShape(s, t);
  return LazyConvertibleOnPlayRaw(s.game(), s.choices(), t.choices(), a);
}

namespace internal {

inline bool SameSubtree(const Game& g, const std::vector<int>& s,
                        const std::vector<int>& t, NodeId top) {
  for (NodeId n = top; n < g.subtree_end(top); ++n) {
    if (s[n] != t[n]) return false;
  }
  return true;
}

inline bool LazyInductive(const Game& g, const std::vector<int>& s,
                          const std::vector<int>& t, NodeId n, PlayerId b) {
  const GameNode& node = g.node(n);
  if (node.IsLeaf()) return true;
  int i = s[n];
  int k = t[n];
  for (int j = 0; j < node.degree(); ++j) {
    if (j != k && !SameSubtree(g, s, t, node.successors[j])) return false;
  }
  if (!LazyInductive(g, s, t, node.successors[k], b)) return false;
  return b == node.owner || i == k;
}

}  // namespace internal

// The inductive definition: the new choice at the root may differ only if b
// owns the root, the other subprofiles are untouched, and the chosen
// subprofile is itself lazily converted.
inline bool LazyConvertibleInductive(const Profile& s, const Profile& t,
                                     PlayerId b) {
  CheckSameShape(s, t);
  return internal::LazyInductive(s.game(), s.choices(), t.choices(),
                                 s.game().root(), b);
}

// Convertible, and no conversion inducing the same play changes fewer nodes.
inline bool LazyConvertibleMinimal(const Profile& s, const Profile& t,
                                   PlayerId a) {
  CheckSameShape(s, t);
  const Game& g = s.game();
  if (!ConvertibleRaw(g, s.choices(), t.choices(), a)) return false;
  int changed = 0;
  for (NodeId n : g.internal_nodes()) changed += s.choice(n) != t.choice(n);
  // Every conversion reaching t's play must change the a-nodes on it that s
  // does not already route along the play; nothing else is forced.
  Play play = InducedPlay(t);
  int forced = 0;
  for (std::size_t i = 0; i + 1 < play.nodes.size(); ++i) {
    NodeId n = play.nodes[i];
    if (s.choice(n) != play.path[i]) {
      if (g.node(n).owner != a) return false;
      ++forced;
    }
  }
  return changed == forced;
}

inline bool LazyConvertible(const Profile& s, const Profile& t, PlayerId a) {
  return LazyConvertibleInductive(s, t, a);
}

inline bool LazyConvertible(const DagProfile& s, const DagProfile& t,
                            PlayerId a) {
  return LazyConvertibleOnPlay(s, t, a);
}

// ---------------------------------------------------------------------------
// Successor enumeration on raw choice vectors

namespace internal {

template <class Emit>
struct LazyWalker {
  const GameBase& g;
  std::vector<int>& work;
  PlayerId a;
  std::vector<NodeId>& trail;
  Emit& emit;

  bool Visit(NodeId n) {
    trail.push_back(n);
    const GameNode& node = g.node(n);
    bool go = true;
    if (node.IsLeaf()) {
      go = emit(static_cast<const std::vector<int>&>(work),
                static_cast<const std::vector<NodeId>&>(trail));
    } else if (node.owner == a) {
      int old = work[n];
      for (int k = 0; k < node.degree() && go; ++k) {
        work[n] = k;
        go = Visit(node.successors[k]);
      }
      work[n] = old;
    } else {
      go = Visit(node.successors[work[n]]);
    }
    trail.pop_back();
    return go;
  }
};

}  // namespace internal

// Calls emit(choices, play_nodes) once for every profile that a can reach
// from s by lazy conversion, s itself included. Stops when emit returns false.
template <class Emit>
void ForEachLazyConversion(const GameBase& g, const std::vector<int>& s,
                           PlayerId a, Emit&& emit) {
  std::vector<int> work = s;
  std::vector<NodeId> trail;
  internal::LazyWalker<std::remove_reference_t<Emit>> walker{g, work, a, trail,
                                                             emit};
  walker.Visit(g.root());
}

template <class Emit>
void ForEachLazySuccessor(const GameBase& g, const std::vector<int>& s,
                          PlayerId a, Emit&& emit) {
  OutcomeId current = InducedOutcomeFrom(g, s, g.root());
  ForEachLazyConversion(
      g, s, a,
      [&](const std::vector<int>& t, const std::vector<NodeId>& trail) {
        OutcomeId o = g.node(trail.back()).outcome;
        if (!g.Prefers(a, current, o)) return true;
        return emit(t, trail);
      });
}

// Every assignment of a's nodes, in odometer order, s itself included.
template <class Emit>
void ForEachConversion(const GameBase& g, const std::vector<int>& s, PlayerId a,
                       Emit&& emit) {
  const std::vector<NodeId>& mine = g.nodes_of(a);
  std::vector<int> work = s;
  for (NodeId n : mine) work[n] = 0;
  while (true) {
    if (!emit(static_cast<const std::vector<int>&>(work))) return;
    std::size_t i = mine.size();
    while (i > 0) {
      NodeId n = mine[i - 1];
      if (++work[n] < g.node(n).degree()) break;
      work[n] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

template <class Emit>
void ForEachPlainSuccessor(const GameBase& g, const std::vector<int>& s,
                           PlayerId a, Emit&& emit) {
  OutcomeId current = InducedOutcomeFrom(g, s, g.root());
  ForEachConversion(g, s, a, [&](const std::vector<int>& t) {
    if (!g.Prefers(a, current, InducedOutcomeFrom(g, t, g.root()))) {
      return true;
    }
    return emit(t);
  });
}

inline bool HasLazySuccessorRaw(const GameBase& g, const std::vector<int>& s,
                                PlayerId a) {
  bool found = false;
  ForEachLazySuccessor(
      g, s, a, [&](const std::vector<int>&, const std::vector<NodeId>&) {
        found = true;
        return false;
      });
  return found;
}

inline bool HasPlainSuccessorRaw(const GameBase& g, const std::vector<int>& s,
                                 PlayerId a) {
  bool found = false;
  ForEachPlainSuccessor(g, s, a, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Profile-level successor sets

template <class G>
std::vector<BasicProfile<G>> LazySuccessors(const BasicProfile<G>& s,
                                            PlayerId a) {
  std::vector<BasicProfile<G>> out;
  ForEachLazySuccessor(
      s.game(), s.choices(), a,
      [&](const std::vector<int>& t, const std::vector<NodeId>&) {
        out.emplace_back(s.game_ptr(), t);
        return true;
      });
  return out;
}

template <class G>
std::vector<BasicProfile<G>> PlainSuccessors(const BasicProfile<G>& s,
                                             PlayerId a) {
  std::vector<BasicProfile<G>> out;
  ForEachPlainSuccessor(s.game(), s.choices(), a,
                        [&](const std::vector<int>& t) {
                          out.emplace_back(s.game_ptr(), t);
                          return true;
                        });
  return out;
}

// The lazy successor of s for a whose play ends at the given leaf.
template <class G>
std::optional<BasicProfile<G>> LazySuccessorToLeaf(const BasicProfile<G>& s,
                                                   PlayerId a, NodeId leaf) {
  std::optional<BasicProfile<G>> out;
  ForEachLazySuccessor(
      s.game(), s.choices(), a,
      [&](const std::vector<int>& t, const std::vector<NodeId>& trail) {
        if (trail.back() != leaf) return true;
        out.emplace(s.game_ptr(), t);
        return false;
      });
  return out;
}

// Each node takes its choice from its owner's selection; owners without a
// selection keep s.
template <class G>
BasicProfile<G> SynchronousStep(
    const BasicProfile<G>& s,
    const std::map<PlayerId, BasicProfile<G>>& selections) {
  for (const auto& [a, t] : selections) {
    CheckSameShape(s, t);
    bool ok = false;
    for (const BasicProfile<G>& u : LazySuccessors(s, a)) {
      if (u.choices() == t.choices()) {
        ok = true;
        break;
      }
    }
    if (!ok) Fail(ErrorKind::kPrecondition, "not a lazy successor");
  }
  std::vector<int> merged = s.choices();
  for (NodeId n : s.game().internal_nodes()) {
    auto it = selections.find(s.game().node(n).owner);
    if (it != selections.end()) merged[n] = it->second.choice(n);
  }
  return BasicProfile<G>(s.game_ptr(), std::move(merged));
}

// No player with an acyclic preference has a lazy improvement.
template <class G>
bool IsSemiNash(const BasicProfile<G>& s) {
  for (PlayerId a = 0; a < s.game().num_players(); ++a) {
    if (!IsAcyclic(s.game().preference(a))) continue;
    if (HasLazySuccessorRaw(s.game(), s.choices(), a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Runs

enum class StepMode { kPlain, kLazy, kSynchronous };
enum class Policy { kFirst, kUniformRandom, kRoundRobin, kScripted };
enum class Verdict {
  kTerminatedAtNash,
  kCycleDetected,
  kStepCapReached,
  kScriptExhausted,
};

inline const char* StepModeName(StepMode m) {
  switch (m) {
    case StepMode::kPlain:
      return "plain";
    case StepMode::kLazy:
      return "lazy";
    case StepMode::kSynchronous:
      return "sync";
  }
  return "lazy";
}

inline const char* PolicyName(Policy p) {
  switch (p) {
    case Policy::kFirst:
      return "first";
    case Policy::kUniformRandom:
      return "random";
    case Policy::kRoundRobin:
      return "roundrobin";
    case Policy::kScripted:
      return "scripted";
  }
  return "random";
}

// A scripted move: the player switches lazily to the play ending at leaf.
struct ScriptedMove {
  PlayerId player = kNone;
  NodeId leaf = kNone;
};

struct RunOptions {
  StepMode mode = StepMode::kLazy;
  Policy policy = Policy::kUniformRandom;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 10000;
  // One entry per step; asynchronous modes take exactly one move per entry.
  std::vector<std::vector<ScriptedMove>> script;
  // When false, a detected cycle is recorded and the run goes on.
  bool stop_on_cycle = true;
};

template <class G>
struct RunStep {
  std::vector<PlayerId> movers;
  BasicProfile<G> profile;
};

template <class G>
struct RunTrace {
  BasicProfile<G> start;
  std::vector<RunStep<G>> steps;
  Verdict verdict = Verdict::kStepCapReached;
  std::optional<std::uint64_t> first_repeat_index;  // earlier visit index
  std::optional<std::uint64_t> cycle_period;
  std::vector<std::uint64_t> player_steps;

  const BasicProfile<G>& last() const {
    return steps.empty() ? start : steps.back().profile;
  }
};

namespace internal {

inline std::string ChoiceKey(const std::vector<int>& choices) {
  std::string key;
  key.reserve(choices.size() * 2);
  for (int c : choices) {
    key.push_back(static_cast<char>(c & 0xff));
    key.push_back(static_cast<char>((c >> 8) & 0xff));
  }
  return key;
}

inline void CollectSuccessors(const GameBase& g, const std::vector<int>& s,
                              PlayerId a, StepMode mode,
                              std::vector<std::vector<int>>& out) {
  out.clear();
  if (mode == StepMode::kPlain) {
    ForEachPlainSuccessor(g, s, a, [&](const std::vector<int>& t) {
      out.push_back(t);
      return true;
    });
  } else {
    ForEachLazySuccessor(
        g, s, a, [&](const std::vector<int>& t, const std::vector<NodeId>&) {
          out.push_back(t);
          return true;
        });
  }
}

}  // namespace internal

template <class G>
RunTrace<G> Run(const BasicProfile<G>& start, const RunOptions& options) {
  const G& g = start.game();
  const int np = g.num_players();
  RunTrace<G> trace{
      start,        {},           Verdict::kStepCapReached,
      std::nullopt, std::nullopt, std::vector<std::uint64_t>(np, 0)};
  Rng rng(options.seed);
  std::unordered_map<std::string, std::uint64_t> visited;
  visited.emplace(internal::ChoiceKey(start.choices()), 0);
  std::vector<int> current = start.choices();
  std::vector<std::vector<std::vector<int>>> succ(np);
  PlayerId last_mover = np - 1;
  std::size_t script_pos = 0;

  for (std::uint64_t step = 0;; ++step) {
    bool any = false;
    for (PlayerId a = 0; a < np; ++a) {
      internal::CollectSuccessors(g, current, a, options.mode, succ[a]);
      any = any || !succ[a].empty();
    }
    if (!any) {
      trace.verdict = Verdict::kTerminatedAtNash;
      return trace;
    }
    if (step >= options.max_steps) {
      trace.verdict = Verdict::kStepCapReached;
      return trace;
    }

    std::vector<PlayerId> movers;
    std::vector<int> next;
    if (options.policy == Policy::kScripted) {
      if (script_pos >= options.script.size()) {
        trace.verdict = Verdict::kScriptExhausted;
        return trace;
      }
      const std::vector<ScriptedMove>& moves = options.script[script_pos++];
      if (options.mode != StepMode::kSynchronous && moves.size() != 1) {
        Fail(ErrorKind::kPrecondition,
             "asynchronous scripts take one move per step");
      }
      next = current;
      for (const ScriptedMove& m : moves) {
        const std::vector<int>* pick = nullptr;
        for (const std::vector<int>& t : succ.at(m.player)) {
          if (InducedPlayFrom(g, t, g.root()).leaf == m.leaf) {
            pick = &t;
            break;
          }
        }
        if (pick == nullptr) {
          Fail(ErrorKind::kPrecondition,
               "scripted move at step " + std::to_string(step + 1) +
                   " is not an improvement for player " +
                   g.player_name(m.player));
        }
        movers.push_back(m.player);
        if (options.mode == StepMode::kSynchronous) {
          for (NodeId n : g.nodes_of(m.player)) next[n] = (*pick)[n];
        } else {
          next = *pick;
        }
      }
    } else if (options.mode == StepMode::kSynchronous) {
      next = current;
      for (PlayerId a = 0; a < np; ++a) {
        if (succ[a].empty()) continue;
        std::size_t k = options.policy == Policy::kUniformRandom
                            ? UniformIndex(rng, succ[a].size())
                            : 0;
        movers.push_back(a);
        for (NodeId n : g.nodes_of(a)) next[n] = succ[a][k][n];
      }
    } else if (options.policy == Policy::kUniformRandom) {
      std::size_t total = 0;
      for (PlayerId a = 0; a < np; ++a) total += succ[a].size();
      std::size_t k = UniformIndex(rng, total);
      for (PlayerId a = 0; a < np; ++a) {
        if (k < succ[a].size()) {
          movers.push_back(a);
          next = succ[a][k];
          break;
        }
        k -= succ[a].size();
      }
    } else {
      PlayerId first =
          options.policy == Policy::kRoundRobin ? (last_mover + 1) % np : 0;
      for (int i = 0; i < np; ++i) {
        PlayerId a = (first + i) % np;
        if (!succ[a].empty()) {
          movers.push_back(a);
          next = succ[a][0];
          break;
        }
      }
    }

    for (PlayerId a : movers) {
      ++trace.player_steps[a];
      last_mover = a;
    }
    current = next;
    trace.steps.push_back({movers, BasicProfile<G>(start.game_ptr(), current)});
    auto [it, inserted] =
        visited.emplace(internal::ChoiceKey(current), trace.steps.size());
    if (!inserted && !trace.first_repeat_index) {
      trace.first_repeat_index = it->second;
      trace.cycle_period = trace.steps.size() - it->second;
      if (options.stop_on_cycle) {
        trace.verdict = Verdict::kCycleDetected;
        return trace;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Improvement graphs

inline constexpr int kSynchronousLabel = -1;

// Builds a graph over profile indices; successors(choices, emit) must call
// emit(target_choices, label) for every edge out of the profile.
template <class G, class Successors>
LabeledDigraph BuildProfileGraph(const ProfileSpace<G>& space,
                                 Successors&& successors) {
  LabeledDigraph graph;
  std::vector<int> choices;
  std::vector<LabeledDigraph::Edge> row;
  space.DecodeInto(0, choices);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    row.clear();
    successors(
        static_cast<const std::vector<int>&>(choices),
        [&](const std::vector<int>& t, int label) {
          row.push_back({static_cast<std::uint32_t>(space.Encode(t)), label});
        });
    graph.AddRow(row);
    NextChoices(space.game(), choices);
  }
  return graph;
}

template <class G>
LabeledDigraph ImprovementGraph(const ProfileSpace<G>& space, StepMode mode) {
  const G& g = space.game();
  if (space.size() > 0xffffffffull) {
    Fail(ErrorKind::kResourceCap, "state space too large for a graph");
  }
  if (mode == StepMode::kSynchronous) {
    std::vector<std::vector<std::vector<int>>> succ(g.num_players());
    return BuildProfileGraph(
        space, [&](const std::vector<int>& s, auto&& emit) {
          std::vector<PlayerId> movers;
          for (PlayerId a = 0; a < g.num_players(); ++a) {
            internal::CollectSuccessors(g, s, a, StepMode::kLazy, succ[a]);
            if (!succ[a].empty()) movers.push_back(a);
          }
          // Every non-empty set of movers, every combination of selections.
          const std::size_t m = movers.size();
          for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<std::size_t> pick(m, 0);
            while (true) {
              std::vector<int> t = s;
              int count = 0;
              PlayerId only = kNone;
              for (std::size_t i = 0; i < m; ++i) {
                if (!(mask >> i & 1)) continue;
                PlayerId a = movers[i];
                for (NodeId n : g.nodes_of(a)) t[n] = succ[a][pick[i]][n];
                ++count;
                only = a;
              }
              emit(t, count == 1 ? only : kSynchronousLabel);
              std::size_t i = 0;
              for (; i < m; ++i) {
                if (!(mask >> i & 1)) continue;
                if (++pick[i] < succ[movers[i]].size()) break;
                pick[i] = 0;
              }
              if (i == m) break;
            }
          }
        });
  }
  return BuildProfileGraph(space, [&](const std::vector<int>& s, auto&& emit) {
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      if (mode == StepMode::kPlain) {
        ForEachPlainSuccessor(g, s, a, [&](const std::vector<int>& t) {
          emit(t, a);
          return true;
        });
      } else {
        ForEachLazySuccessor(
            g, s, a,
            [&](const std::vector<int>& t, const std::vector<NodeId>&) {
              emit(t, a);
              return true;
            });
      }
    }
  });
}

template <class G>
LabeledDigraph ImprovementGraph(std::shared_ptr<const G> game, StepMode mode) {
  return ImprovementGraph(ProfileSpace<G>(std::move(game)), mode);
}

// Profile indices without any successor, computed without building a graph.
template <class G>
std::vector<std::uint64_t> ImprovementSinks(const ProfileSpace<G>& space,
                                            StepMode mode) {
  const G& g = space.game();
  std::vector<std::uint64_t> out;
  std::vector<int> choices;
  space.DecodeInto(0, choices);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    bool sink = true;
    for (PlayerId a = 0; a < g.num_players() && sink; ++a) {
      sink = mode == StepMode::kPlain ? !HasPlainSuccessorRaw(g, choices, a)
                                      : !HasLazySuccessorRaw(g, choices, a);
    }
    if (sink) out.push_back(i);
    NextChoices(g, choices);
  }
  return out;
}

}  // namespace lazyeq

#endif  // LAZYEQ_DYNAMICS_HPP_
