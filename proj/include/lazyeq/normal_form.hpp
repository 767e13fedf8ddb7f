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

#ifndef LAZYEQ_NORMAL_FORM_HPP_
#define LAZYEQ_NORMAL_FORM_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/graph.hpp"

namespace lazyeq {

// Strategy profiles are index tuples; the table is row-major with the first
// player most significant.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<std::string> players,
                 std::vector<std::vector<std::string>> strategies,
                 OutcomeSet outcomes, std::vector<OutcomeId> table,
                 std::vector<PreferenceRelation> preferences)
      : players_(std::move(players)),
        strategies_(std::move(strategies)),
        outcomes_(std::move(outcomes)),
        table_(std::move(table)) {
    if (players_.empty()) Fail(ErrorKind::kValidation, "no players declared");
    if (strategies_.size() != players_.size()) {
      Fail(ErrorKind::kValidation, "strategy sets do not match the players");
    }
    std::uint64_t count = 1;
    for (const auto& set : strategies_) {
      if (set.empty()) Fail(ErrorKind::kValidation, "empty strategy set");
      count *= set.size();
      if (count > ProfileCap()) {
        Fail(ErrorKind::kResourceCap, "state space too large");
      }
    }
    if (table_.size() != count) {
      Fail(ErrorKind::kValidation, "outcome table is not total");
    }
    for (OutcomeId o : table_) {
      if (o < 0 || o >= outcomes_.size()) {
        Fail(ErrorKind::kValidation, "missing cell");
      }
    }
    const int np = num_players();
    if (outcomes_.payoff_mode()) {
      if (outcomes_.dimension() != np) {
        Fail(ErrorKind::kValidation,
             "payoff dimension differs from the number of players");
      }
      for (const auto& p : preferences) {
        if (!p.empty()) {
          Fail(ErrorKind::kValidation,
               "explicit preferences are not allowed in payoff mode");
        }
      }
      for (PlayerId a = 0; a < np; ++a) {
        preferences_.push_back(PreferenceRelation::FromPayoffs(outcomes_, a));
      }
    } else {
      preferences.resize(np, PreferenceRelation(outcomes_.size()));
      preferences_ = std::move(preferences);
    }
  }

  int num_players() const { return static_cast<int>(players_.size()); }
  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::string>& strategies(PlayerId a) const {
    return strategies_.at(a);
  }
  const OutcomeSet& outcomes() const { return outcomes_; }
  const PreferenceRelation& preference(PlayerId a) const {
    return preferences_.at(a);
  }
  const std::vector<PreferenceRelation>& preferences() const {
    return preferences_;
  }
  std::uint64_t num_profiles() const { return table_.size(); }

  std::uint64_t Encode(const std::vector<int>& s) const {
    std::uint64_t index = 0;
    for (PlayerId a = 0; a < num_players(); ++a) {
      index = index * strategies_[a].size() + s[a];
    }
    return index;
  }
  std::vector<int> Decode(std::uint64_t index) const {
    std::vector<int> s(num_players());
    for (PlayerId a = num_players() - 1; a >= 0; --a) {
      s[a] = static_cast<int>(index % strategies_[a].size());
      index /= strategies_[a].size();
    }
    return s;
  }
  OutcomeId outcome(const std::vector<int>& s) const {
    return table_[Encode(s)];
  }

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  OutcomeSet outcomes_;
  std::vector<OutcomeId> table_;
  std::vector<PreferenceRelation> preferences_;
};

inline bool NfConvertible(const std::vector<int>& s, const std::vector<int>& t,
                          PlayerId a) {
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (static_cast<PlayerId>(b) != a && s[b] != t[b]) return false;
  }
  return true;
}

// Edge s -> t labelled a for every improvement of player a.
inline LabeledDigraph NfImprovementGraph(const NormalFormGame& g) {
  LabeledDigraph graph;
  std::vector<LabeledDigraph::Edge> row;
  for (std::uint64_t i = 0; i < g.num_profiles(); ++i) {
    row.clear();
    std::vector<int> s = g.Decode(i);
    OutcomeId v = g.outcome(s);
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      std::vector<int> t = s;
      for (int k = 0; k < static_cast<int>(g.strategies(a).size()); ++k) {
        t[a] = k;
        if (g.preference(a).Less(v, g.outcome(t))) {
          row.push_back({static_cast<std::uint32_t>(g.Encode(t)), a});
        }
      }
    }
    graph.AddRow(row);
  }
  return graph;
}

// Direct evaluation of the equilibrium condition over all deviations.
inline std::vector<std::uint64_t> NfNashDirect(const NormalFormGame& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < g.num_profiles(); ++i) {
    std::vector<int> s = g.Decode(i);
    bool stable = true;
    for (std::uint64_t j = 0; j < g.num_profiles() && stable; ++j) {
      std::vector<int> t = g.Decode(j);
      for (PlayerId a = 0; a < g.num_players() && stable; ++a) {
        if (NfConvertible(s, t, a) &&
            g.preference(a).Less(g.outcome(s), g.outcome(t))) {
          stable = false;
        }
      }
    }
    if (stable) out.push_back(i);
  }
  return out;
}

// Nash equilibria, computed directly and as sinks of the improvement graph.
inline std::vector<std::uint64_t> NfNash(const NormalFormGame& g) {
  std::vector<std::uint64_t> direct = NfNashDirect(g);
  if (direct != Sinks(NfImprovementGraph(g))) {
    throw std::logic_error("equilibria differ from improvement sinks");
  }
  return direct;
}

inline std::string NfProfileName(const NormalFormGame& g,
                                 const std::vector<int>& s) {
  std::string out = "(";
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    if (a > 0) out += ",";
    out += g.strategies(a)[s[a]];
  }
  return out + ")";
}

// The normal form of a tree game: a strategy assigns a choice to each node
// the player owns, enumerated in odometer order.
inline NormalFormGame EmbedTree(const Game& g) {
  const int np = g.num_players();
  std::vector<std::vector<std::vector<int>>> assignments(np);
  std::vector<std::vector<std::string>> names(np);
  for (PlayerId a = 0; a < np; ++a) {
    const auto& mine = g.nodes_of(a);
    std::vector<int> x(mine.size(), 0);
    while (true) {
      assignments[a].push_back(x);
      std::string name;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) name += "_";
        name += std::to_string(x[i]);
      }
      names[a].push_back(name.empty() ? "none" : name);
      std::size_t i = x.size();
      while (i > 0) {
        if (++x[i - 1] < g.node(mine[i - 1]).degree()) break;
        x[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  std::uint64_t count = 1;
  for (const auto& s : assignments) {
    count *= s.size();
    if (count > ProfileCap()) {
      Fail(ErrorKind::kResourceCap, "state space too large");
    }
  }
  std::vector<OutcomeId> table;
  std::vector<int> idx(np, 0);
  std::vector<int> choices(g.num_nodes(), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t rest = i;
    for (PlayerId a = np - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(rest % assignments[a].size());
      rest /= assignments[a].size();
    }
    for (PlayerId a = 0; a < np; ++a) {
      const auto& mine = g.nodes_of(a);
      for (std::size_t k = 0; k < mine.size(); ++k) {
        choices[mine[k]] = assignments[a][idx[a]][k];
      }
    }
    table.push_back(InducedOutcomeFrom(g, choices, g.root()));
  }
  OutcomeSet outcomes = OutcomeSet::Abstract(g.outcomes().names());
  return NormalFormGame(g.players(), names, outcomes, table, g.preferences());
}

// Tree profile corresponding to a normal-form profile of EmbedTree(g).
inline std::vector<int> EmbeddedChoices(const Game& g,
                                        const std::vector<int>& nf_profile) {
  std::vector<int> choices(g.num_nodes(), 0);
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    const auto& mine = g.nodes_of(a);
    std::uint64_t rest = nf_profile[a];
    for (std::size_t k = mine.size(); k-- > 0;) {
      int d = g.node(mine[k]).degree();
      choices[mine[k]] = static_cast<int>(rest % d);
      rest /= d;
    }
  }
  return choices;
}

}  // namespace lazyeq

#endif  // LAZYEQ_NORMAL_FORM_HPP_
