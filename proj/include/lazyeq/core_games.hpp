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

#ifndef LAZYEQ_CORE_GAMES_HPP_
#define LAZYEQ_CORE_GAMES_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lazyeq/error.hpp"
#include "lazyeq/rational.hpp"

namespace lazyeq {

using PlayerId = int;
using OutcomeId = int;
using NodeId = int;

inline constexpr int kNone = -1;
inline constexpr std::uint64_t kDefaultProfileCap = std::uint64_t{1} << 24;

// The profile-count cap for exhaustive operations. LAZYEQ_CAP overrides the
// default when set to a positive decimal integer.
inline std::uint64_t ProfileCap() {
  const char* env = std::getenv("LAZYEQ_CAP");
  if (env == nullptr || *env == '\0') return kDefaultProfileCap;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) return kDefaultProfileCap;
  return value;
}

// ---------------------------------------------------------------------------
// Outcomes

class OutcomeSet {
 public:
  OutcomeSet() = default;

  static OutcomeSet Abstract(const std::vector<std::string>& names) {
    OutcomeSet set;
    for (const std::string& name : names) {
      if (set.Find(name) != kNone) {
        Fail(ErrorKind::kValidation, "duplicate outcome '" + name + "'");
      }
      set.index_.emplace(name, set.size());
      set.names_.push_back(name);
    }
    return set;
  }

  // Payoff mode: outcomes are interned payoff vectors of this length.
  static OutcomeSet Payoff(int dimension) {
    if (dimension <= 0) {
      Fail(ErrorKind::kValidation, "payoff dimension must be positive");
    }
    OutcomeSet set;
    set.dimension_ = dimension;
    return set;
  }

  OutcomeId Intern(const std::vector<Rational>& payoff) {
    if (!payoff_mode()) {
      Fail(ErrorKind::kValidation, "payoff leaf in abstract outcome mode");
    }
    if (static_cast<int>(payoff.size()) != dimension_) {
      Fail(ErrorKind::kValidation,
           "payoff has " + std::to_string(payoff.size()) +
               " components, expected " + std::to_string(dimension_));
    }
    std::string name;
    for (std::size_t i = 0; i < payoff.size(); ++i) {
      if (i > 0) name += ",";
      name += FormatRational(payoff[i]);
    }
    OutcomeId found = Find(name);
    if (found != kNone) return found;
    index_.emplace(name, size());
    names_.push_back(name);
    payoffs_.push_back(payoff);
    return size() - 1;
  }

  int size() const { return static_cast<int>(names_.size()); }
  bool payoff_mode() const { return dimension_ > 0; }
  int dimension() const { return dimension_; }
  const std::string& name(OutcomeId o) const { return names_.at(o); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Rational>& payoff(OutcomeId o) const {
    if (!payoff_mode()) Fail(ErrorKind::kPrecondition, "requires payoff mode");
    return payoffs_.at(o);
  }

  OutcomeId Find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? kNone : it->second;
  }

  bool operator==(const OutcomeSet& other) const {
    return names_ == other.names_ && dimension_ == other.dimension_;
  }

 private:
  int dimension_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Rational>> payoffs_;
  std::unordered_map<std::string, OutcomeId> index_;
};

// ---------------------------------------------------------------------------
// Preferences

// An arbitrary binary relation over outcome ids; Less(x, y) means x is
// strictly worse than y. Nothing is ever closed transitively.
class PreferenceRelation {
 public:
  PreferenceRelation() = default;
  explicit PreferenceRelation(int num_outcomes)
      : n_(num_outcomes),
        bits_(static_cast<std::size_t>(num_outcomes) * num_outcomes, 0) {}

  static PreferenceRelation FromPayoffs(const OutcomeSet& outcomes,
                                        PlayerId player) {
    PreferenceRelation rel(outcomes.size());
    for (OutcomeId x = 0; x < outcomes.size(); ++x) {
      for (OutcomeId y = 0; y < outcomes.size(); ++y) {
        if (outcomes.payoff(x)[player] < outcomes.payoff(y)[player]) {
          rel.Add(x, y);
        }
      }
    }
    return rel;
  }

  void Add(OutcomeId worse, OutcomeId better) {
    Check(worse);
    Check(better);
    bits_[Index(worse, better)] = 1;
  }

  void AddChain(const std::vector<OutcomeId>& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        Add(chain[i], chain[j]);
      }
    }
  }

  bool Less(OutcomeId x, OutcomeId y) const { return bits_[Index(x, y)] != 0; }
  int num_outcomes() const { return n_; }

  std::vector<std::pair<OutcomeId, OutcomeId>> Pairs() const {
    std::vector<std::pair<OutcomeId, OutcomeId>> out;
    for (OutcomeId x = 0; x < n_; ++x) {
      for (OutcomeId y = 0; y < n_; ++y) {
        if (Less(x, y)) out.emplace_back(x, y);
      }
    }
    return out;
  }

  bool empty() const {
    return std::find(bits_.begin(), bits_.end(), 1) == bits_.end();
  }

  bool operator==(const PreferenceRelation& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::size_t Index(OutcomeId x, OutcomeId y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }
  void Check(OutcomeId o) const {
    if (o < 0 || o >= n_) {
      Fail(ErrorKind::kValidation, "outcome id out of range in preference");
    }
  }

  int n_ = 0;
  std::vector<char> bits_;
};

enum class PreferenceClass {
  kArbitrary,
  kAcyclic,
  kStrictWeakOrder,
  kStrictLinear,
};

inline const char* PreferenceClassName(PreferenceClass c) {
  switch (c) {
    case PreferenceClass::kArbitrary:
      return "arbitrary";
    case PreferenceClass::kAcyclic:
      return "acyclic";
    case PreferenceClass::kStrictWeakOrder:
      return "strict-weak-order";
    case PreferenceClass::kStrictLinear:
      return "strict-linear";
  }
  return "arbitrary";
}

// Topological order of the pair digraph, smallest available id first.
// Empty optional when the relation has a cycle (self-loops included).
inline std::optional<std::vector<OutcomeId>> TopologicalOutcomes(
    const PreferenceRelation& p) {
  const int n = p.num_outcomes();
  std::vector<int> indegree(n, 0);
  for (OutcomeId x = 0; x < n; ++x) {
    for (OutcomeId y = 0; y < n; ++y) {
      if (p.Less(x, y)) ++indegree[y];
    }
  }
  std::priority_queue<OutcomeId, std::vector<OutcomeId>,
                      std::greater<OutcomeId>>
      ready;
  for (OutcomeId o = 0; o < n; ++o) {
    if (indegree[o] == 0) ready.push(o);
  }
  std::vector<OutcomeId> order;
  while (!ready.empty()) {
    OutcomeId x = ready.top();
    ready.pop();
    order.push_back(x);
    for (OutcomeId y = 0; y < n; ++y) {
      if (p.Less(x, y) && --indegree[y] == 0) ready.push(y);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

inline bool IsAcyclic(const PreferenceRelation& p) {
  return TopologicalOutcomes(p).has_value();
}

inline PreferenceClass ClassifyPreference(const PreferenceRelation& p) {
  if (!IsAcyclic(p)) return PreferenceClass::kArbitrary;
  const int n = p.num_outcomes();
  for (OutcomeId x = 0; x < n; ++x) {
    for (OutcomeId y = 0; y < n; ++y) {
      for (OutcomeId z = 0; z < n; ++z) {
        if (p.Less(x, y) && p.Less(y, z) && !p.Less(x, z)) {
          return PreferenceClass::kAcyclic;
        }
        if (!p.Less(x, y) && !p.Less(y, z) && p.Less(x, z)) {
          return PreferenceClass::kAcyclic;
        }
      }
    }
  }
  for (OutcomeId x = 0; x < n; ++x) {
    for (OutcomeId y = x + 1; y < n; ++y) {
      if (!p.Less(x, y) && !p.Less(y, x)) {
        return PreferenceClass::kStrictWeakOrder;
      }
    }
  }
  return PreferenceClass::kStrictLinear;
}

inline PreferenceRelation LinearExtension(const PreferenceRelation& p) {
  auto order = TopologicalOutcomes(p);
  if (!order) Fail(ErrorKind::kPrecondition, "preference is cyclic");
  PreferenceRelation out(p.num_outcomes());
  out.AddChain(*order);
  return out;
}

// h(o) for every outcome: node count of the longest chain ending at o.
inline std::vector<int> ChainHeights(const PreferenceRelation& p) {
  auto order = TopologicalOutcomes(p);
  if (!order) Fail(ErrorKind::kPrecondition, "preference is cyclic");
  std::vector<int> height(p.num_outcomes(), 1);
  for (OutcomeId y : *order) {
    for (OutcomeId x = 0; x < p.num_outcomes(); ++x) {
      if (p.Less(x, y)) height[y] = std::max(height[y], height[x] + 1);
    }
  }
  return height;
}

inline int ChainHeight(const PreferenceRelation& p, OutcomeId o) {
  return ChainHeights(p).at(o);
}

inline int MaxChainHeight(const PreferenceRelation& p) {
  std::vector<int> h = ChainHeights(p);
  return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

// ---------------------------------------------------------------------------
// Games

struct GameNode {
  PlayerId owner = kNone;
  std::vector<NodeId> successors;
  OutcomeId outcome = kNone;

  bool IsLeaf() const { return owner == kNone; }
  int degree() const { return static_cast<int>(successors.size()); }
  bool operator==(const GameNode&) const = default;
};

// Players, outcomes, preferences and a node array. Shared by trees and DAGs.
class GameBase {
 public:
  const std::vector<std::string>& players() const { return players_; }
  int num_players() const { return static_cast<int>(players_.size()); }
  const std::string& player_name(PlayerId a) const { return players_.at(a); }
  PlayerId FindPlayer(std::string_view name) const {
    for (PlayerId a = 0; a < num_players(); ++a) {
      if (players_[a] == name) return a;
    }
    return kNone;
  }

  const OutcomeSet& outcomes() const { return outcomes_; }
  int num_outcomes() const { return outcomes_.size(); }
  const PreferenceRelation& preference(PlayerId a) const {
    return preferences_.at(a);
  }
  const std::vector<PreferenceRelation>& preferences() const {
    return preferences_;
  }
  bool Prefers(PlayerId a, OutcomeId worse, OutcomeId better) const {
    return preferences_[a].Less(worse, better);
  }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const GameNode& node(NodeId n) const { return nodes_.at(n); }
  const std::vector<GameNode>& nodes() const { return nodes_; }
  NodeId root() const { return root_; }
  const std::vector<NodeId>& internal_nodes() const { return internal_; }
  const std::vector<NodeId>& leaves() const { return leaves_; }
  int num_leaves() const { return static_cast<int>(leaves_.size()); }
  const std::vector<NodeId>& nodes_of(PlayerId a) const { return owned_.at(a); }
  // Position of an internal node in internal_nodes(), kNone for leaves.
  int internal_index(NodeId n) const { return internal_index_.at(n); }

  // Same nodes, owners, successor lists, outcomes and root.
  bool SameShape(const GameBase& other) const {
    return this == &other ||
           (root_ == other.root_ && nodes_ == other.nodes_ &&
            players_ == other.players_ && outcomes_ == other.outcomes_);
  }

 protected:
  void Setup(std::vector<std::string> players, OutcomeSet outcomes,
             std::vector<PreferenceRelation> preferences,
             std::vector<GameNode> nodes, NodeId root) {
    if (players.empty()) Fail(ErrorKind::kValidation, "no players declared");
    for (std::size_t i = 0; i < players.size(); ++i) {
      for (std::size_t j = i + 1; j < players.size(); ++j) {
        if (players[i] == players[j]) {
          Fail(ErrorKind::kValidation, "duplicate player '" + players[i] + "'");
        }
      }
    }
    players_ = std::move(players);
    outcomes_ = std::move(outcomes);
    nodes_ = std::move(nodes);
    root_ = root;
    const int np = num_players();
    if (outcomes_.payoff_mode()) {
      if (outcomes_.dimension() != np) {
        Fail(ErrorKind::kValidation,
             "payoff dimension " + std::to_string(outcomes_.dimension()) +
                 " differs from the number of players " + std::to_string(np));
      }
      for (const PreferenceRelation& p : preferences) {
        if (!p.empty()) {
          Fail(ErrorKind::kValidation,
               "explicit preferences are not allowed in payoff mode");
        }
      }
      preferences_.clear();
      for (PlayerId a = 0; a < np; ++a) {
        preferences_.push_back(PreferenceRelation::FromPayoffs(outcomes_, a));
      }
    } else {
      if (static_cast<int>(preferences.size()) > np) {
        Fail(ErrorKind::kValidation, "more preferences than players");
      }
      preferences.resize(np, PreferenceRelation(outcomes_.size()));
      for (const PreferenceRelation& p : preferences) {
        if (p.num_outcomes() != outcomes_.size()) {
          Fail(ErrorKind::kValidation,
               "preference over a different outcome set");
        }
      }
      preferences_ = std::move(preferences);
    }
    internal_.clear();
    leaves_.clear();
    owned_.assign(np, {});
    internal_index_.assign(nodes_.size(), kNone);
    for (NodeId n = 0; n < num_nodes(); ++n) {
      const GameNode& node = nodes_[n];
      if (node.IsLeaf()) {
        if (!node.successors.empty()) {
          Fail(ErrorKind::kValidation, "leaf with successors");
        }
        if (node.outcome < 0 || node.outcome >= outcomes_.size()) {
          Fail(ErrorKind::kValidation, "leaf outcome out of range");
        }
        leaves_.push_back(n);
      } else {
        if (node.owner < 0 || node.owner >= np) {
          Fail(ErrorKind::kValidation, "node owner out of range");
        }
        if (node.successors.empty()) {
          Fail(ErrorKind::kValidation, "internal node without children");
        }
        for (NodeId m : node.successors) {
          if (m < 0 || m >= num_nodes()) {
            Fail(ErrorKind::kValidation, "successor out of range");
          }
        }
        internal_index_[n] = static_cast<int>(internal_.size());
        internal_.push_back(n);
        owned_[node.owner].push_back(n);
      }
    }
    if (root_ < 0 || root_ >= num_nodes()) {
      Fail(ErrorKind::kValidation, "root out of range");
    }
  }

  std::vector<std::string> players_;
  OutcomeSet outcomes_;
  std::vector<PreferenceRelation> preferences_;
  std::vector<GameNode> nodes_;
  NodeId root_ = 0;
  std::vector<NodeId> internal_;
  std::vector<NodeId> leaves_;
  std::vector<std::vector<NodeId>> owned_;
  std::vector<int> internal_index_;
};

// Recursive description of a tree used to build a Game.
struct TreeSpec {
  PlayerId owner = kNone;
  OutcomeId outcome = kNone;
  std::vector<TreeSpec> children;

  static TreeSpec Leaf(OutcomeId o) {
    TreeSpec t;
    t.outcome = o;
    return t;
  }
  static TreeSpec Node(PlayerId owner, std::vector<TreeSpec> children) {
    TreeSpec t;
    t.owner = owner;
    t.children = std::move(children);
    return t;
  }
};

// A finite game tree. Nodes are numbered in depth-first pre-order from the
// root, so the subtree of n is the id range [n, subtree_end(n)).
class Game : public GameBase {
 public:
  Game(std::vector<std::string> players, OutcomeSet outcomes,
       std::vector<PreferenceRelation> preferences, const TreeSpec& tree) {
    std::vector<GameNode> nodes;
    std::vector<NodeId> parent;
    std::vector<NodeId> end;
    Flatten(tree, kNone, nodes, parent, end);
    parent_ = std::move(parent);
    subtree_end_ = std::move(end);
    Setup(std::move(players), std::move(outcomes), std::move(preferences),
          std::move(nodes), 0);
  }

  static std::shared_ptr<const Game> Make(
      std::vector<std::string> players, OutcomeSet outcomes,
      std::vector<PreferenceRelation> preferences, const TreeSpec& tree) {
    return std::make_shared<const Game>(std::move(players), std::move(outcomes),
                                        std::move(preferences), tree);
  }

  // Same tree under other preferences (abstract mode only).
  std::shared_ptr<const Game> WithPreferences(
      std::vector<PreferenceRelation> preferences) const {
    auto copy = std::make_shared<Game>(*this);
    if (outcomes_.payoff_mode()) {
      OutcomeSet names = OutcomeSet::Abstract(outcomes_.names());
      copy->outcomes_ = names;
    }
    copy->preferences_ = std::move(preferences);
    copy->preferences_.resize(num_players(),
                              PreferenceRelation(num_outcomes()));
    return copy;
  }

  NodeId parent(NodeId n) const { return parent_.at(n); }
  NodeId subtree_end(NodeId n) const { return subtree_end_.at(n); }
  bool InSubtree(NodeId n, NodeId top) const {
    return n >= top && n < subtree_end_[top];
  }

  TreeSpec Spec(NodeId n) const {
    const GameNode& node = nodes_.at(n);
    if (node.IsLeaf()) return TreeSpec::Leaf(node.outcome);
    std::vector<TreeSpec> children;
    for (NodeId m : node.successors) children.push_back(Spec(m));
    return TreeSpec::Node(node.owner, std::move(children));
  }

 private:
  static NodeId Flatten(const TreeSpec& t, NodeId up,
                        std::vector<GameNode>& nodes,
                        std::vector<NodeId>& parent, std::vector<NodeId>& end) {
    NodeId id = static_cast<NodeId>(nodes.size());
    nodes.emplace_back();
    parent.push_back(up);
    end.push_back(kNone);
    if (t.children.empty()) {
      if (t.owner != kNone) {
        Fail(ErrorKind::kValidation, "internal node without children");
      }
      nodes[id].outcome = t.outcome;
    } else {
      nodes[id].owner = t.owner;
      for (const TreeSpec& c : t.children) {
        NodeId child = Flatten(c, id, nodes, parent, end);
        nodes[id].successors.push_back(child);
      }
    }
    end[id] = static_cast<NodeId>(nodes.size());
    return id;
  }

  std::vector<NodeId> parent_;
  std::vector<NodeId> subtree_end_;
};

// A finite rooted DAG game. Ids follow declaration order.
class DagGame : public GameBase {
 public:
  DagGame(std::vector<std::string> players, OutcomeSet outcomes,
          std::vector<PreferenceRelation> preferences,
          std::vector<GameNode> nodes, std::vector<std::string> names,
          NodeId root) {
    Setup(std::move(players), std::move(outcomes), std::move(preferences),
          std::move(nodes), root);
    if (names.empty()) {
      for (NodeId n = 0; n < num_nodes(); ++n) {
        names.push_back("n" + std::to_string(n));
      }
    }
    if (static_cast<int>(names.size()) != num_nodes()) {
      Fail(ErrorKind::kValidation, "node name count mismatch");
    }
    names_ = std::move(names);
    Validate();
  }

  static std::shared_ptr<const DagGame> Make(
      std::vector<std::string> players, OutcomeSet outcomes,
      std::vector<PreferenceRelation> preferences, std::vector<GameNode> nodes,
      std::vector<std::string> names, NodeId root) {
    return std::make_shared<const DagGame>(
        std::move(players), std::move(outcomes), std::move(preferences),
        std::move(nodes), std::move(names), root);
  }

  std::shared_ptr<const DagGame> WithPreferences(
      std::vector<PreferenceRelation> preferences) const {
    auto copy = std::make_shared<DagGame>(*this);
    if (outcomes_.payoff_mode()) {
      copy->outcomes_ = OutcomeSet::Abstract(outcomes_.names());
    }
    copy->preferences_ = std::move(preferences);
    copy->preferences_.resize(num_players(),
                              PreferenceRelation(num_outcomes()));
    return copy;
  }

  const std::string& node_name(NodeId n) const { return names_.at(n); }
  const std::vector<std::string>& node_names() const { return names_; }
  NodeId FindNode(std::string_view name) const {
    for (NodeId n = 0; n < num_nodes(); ++n) {
      if (names_[n] == name) return n;
    }
    return kNone;
  }
  // Nodes ordered so that every edge goes forward; the root comes first.
  const std::vector<NodeId>& topological_order() const { return topo_; }

 private:
  void Validate() {
    std::vector<int> indegree(num_nodes(), 0);
    for (const GameNode& node : nodes_) {
      for (NodeId m : node.successors) ++indegree[m];
    }
    for (NodeId n = 0; n < num_nodes(); ++n) {
      for (std::size_t i = 0; i < nodes_[n].successors.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_[n].successors.size(); ++j) {
          if (nodes_[n].successors[i] == nodes_[n].successors[j]) {
            Fail(ErrorKind::kValidation,
                 "duplicate edge out of node '" + names_[n] + "'");
          }
        }
      }
    }
    std::vector<std::string> rootless;
    for (NodeId n = 0; n < num_nodes(); ++n) {
      if (indegree[n] == 0) rootless.push_back(names_[n]);
    }
    if (rootless.size() != 1 || indegree[root_] != 0) {
      std::string list;
      for (const std::string& s : rootless) list += " " + s;
      Fail(ErrorKind::kValidation,
           "a dag needs exactly one node without predecessor, found:" + list);
    }
    topo_.clear();
    std::vector<NodeId> stack = {root_};
    while (!stack.empty()) {
      NodeId n = stack.back();
      stack.pop_back();
      topo_.push_back(n);
      const auto& succ = nodes_[n].successors;
      for (auto it = succ.rbegin(); it != succ.rend(); ++it) {
        if (--indegree[*it] == 0) stack.push_back(*it);
      }
    }
    if (static_cast<int>(topo_.size()) != num_nodes()) {
      Fail(ErrorKind::kValidation, "the dag contains a cycle");
    }
  }

  std::vector<std::string> names_;
  std::vector<NodeId> topo_;
};

// ---------------------------------------------------------------------------
// Profiles

// One chosen successor index per internal node. choices[n] is unused (0) at
// leaves.
template <class G>
class BasicProfile {
 public:
  BasicProfile(std::shared_ptr<const G> game, std::vector<int> choices)
      : game_(std::move(game)), choices_(std::move(choices)) {
    if (static_cast<int>(choices_.size()) != game_->num_nodes()) {
      Fail(ErrorKind::kValidation, "profile has the wrong number of choices");
    }
    for (NodeId n = 0; n < game_->num_nodes(); ++n) {
      const GameNode& node = game_->node(n);
      if (node.IsLeaf()) {
        if (choices_[n] != 0) {
          Fail(ErrorKind::kValidation, "choice at a leaf");
        }
      } else if (choices_[n] < 0 || choices_[n] >= node.degree()) {
        Fail(ErrorKind::kValidation, "choice out of range");
      }
    }
  }

  static BasicProfile FirstChoices(std::shared_ptr<const G> game) {
    std::vector<int> choices(game->num_nodes(), 0);
    return BasicProfile(std::move(game), std::move(choices));
  }

  const G& game() const { return *game_; }
  const std::shared_ptr<const G>& game_ptr() const { return game_; }
  const std::vector<int>& choices() const { return choices_; }
  int choice(NodeId n) const { return choices_.at(n); }
  NodeId next(NodeId n) const {
    return game_->node(n).successors.at(choices_.at(n));
  }

  BasicProfile With(NodeId n, int c) const {
    std::vector<int> choices = choices_;
    choices.at(n) = c;
    return BasicProfile(game_, std::move(choices));
  }

  friend bool operator==(const BasicProfile& x, const BasicProfile& y) {
    return x.choices_ == y.choices_ && x.game_->SameShape(*y.game_);
  }

 private:
  std::shared_ptr<const G> game_;
  std::vector<int> choices_;
};

using Profile = BasicProfile<Game>;
using DagProfile = BasicProfile<DagGame>;

struct Play {
  std::vector<int> path;      // choice index taken at each visited node
  std::vector<NodeId> nodes;  // visited nodes, from the start to the leaf
  NodeId leaf = kNone;
  OutcomeId outcome = kNone;
};

inline OutcomeId InducedOutcomeFrom(const GameBase& g,
                                    const std::vector<int>& choices,
                                    NodeId start) {
  NodeId n = start;
  while (!g.node(n).IsLeaf()) n = g.node(n).successors[choices[n]];
  return g.node(n).outcome;
}

inline Play InducedPlayFrom(const GameBase& g, const std::vector<int>& choices,
                            NodeId start) {
  Play play;
  NodeId n = start;
  play.nodes.push_back(n);
  while (!g.node(n).IsLeaf()) {
    play.path.push_back(choices[n]);
    n = g.node(n).successors[choices[n]];
    play.nodes.push_back(n);
  }
  play.leaf = n;
  play.outcome = g.node(n).outcome;
  return play;
}

template <class G>
Play InducedPlay(const BasicProfile<G>& s) {
  return InducedPlayFrom(s.game(), s.choices(), s.game().root());
}

template <class G>
OutcomeId InducedOutcome(const BasicProfile<G>& s) {
  return InducedOutcomeFrom(s.game(), s.choices(), s.game().root());
}

// Number of profiles, saturating at the uint64 maximum.
inline std::uint64_t ProfileCount(const GameBase& g) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (NodeId n : g.internal_nodes()) {
    std::uint64_t d = g.node(n).degree();
    if (count > kMax / d) return kMax;
    count *= d;
  }
  return count;
}

inline void CheckProfileCap(const GameBase& g, std::uint64_t cap) {
  std::uint64_t count = ProfileCount(g);
  if (count > cap) {
    Fail(ErrorKind::kResourceCap,
         "state space too large: " +
             (count == std::numeric_limits<std::uint64_t>::max()
                  ? std::string("more than 2^64")
                  : std::to_string(count)) +
             " profiles exceed the cap of " + std::to_string(cap));
  }
}

// Odometer step over internal nodes, last node fastest. Returns false after
// wrapping back to all zeros.
inline bool NextChoices(const GameBase& g, std::vector<int>& choices) {
  const auto& internal = g.internal_nodes();
  for (auto it = internal.rbegin(); it != internal.rend(); ++it) {
    NodeId n = *it;
    if (++choices[n] < g.node(n).degree()) return true;
    choices[n] = 0;
  }
  return false;
}

// Mixed-radix index of every profile of a game: internal nodes in id order,
// the first one most significant. Index order equals NextChoices order.
template <class G>
class ProfileSpace {
 public:
  explicit ProfileSpace(std::shared_ptr<const G> game,
                        std::uint64_t cap = ProfileCap())
      : game_(std::move(game)) {
    CheckProfileCap(*game_, cap);
    size_ = ProfileCount(*game_);
    const auto& internal = game_->internal_nodes();
    weights_.assign(internal.size(), 1);
    std::uint64_t w = 1;
    for (std::size_t i = internal.size(); i-- > 0;) {
      weights_[i] = w;
      w *= game_->node(internal[i]).degree();
    }
  }

  std::uint64_t size() const { return size_; }
  const G& game() const { return *game_; }
  const std::shared_ptr<const G>& game_ptr() const { return game_; }

  std::uint64_t Encode(const std::vector<int>& choices) const {
    std::uint64_t index = 0;
    const auto& internal = game_->internal_nodes();
    for (std::size_t i = 0; i < internal.size(); ++i) {
      index += weights_[i] * static_cast<std::uint64_t>(choices[internal[i]]);
    }
    return index;
  }
  std::uint64_t Encode(const BasicProfile<G>& s) const {
    return Encode(s.choices());
  }

  void DecodeInto(std::uint64_t index, std::vector<int>& choices) const {
    choices.assign(game_->num_nodes(), 0);
    const auto& internal = game_->internal_nodes();
    for (std::size_t i = 0; i < internal.size(); ++i) {
      choices[internal[i]] = static_cast<int>(index / weights_[i]);
      index %= weights_[i];
    }
  }

  BasicProfile<G> Decode(std::uint64_t index) const {
    std::vector<int> choices;
    DecodeInto(index, choices);
    return BasicProfile<G>(game_, std::move(choices));
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BasicProfile<G>;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = BasicProfile<G>;

    iterator(const ProfileSpace* space, std::uint64_t index)
        : space_(space), index_(index) {}
    BasicProfile<G> operator*() const { return space_->Decode(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& other) const {
      return index_ == other.index_;
    }
    bool operator!=(const iterator& other) const { return !(*this == other); }

   private:
    const ProfileSpace* space_;
    std::uint64_t index_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

 private:
  std::shared_ptr<const G> game_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> weights_;
};

template <class G>
ProfileSpace<G> AllProfiles(std::shared_ptr<const G> game,
                            std::uint64_t cap = ProfileCap()) {
  return ProfileSpace<G>(std::move(game), cap);
}

template <class G>
void CheckSameShape(const BasicProfile<G>& s, const BasicProfile<G>& t) {
  if (!s.game().SameShape(t.game())) {
    Fail(ErrorKind::kPrecondition, "shape mismatch");
  }
}

}  // namespace lazyeq

#endif  // LAZYEQ_CORE_GAMES_HPP_
