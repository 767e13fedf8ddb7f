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

#ifndef LAZYEQ_IO_HPP_
#define LAZYEQ_IO_HPP_

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/normal_form.hpp"
#include "lazyeq/rational.hpp"

namespace lazyeq {

struct TreeDocument {
  std::shared_ptr<const Game> game;
  std::optional<Profile> profile;
};

struct DagDocument {
  std::shared_ptr<const DagGame> game;
  std::optional<DagProfile> profile;
};

struct NormalFormDocument {
  std::shared_ptr<const NormalFormGame> game;
};

using GameDocument =
    std::variant<TreeDocument, DagDocument, NormalFormDocument>;

namespace internal {

struct Token {
  enum Kind { kWord, kPunct, kEnd } kind;
  std::string text;
  int line;
  int column;
};

inline bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '\'' || c == '/' || c == '+';
}

inline std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    int l = line;
    int col = column;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      advance();
      advance();
      tokens.push_back({Token::kPunct, "->", l, col});
      continue;
    }
    bool minus_number = c == '-' && i + 1 < text.size() &&
                        std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (IsWordChar(c) || minus_number) {
      std::string word;
      do {
        word += text[i];
        advance();
      } while (i < text.size() &&
               (IsWordChar(text[i]) ||
                (text[i] == '-' && i + 1 < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[i + 1])))));
      tokens.push_back({Token::kWord, word, l, col});
      continue;
    }
    if (std::string_view("{}()[]:;,*=").find(c) != std::string_view::npos) {
      advance();
      tokens.push_back({Token::kPunct, std::string(1, c), l, col});
      continue;
    }
    Fail(ErrorKind::kParse,
         "line " + std::to_string(l) + ", column " + std::to_string(col) +
             ": unexpected character '" + std::string(1, c) + "'");
  }
  tokens.push_back({Token::kEnd, "", line, column});
  return tokens;
}

inline std::string Where(const Token& t) {
  return "line " + std::to_string(t.line) + ", column " +
         std::to_string(t.column);
}

[[noreturn]] inline void Invalid(const Token& t, const std::string& what) {
  Fail(ErrorKind::kValidation, Where(t) + ": " + what);
}

struct RawTree {
  Token at;
  bool starred = false;
  bool leaf = false;
  std::vector<Token> values;  // leaf content
  Token owner;
  std::vector<RawTree> children;
};

struct RawPrefer {
  Token player;
  bool chain = false;
  std::vector<Token> items;
};

struct RawDagNode {
  Token name;
  bool leaf = false;
  Token owner;
  std::vector<Token> successors;
  int starred = -1;
  int stars = 0;
  std::vector<Token> values;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lex(text)) {}

  GameDocument Parse() {
    const Token& head = Peek();
    if (head.kind != Token::kWord ||
        (head.text != "game" && head.text != "dag" && head.text != "nf")) {
      Expected("'game', 'dag' or 'nf'");
    }
    std::string kind = Next().text;
    Expect("{");
    GameDocument doc = kind == "game"  ? ParseTree()
                       : kind == "dag" ? ParseDag()
                                       : ParseNormalForm();
    if (Peek().kind != Token::kEnd) Expected("end of input");
    return doc;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }
  bool At(std::string_view text) const {
    return Peek().kind != Token::kEnd && Peek().text == text;
  }
  [[noreturn]] void Expected(const std::string& what) const {
    const Token& t = Peek();
    Fail(ErrorKind::kParse,
         Where(t) + ": expected " + what + ", got " +
             (t.kind == Token::kEnd ? std::string("end of input")
                                    : "'" + t.text + "'"));
  }
  const Token& Expect(std::string_view punct) {
    if (Peek().kind != Token::kPunct || Peek().text != punct) {
      Expected("'" + std::string(punct) + "'");
    }
    return Next();
  }
  const Token& Word(const std::string& what = "a name") {
    if (Peek().kind != Token::kWord) Expected(what);
    return Next();
  }
  std::vector<Token> WordsUntil(std::string_view stop) {
    std::vector<Token> out;
    while (!(Peek().kind == Token::kPunct && Peek().text == stop)) {
      out.push_back(Word());
    }
    return out;
  }

  // Shared statements ------------------------------------------------------

  bool ParseCommon(const Token& kw) {
    if (kw.text == "players") {
      if (players_) Invalid(kw, "players declared twice");
      Next();
      Expect(":");
      players_ = WordsUntil(";");
      Expect(";");
      if (players_->empty()) Invalid(kw, "no players declared");
      return true;
    }
    if (kw.text == "outcomes") {
      if (outcomes_declared_) Invalid(kw, "outcomes declared twice");
      Next();
      Expect(":");
      outcomes_declared_ = true;
      outcomes_at_ = kw;
      if (At("payoff")) {
        Next();
        const Token& d = Word("the payoff dimension");
        int dim = 0;
        try {
          dim = std::stoi(d.text);
        } catch (...) {
          Invalid(d, "bad payoff dimension '" + d.text + "'");
        }
        if (dim <= 0) Invalid(d, "bad payoff dimension '" + d.text + "'");
        payoff_dimension_ = dim;
      } else {
        outcome_names_ = WordsUntil(";");
      }
      Expect(";");
      return true;
    }
    if (kw.text == "prefer") {
      Next();
      RawPrefer p;
      p.player = Word("a player");
      Expect(":");
      const Token& form = Word("'chain' or 'pair'");
      if (form.text == "chain") {
        p.chain = true;
        p.items = WordsUntil(";");
      } else if (form.text == "pair") {
        p.items.push_back(Word("an outcome"));
        p.items.push_back(Word("an outcome"));
      } else {
        --pos_;
        Expected("'chain' or 'pair'");
      }
      Expect(";");
      prefers_.push_back(std::move(p));
      return true;
    }
    return false;
  }

  std::vector<std::string> PlayerNames(const Token& at) {
    if (!players_) Invalid(at, "missing players declaration");
    std::vector<std::string> out;
    for (const Token& t : *players_) {
      for (const std::string& s : out) {
        if (s == t.text) Invalid(t, "duplicate player '" + t.text + "'");
      }
      out.push_back(t.text);
    }
    return out;
  }

  PlayerId ResolvePlayer(const std::vector<std::string>& players,
                         const Token& t) {
    for (PlayerId a = 0; a < static_cast<PlayerId>(players.size()); ++a) {
      if (players[a] == t.text) return a;
    }
    Invalid(t, "unknown player '" + t.text + "'");
  }

  OutcomeSet MakeOutcomes(const Token& at) {
    if (!outcomes_declared_) Invalid(at, "missing outcomes declaration");
    if (payoff_dimension_ > 0) return OutcomeSet::Payoff(payoff_dimension_);
    std::vector<std::string> names;
    for (const Token& t : outcome_names_) {
      for (const std::string& s : names) {
        if (s == t.text) Invalid(t, "duplicate outcome '" + t.text + "'");
      }
      names.push_back(t.text);
    }
    if (names.empty()) Invalid(outcomes_at_, "no outcomes declared");
    return OutcomeSet::Abstract(names);
  }

  OutcomeId ResolveOutcome(OutcomeSet& outcomes,
                           const std::vector<Token>& values) {
    if (outcomes.payoff_mode()) {
      std::vector<Rational> payoff;
      for (const Token& t : values) {
        try {
          payoff.push_back(ParseRational(t.text));
        } catch (const Error&) {
          Invalid(t, "malformed payoff component '" + t.text + "'");
        }
      }
      if (static_cast<int>(payoff.size()) != outcomes.dimension()) {
        Invalid(values.front(), "payoff has " + std::to_string(payoff.size()) +
                                    " components, expected " +
                                    std::to_string(outcomes.dimension()));
      }
      return outcomes.Intern(payoff);
    }
    if (values.size() != 1) {
      Invalid(values.front(), "payoff leaf in abstract outcome mode");
    }
    OutcomeId o = outcomes.Find(values[0].text);
    if (o == kNone) {
      Invalid(values[0], "unknown outcome '" + values[0].text + "'");
    }
    return o;
  }

  std::vector<PreferenceRelation> MakePreferences(
      const std::vector<std::string>& players, const OutcomeSet& outcomes) {
    std::vector<PreferenceRelation> prefs(players.size(),
                                          PreferenceRelation(outcomes.size()));
    for (const RawPrefer& p : prefers_) {
      if (outcomes.payoff_mode()) {
        Invalid(p.player, "preferences are derived in payoff mode");
      }
      PlayerId a = ResolvePlayer(players, p.player);
      std::vector<OutcomeId> ids;
      for (const Token& t : p.items) {
        OutcomeId o = outcomes.Find(t.text);
        if (o == kNone) Invalid(t, "unknown outcome '" + t.text + "'");
        ids.push_back(o);
      }
      if (p.chain) {
        prefs[a].AddChain(ids);
      } else {
        prefs[a].Add(ids[0], ids[1]);
      }
    }
    return prefs;
  }

  // Leaf content: "[x]" or "[4,3]"; the opening bracket is consumed.
  std::vector<Token> LeafValues() {
    std::vector<Token> values;
    values.push_back(Word("an outcome or payoff"));
    while (At(",")) {
      Next();
      values.push_back(Word("a payoff component"));
    }
    Expect("]");
    return values;
  }

  // Trees -----------------------------------------------------------------

  RawTree ParseRawTree() {
    RawTree t;
    if (At("*")) {
      t.starred = true;
      Next();
    }
    t.at = Peek();
    if (At("[")) {
      Next();
      t.leaf = true;
      t.values = LeafValues();
      return t;
    }
    if (!At("(")) Expected("'(' or '['");
    Next();
    t.owner = Word("a player");
    while (!At(")")) {
      if (Peek().kind == Token::kEnd) Expected("')'");
      t.children.push_back(ParseRawTree());
    }
    if (t.children.empty()) Expected("a subtree");
    Next();
    return t;
  }

  TreeSpec Resolve(const RawTree& raw, const std::vector<std::string>& players,
                   OutcomeSet& outcomes, std::vector<int>& stars,
                   bool& any_star) {
    if (raw.leaf) {
      stars.push_back(0);
      return TreeSpec::Leaf(ResolveOutcome(outcomes, raw.values));
    }
    PlayerId owner = ResolvePlayer(players, raw.owner);
    std::size_t slot = stars.size();
    stars.push_back(0);
    int count = 0;
    int chosen = 0;
    std::vector<TreeSpec> children;
    for (std::size_t k = 0; k < raw.children.size(); ++k) {
      if (raw.children[k].starred) {
        ++count;
        chosen = static_cast<int>(k);
      }
      children.push_back(
          Resolve(raw.children[k], players, outcomes, stars, any_star));
    }
    if (count > 1) Invalid(raw.at, "more than one starred child");
    if (count == 1) any_star = true;
    stars[slot] = count == 1 ? chosen : -1;
    return TreeSpec::Node(owner, std::move(children));
  }

  GameDocument ParseTree() {
    std::optional<RawTree> tree;
    Token tree_at{};
    while (!At("}")) {
      const Token& kw = Peek();
      if (kw.kind != Token::kWord) Expected("a statement");
      if (ParseCommon(kw)) continue;
      if (kw.text == "tree") {
        if (tree) Invalid(kw, "tree declared twice");
        tree_at = Next();
        Expect(":");
        tree = ParseRawTree();
        if (tree->starred) Invalid(tree->at, "the root cannot be starred");
        Expect(";");
        continue;
      }
      Expected("'players', 'outcomes', 'tree' or 'prefer'");
    }
    const Token& close = Expect("}");
    if (!tree) Invalid(close, "missing tree");
    std::vector<std::string> players = PlayerNames(close);
    OutcomeSet outcomes = MakeOutcomes(close);
    std::vector<int> stars;
    bool any_star = false;
    TreeSpec spec = Resolve(*tree, players, outcomes, stars, any_star);
    std::vector<PreferenceRelation> prefs = MakePreferences(players, outcomes);
    auto game = Game::Make(players, outcomes, prefs, spec);
    TreeDocument doc{game, std::nullopt};
    if (any_star) {
      std::vector<int> choices(game->num_nodes(), 0);
      for (NodeId n : game->internal_nodes()) {
        if (stars[n] < 0) {
          Invalid(tree_at,
                  "star-count violation: an internal node has no "
                  "starred child");
        }
        choices[n] = stars[n];
      }
      doc.profile.emplace(game, choices);
    }
    return doc;
  }

  // DAGs ------------------------------------------------------------------

  GameDocument ParseDag() {
    std::vector<RawDagNode> raw;
    std::optional<Token> root;
    while (!At("}")) {
      const Token& kw = Peek();
      if (kw.kind != Token::kWord) Expected("a statement");
      if (ParseCommon(kw)) continue;
      if (kw.text == "node") {
        Next();
        RawDagNode n;
        n.name = Word("a node name");
        n.owner = Word("a player");
        Expect("->");
        while (!At(";")) {
          bool star = false;
          if (At("*")) {
            Next();
            star = true;
          }
          if (star) {
            ++n.stars;
            n.starred = static_cast<int>(n.successors.size());
          }
          n.successors.push_back(Word("a node name"));
        }
        if (n.successors.empty()) Expected("a successor");
        Expect(";");
        if (n.stars > 1) Invalid(n.name, "more than one starred successor");
        raw.push_back(std::move(n));
        continue;
      }
      if (kw.text == "leaf") {
        Next();
        RawDagNode n;
        n.leaf = true;
        n.name = Word("a node name");
        if (At("[")) {
          Next();
          n.values = LeafValues();
        } else {
          n.values.push_back(Word("an outcome"));
        }
        Expect(";");
        raw.push_back(std::move(n));
        continue;
      }
      if (kw.text == "root") {
        if (root) Invalid(kw, "root declared twice");
        Next();
        root = Word("a node name");
        Expect(";");
        continue;
      }
      Expected("'players', 'outcomes', 'node', 'leaf', 'root' or 'prefer'");
    }
    const Token& close = Expect("}");
    std::vector<std::string> players = PlayerNames(close);
    OutcomeSet outcomes = MakeOutcomes(close);
    std::map<std::string, NodeId> ids;
    std::vector<std::string> names;
    for (const RawDagNode& n : raw) {
      if (!ids.emplace(n.name.text, static_cast<NodeId>(names.size())).second) {
        Invalid(n.name, "duplicate node '" + n.name.text + "'");
      }
      names.push_back(n.name.text);
    }
    if (raw.empty()) Invalid(close, "a dag needs at least one node");
    std::vector<GameNode> nodes(raw.size());
    std::vector<int> indegree(raw.size(), 0);
    int starred_nodes = 0;
    int internal_nodes = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const RawDagNode& n = raw[i];
      if (n.leaf) {
        nodes[i].outcome = ResolveOutcome(outcomes, n.values);
        continue;
      }
      ++internal_nodes;
      starred_nodes += n.stars;
      nodes[i].owner = ResolvePlayer(players, n.owner);
      for (const Token& t : n.successors) {
        auto it = ids.find(t.text);
        if (it == ids.end()) Invalid(t, "unknown node '" + t.text + "'");
        nodes[i].successors.push_back(it->second);
        ++indegree[it->second];
      }
    }
    NodeId root_id = kNone;
    if (root) {
      auto it = ids.find(root->text);
      if (it == ids.end()) Invalid(*root, "unknown node '" + root->text + "'");
      root_id = it->second;
    } else {
      std::vector<std::string> rootless;
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (indegree[i] == 0) rootless.push_back(names[i]);
      }
      if (rootless.size() != 1) {
        std::string list;
        for (const std::string& s : rootless) {
          list += (list.empty() ? "" : ", ") + s;
        }
        Invalid(close, "missing root: nodes without predecessor are " +
                           (list.empty() ? std::string("none") : list));
      }
      root_id = ids[rootless[0]];
    }
    std::vector<PreferenceRelation> prefs = MakePreferences(players, outcomes);
    std::shared_ptr<const DagGame> game;
    try {
      game = DagGame::Make(players, outcomes, prefs, nodes, names, root_id);
    } catch (const Error& e) {
      Invalid(close, e.what());
    }
    DagDocument doc{game, std::nullopt};
    if (starred_nodes > 0) {
      if (starred_nodes != internal_nodes) {
        Invalid(close,
                "star-count violation: every node needs exactly one star");
      }
      std::vector<int> choices(game->num_nodes(), 0);
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!raw[i].leaf) choices[i] = raw[i].starred;
      }
      doc.profile.emplace(game, choices);
    }
    return doc;
  }

  // Normal form ------------------------------------------------------------

  GameDocument ParseNormalForm() {
    std::vector<std::pair<Token, std::vector<Token>>> strategies;
    struct RawCell {
      std::vector<Token> profile;
      std::vector<Token> values;
    };
    std::vector<RawCell> cells;
    while (!At("}")) {
      const Token& kw = Peek();
      if (kw.kind != Token::kWord) Expected("a statement");
      if (ParseCommon(kw)) continue;
      if (kw.text == "strategies") {
        Next();
        Token player = Word("a player");
        Expect(":");
        std::vector<Token> names = WordsUntil(";");
        Expect(";");
        if (names.empty()) Invalid(player, "empty strategy set");
        strategies.emplace_back(player, names);
        continue;
      }
      if (kw.text == "cell") {
        Next();
        RawCell cell;
        cell.profile = WordsUntil("=");
        Expect("=");
        if (At("[")) {
          Next();
          cell.values = LeafValues();
        } else {
          cell.values.push_back(Word("an outcome"));
        }
        Expect(";");
        cells.push_back(std::move(cell));
        continue;
      }
      Expected("'players', 'strategies', 'outcomes', 'cell' or 'prefer'");
    }
    const Token& close = Expect("}");
    std::vector<std::string> players = PlayerNames(close);
    OutcomeSet outcomes = MakeOutcomes(close);
    std::vector<std::vector<std::string>> sets(players.size());
    std::vector<bool> seen(players.size(), false);
    for (const auto& [player, names] : strategies) {
      PlayerId a = ResolvePlayer(players, player);
      if (seen[a]) Invalid(player, "strategies declared twice");
      seen[a] = true;
      for (const Token& t : names) sets[a].push_back(t.text);
    }
    for (PlayerId a = 0; a < static_cast<PlayerId>(players.size()); ++a) {
      if (!seen[a]) {
        Invalid(close, "missing strategies for player '" + players[a] + "'");
      }
    }
    std::uint64_t count = 1;
    for (const auto& s : sets) {
      count *= s.size();
      if (count > ProfileCap()) {
        Fail(ErrorKind::kResourceCap, "state space too large");
      }
    }
    std::vector<OutcomeId> table(count, kNone);
    for (const RawCell& cell : cells) {
      if (cell.profile.size() != players.size()) {
        Invalid(cell.values.front(), "cell needs one strategy per player");
      }
      std::uint64_t index = 0;
      for (std::size_t a = 0; a < players.size(); ++a) {
        const Token& t = cell.profile[a];
        auto it = std::find(sets[a].begin(), sets[a].end(), t.text);
        if (it == sets[a].end()) {
          Invalid(t, "unknown strategy '" + t.text + "'");
        }
        index = index * sets[a].size() + (it - sets[a].begin());
      }
      if (table[index] != kNone) {
        Invalid(cell.profile.front(), "cell defined twice");
      }
      table[index] = ResolveOutcome(outcomes, cell.values);
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      if (table[i] == kNone) Invalid(close, "missing cell");
    }
    std::vector<PreferenceRelation> prefs = MakePreferences(players, outcomes);
    return NormalFormDocument{std::make_shared<const NormalFormGame>(
        players, sets, outcomes, table, prefs)};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<std::vector<Token>> players_;
  bool outcomes_declared_ = false;
  Token outcomes_at_{};
  int payoff_dimension_ = 0;
  std::vector<Token> outcome_names_;
  std::vector<RawPrefer> prefers_;
};

inline void PrintHeader(std::ostringstream& os,
                        const std::vector<std::string>& players,
                        const OutcomeSet& outcomes) {
  os << "  players:";
  for (const std::string& p : players) os << ' ' << p;
  os << " ;\n";
  if (outcomes.payoff_mode()) {
    os << "  outcomes: payoff " << outcomes.dimension() << " ;\n";
  } else {
    os << "  outcomes:";
    for (const std::string& o : outcomes.names()) os << ' ' << o;
    os << " ;\n";
  }
}

inline void PrintPreferences(std::ostringstream& os,
                             const std::vector<std::string>& players,
                             const OutcomeSet& outcomes,
                             const std::vector<PreferenceRelation>& prefs) {
  if (outcomes.payoff_mode()) return;
  for (std::size_t a = 0; a < players.size(); ++a) {
    for (const auto& [x, y] : prefs[a].Pairs()) {
      os << "  prefer " << players[a] << ": pair " << outcomes.name(x) << ' '
         << outcomes.name(y) << " ;\n";
    }
  }
}

inline std::string LeafText(const OutcomeSet& outcomes, OutcomeId o) {
  return "[" + outcomes.name(o) + "]";
}

inline void PrintSubtree(std::ostringstream& os, const Game& g, NodeId n,
                         const std::vector<int>* choices) {
  const GameNode& node = g.node(n);
  if (node.IsLeaf()) {
    os << LeafText(g.outcomes(), node.outcome);
    return;
  }
  os << '(' << g.player_name(node.owner);
  for (int k = 0; k < node.degree(); ++k) {
    os << ' ';
    if (choices != nullptr && (*choices)[n] == k) os << '*';
    PrintSubtree(os, g, node.successors[k], choices);
  }
  os << ')';
}

}  // namespace internal

inline GameDocument ParseDocument(std::string_view text) {
  return internal::Parser(text).Parse();
}

// Tree expression, with stars when choices are given.
inline std::string TreeText(const Game& g,
                            const std::vector<int>* choices = nullptr) {
  std::ostringstream os;
  internal::PrintSubtree(os, g, g.root(), choices);
  return os.str();
}

inline std::string ProfileText(const Profile& s) {
  return TreeText(s.game(), &s.choices());
}

// Chosen edges of every non-sink node, in declaration order.
inline std::string DagProfileText(const DagProfile& s) {
  const DagGame& g = s.game();
  std::string out;
  for (NodeId n : g.internal_nodes()) {
    if (!out.empty()) out += ' ';
    out += g.node_name(n) + "->" + g.node_name(s.next(n));
  }
  return out;
}

inline std::string PrintTreeDocument(const Game& g,
                                     const std::vector<int>* choices) {
  std::ostringstream os;
  os << "game {\n";
  internal::PrintHeader(os, g.players(), g.outcomes());
  os << "  tree: " << TreeText(g, choices) << " ;\n";
  internal::PrintPreferences(os, g.players(), g.outcomes(), g.preferences());
  os << "}\n";
  return os.str();
}

inline std::string PrintDagDocument(const DagGame& g,
                                    const std::vector<int>* choices) {
  std::ostringstream os;
  os << "dag {\n";
  internal::PrintHeader(os, g.players(), g.outcomes());
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    const GameNode& node = g.node(n);
    if (node.IsLeaf()) {
      os << "  leaf " << g.node_name(n) << ' ';
      if (g.outcomes().payoff_mode()) {
        os << internal::LeafText(g.outcomes(), node.outcome);
      } else {
        os << g.outcomes().name(node.outcome);
      }
      os << " ;\n";
      continue;
    }
    os << "  node " << g.node_name(n) << ' ' << g.player_name(node.owner)
       << " ->";
    for (int k = 0; k < node.degree(); ++k) {
      os << ' ';
      if (choices != nullptr && (*choices)[n] == k) os << '*';
      os << g.node_name(node.successors[k]);
    }
    os << " ;\n";
  }
  os << "  root " << g.node_name(g.root()) << " ;\n";
  internal::PrintPreferences(os, g.players(), g.outcomes(), g.preferences());
  os << "}\n";
  return os.str();
}

inline std::string PrintNormalFormDocument(const NormalFormGame& g) {
  std::ostringstream os;
  os << "nf {\n";
  internal::PrintHeader(os, g.players(), g.outcomes());
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    os << "  strategies " << g.players()[a] << ':';
    for (const std::string& s : g.strategies(a)) os << ' ' << s;
    os << " ;\n";
  }
  for (std::uint64_t i = 0; i < g.num_profiles(); ++i) {
    std::vector<int> s = g.Decode(i);
    os << "  cell";
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      os << ' ' << g.strategies(a)[s[a]];
    }
    OutcomeId o = g.outcome(s);
    os << " = "
       << (g.outcomes().payoff_mode() ? internal::LeafText(g.outcomes(), o)
                                      : g.outcomes().name(o))
       << " ;\n";
  }
  internal::PrintPreferences(os, g.players(), g.outcomes(), g.preferences());
  os << "}\n";
  return os.str();
}

inline std::string PrintDocument(const GameDocument& doc) {
  if (const auto* t = std::get_if<TreeDocument>(&doc)) {
    return PrintTreeDocument(*t->game,
                             t->profile ? &t->profile->choices() : nullptr);
  }
  if (const auto* d = std::get_if<DagDocument>(&doc)) {
    return PrintDagDocument(*d->game,
                            d->profile ? &d->profile->choices() : nullptr);
  }
  return PrintNormalFormDocument(*std::get<NormalFormDocument>(doc).game);
}

inline Profile ParseProfile(std::string_view text) {
  GameDocument doc = ParseDocument(text);
  auto* t = std::get_if<TreeDocument>(&doc);
  if (t == nullptr || !t->profile) {
    Fail(ErrorKind::kValidation, "expected a tree profile document");
  }
  return *t->profile;
}

inline DagProfile ParseDagProfile(std::string_view text) {
  GameDocument doc = ParseDocument(text);
  auto* d = std::get_if<DagDocument>(&doc);
  if (d == nullptr || !d->profile) {
    Fail(ErrorKind::kValidation, "expected a dag profile document");
  }
  return *d->profile;
}

}  // namespace lazyeq

#endif  // LAZYEQ_IO_HPP_
