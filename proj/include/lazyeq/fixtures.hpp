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

#ifndef LAZYEQ_FIXTURES_HPP_
#define LAZYEQ_FIXTURES_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/dynamics.hpp"
#include "lazyeq/error.hpp"

namespace lazyeq {

struct Fixture {
  std::string name;
  std::string text;
};

namespace internal {

inline const char kG1Kuhn[] =
    R"(# b moves at the root; a and then b again on the left.
game {
  players: a b ;
  outcomes: payoff 2 ;
  tree: (b (a (b [4,3] [1,0]) [3,2]) [1,0]) ;
}
)";

inline const char kG2Cycle[] =
    R"(# Plain improvement cycles here; the profile is the first frame of the
# four-cycle in which b flips both of its nodes.
game {
  players: a b ;
  outcomes: payoff 2 ;
  tree: (a *(b *[1,0] [0,1]) (b [1,0] *[0,1])) ;
}
)";

inline const char kG3Delta[] =
    R"(# Dismissed-outcome counters: Delta a=5 b=3 on the game, and for the
# starred profile a: x1 y0 z1 t3, b: x0 y2 z1 t0.
game {
  players: a b ;
  outcomes: x y z t ;
  tree: (a *(b *(b *[x] [y]) (a *[z] [t])) (b *(a *[x] [t] [t]) (a *[y] [z]))) ;
  prefer a: chain z y t x ;
  prefer b: chain x t z y ;
}
)";

inline const char kAumann[] =
    R"(# Backward induction leads a to play left at the root.
game {
  players: a b ;
  outcomes: payoff 2 ;
  tree: (a (b (a [4,0] [3,4]) (a [2,1] [1,2])) [0,3]) ;
}
)";

inline const char kSyncCycle[] =
    R"(# Both players improving at once revisit this profile after four
# synchronous steps.
game {
  players: a b ;
  outcomes: payoff 2 ;
  tree: (a *(b *(a [3,2] *[2,0]) [1,1]) (b [1,1] *(a [2,0] *[3,2]))) ;
}
)";

inline const char kDagCycle11[] =
    R"(# Lazy improvement cycles with period 11 when z<a y<a x and x<b y<b z.
# Non-sink nodes a1 b1 a2 b2 a3 b3 a4 b4 are listed top to bottom; only
# the edges used by the cycle exist. The starred profile is its first frame.
dag {
  players: a b ;
  outcomes: x y z ;
  node a1 a -> *b1 a2 a3 ;
  node b1 b -> *a2 b2 b3 ;
  node a2 a -> *b2 a4 ;
  node b2 b -> *a3 tz ;
  node a3 a -> b3 *tx ;
  node b3 b -> *a4 ;
  node a4 a -> *b4 tx ;
  node b4 b -> *ty tz ;
  leaf tx x ;
  leaf ty y ;
  leaf tz z ;
  root a1 ;
  prefer a: chain z y x ;
  prefer b: chain x y z ;
}
)";

inline const char kDagCycle8[] =
    R"(# Lazy improvement cycles with period 8 when z<a y<a x and x<b z<b y.
# Non-sink nodes b1 a2 a3 b3 a4 b4 a5 are listed top to bottom; only the
# edges used by the cycle exist. The starred profile is its first frame.
dag {
  players: a b ;
  outcomes: x y z ;
  node b1 b -> *a2 a3 b3 ;
  node a2 a -> *a3 a4 ;
  node a3 a -> *b3 a4 tx ;
  node b3 b -> *a4 tz ;
  node a4 a -> b4 *tx ;
  node b4 b -> *a5 tz ;
  node a5 a -> tx *ty ;
  leaf tx x ;
  leaf ty y ;
  leaf tz z ;
  root b1 ;
  prefer a: chain z y x ;
  prefer b: chain x z y ;
}
)";

inline const char kLazyVsCrazy[] =
    R"(# a is acyclic (0<1) while b is crazy (0<1 and 1<0); lazy improvement
# still cycles through an a-labelled step.
dag {
  players: a b ;
  outcomes: 0 1 ;
  node bt b -> *na bl br ;
  node na a -> *bl br ;
  node bl b -> *l0 l1 ;
  node br b -> r0 *r1 ;
  leaf l0 0 ;
  leaf l1 1 ;
  leaf r0 0 ;
  leaf r1 1 ;
  root bt ;
  prefer a: pair 0 1 ;
  prefer b: pair 0 1 ;
  prefer b: pair 1 0 ;
}
)";

inline const char kLazyVsCrazyPrimed[] =
    R"(# The same dag with the right-hand sinks relabelled 0p and 1p.
dag {
  players: a b ;
  outcomes: 0 0p 1 1p ;
  node bt b -> *na bl br ;
  node na a -> *bl br ;
  node bl b -> *l0 l1 ;
  node br b -> r0 *r1 ;
  leaf l0 0 ;
  leaf l1 1 ;
  leaf r0 0p ;
  leaf r1 1p ;
  root bt ;
  prefer a: pair 0 1 ;
  prefer a: pair 0 1p ;
  prefer a: pair 0p 1 ;
  prefer a: pair 0p 1p ;
  prefer b: pair 0 1 ;
  prefer b: pair 0 1p ;
  prefer b: pair 0p 1 ;
  prefer b: pair 0p 1p ;
  prefer b: pair 1 0 ;
  prefer b: pair 1 0p ;
  prefer b: pair 1p 0 ;
  prefer b: pair 1p 0p ;
}
)";

inline const char kMarkovSimple[] =
    R"(# Two equilibria; only the subgame perfect one is stable.
game {
  players: a b ;
  outcomes: payoff 2 ;
  tree: (a (b [3,1] [0,0]) [2,2]) ;
}
)";

inline const char kMarkovAbcdefgh[] =
    R"(# Eight profiles A..H; indices in enumeration order are
# A=2 B=0 C=1 D=3 E=6 F=4 G=5 H=7. Stable weights: A 7/16, F 1/4, G 5/16.
game {
  players: a b ;
  outcomes: payoff 2 ;
  tree: (a (b (a [1,0] [0,3]) [3,2]) [2,0]) ;
}
)";

inline const char kNfTwoNe[] = R"(# Two equilibria: (ar,bl) and (al,br).
nf {
  players: a b ;
  strategies a: al ar ;
  strategies b: bl br ;
  outcomes: payoff 2 ;
  cell al bl = [1,0] ;
  cell al br = [5,0] ;
  cell ar bl = [2,4] ;
  cell ar br = [5,3] ;
}
)";

inline const char kNfNoNe[] =
    R"(# No equilibrium; improvement cycles through all four profiles.
nf {
  players: a b ;
  strategies a: al ar ;
  strategies b: bl br ;
  outcomes: payoff 2 ;
  cell al bl = [0,3] ;
  cell al br = [3,0] ;
  cell ar bl = [3,0] ;
  cell ar br = [0,3] ;
}
)";

inline const char kNfCycle3x3[] =
    R"(# The only equilibrium is (ar,br); improvement from (al,bl) cycles away
# from it.
nf {
  players: a b ;
  strategies a: al am ar ;
  strategies b: bl bm br ;
  outcomes: payoff 2 ;
  cell al bl = [1,0] ;
  cell al bm = [0,1] ;
  cell al br = [0,0] ;
  cell am bl = [0,1] ;
  cell am bm = [1,0] ;
  cell am br = [0,0] ;
  cell ar bl = [0,0] ;
  cell ar bm = [0,0] ;
  cell ar br = [2,2] ;
}
)";

inline const char kSwoPathology1[] =
    R"(# x<y and y<z without x<z. The starred profile is a backward induction
# output but not an equilibrium: a reaches z by changing both choices.
game {
  players: a ;
  outcomes: x y z ;
  tree: (a (a *[x] [z]) *[y]) ;
  prefer a: pair x y ;
  prefer a: pair y z ;
}
)";

inline const char kSwoPathology2[] =
    R"(# x<z alone. The starred profile is a backward induction output but not
# an equilibrium: a reaches z by changing both choices.
game {
  players: a ;
  outcomes: x y z ;
  tree: (a (a [z] *[y]) *[x]) ;
  prefer a: pair x z ;
}
)";

inline std::string QuadraticText(int n) {
  std::string outcomes = "y";
  std::string chain = "y";
  std::string tree = "(a";
  std::string pairs;
  for (int i = 0; i <= n; ++i) {
    std::string x = "x" + std::to_string(i);
    outcomes += " " + x;
    chain += " " + x;
    tree += std::string(i == 0 ? " *" : " ") + "(b *[" + x + "] [y])";
    pairs += "  prefer b: pair " + x + " y ;\n";
  }
  tree += ")";
  return "# Lazy improvement from the starred profile can take\n"
         "# (n+2)(n+3)/2 - 2 steps, here with n = " +
         std::to_string(n) +
         ".\n"
         "game {\n"
         "  players: a b ;\n"
         "  outcomes: " +
         outcomes +
         " ;\n"
         "  tree: " +
         tree +
         " ;\n"
         "  prefer a: chain " +
         chain + " ;\n" + pairs + "}\n";
}

// Families z < y < t < x for a and x < z < t < y for b, compared only
// across families.
inline std::string VeryLazyText() {
  const std::map<char, std::vector<std::string>> family = {
      {'x', {"x3", "x7", "x9"}},
      {'y', {"y2", "y9"}},
      {'z', {"z4", "z8"}},
      {'t', {"t1", "t3"}},
  };
  auto pairs = [&](const std::string& player, const std::string& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        for (const std::string& lo : family.at(order[i])) {
          for (const std::string& hi : family.at(order[j])) {
            out += "  prefer " + player + ": pair " + lo + " " + hi + " ;\n";
          }
        }
      }
    }
    return out;
  };
  return R"(# Each very lazy variant still cycles. p5 and p6 are the two relay nodes
# whose owner does not matter; they belong to a. The starred profile is the
# first frame.
dag {
  players: a b ;
  outcomes: x3 x7 x9 y2 y9 z4 z8 t1 t3 ;
  node b1 b -> *a2 a3 b3 tt1 ;
  node a2 a -> *a3 p5 ty2 ;
  node a3 a -> *b3 a7 tx3 tt3 ;
  node b3 b -> *a7 tz4 ;
  node p5 a -> *p6 ;
  node p6 a -> *a7 ;
  node a7 a -> b8 *tx7 ;
  node b8 b -> *a9 tz8 ;
  node a9 a -> tx9 *ty9 ;
  leaf tt1 t1 ;
  leaf ty2 y2 ;
  leaf tx3 x3 ;
  leaf tt3 t3 ;
  leaf tz4 z4 ;
  leaf tx7 x7 ;
  leaf tz8 z8 ;
  leaf tx9 x9 ;
  leaf ty9 y9 ;
  root b1 ;
)" + pairs("a", "zytx") +
         pairs("b", "xzty") + "}\n";
}

inline bool ParseQuadraticName(const std::string& name, int* n) {
  const std::string prefix = "quadratic-";
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return false;
  int value = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || value > 1000) return false;
    value = value * 10 + (name[i] - '0');
  }
  if (value > 1000) return false;
  *n = value;
  return true;
}

}  // namespace internal

inline std::vector<std::string> FixtureNames() {
  return {"g1-kuhn",
          "g2-cycle",
          "g3-delta",
          "aumann",
          "quadratic-3",
          "sync-cycle",
          "dag-cycle-11",
          "dag-cycle-8",
          "verylazy-cycle",
          "lazy-vs-crazy",
          "lazy-vs-crazy-primed",
          "markov-simple",
          "markov-abcdefgh",
          "nf-two-ne",
          "nf-no-ne",
          "nf-cycle-3x3",
          "swo-pathology-1",
          "swo-pathology-2"};
}

// Any quadratic-N with N <= 1000 is accepted besides the listed names.
inline std::string FixtureText(const std::string& name) {
  static const std::map<std::string, const char*> kTexts = {
      {"g1-kuhn", internal::kG1Kuhn},
      {"g2-cycle", internal::kG2Cycle},
      {"g3-delta", internal::kG3Delta},
      {"aumann", internal::kAumann},
      {"sync-cycle", internal::kSyncCycle},
      {"dag-cycle-11", internal::kDagCycle11},
      {"dag-cycle-8", internal::kDagCycle8},
      {"lazy-vs-crazy", internal::kLazyVsCrazy},
      {"lazy-vs-crazy-primed", internal::kLazyVsCrazyPrimed},
      {"markov-simple", internal::kMarkovSimple},
      {"markov-abcdefgh", internal::kMarkovAbcdefgh},
      {"nf-two-ne", internal::kNfTwoNe},
      {"nf-no-ne", internal::kNfNoNe},
      {"nf-cycle-3x3", internal::kNfCycle3x3},
      {"swo-pathology-1", internal::kSwoPathology1},
      {"swo-pathology-2", internal::kSwoPathology2},
  };
  auto it = kTexts.find(name);
  if (it != kTexts.end()) return it->second;
  if (name == "verylazy-cycle") return internal::VeryLazyText();
  int n = 0;
  if (internal::ParseQuadraticName(name, &n)) return internal::QuadraticText(n);
  Fail(ErrorKind::kUsage, "unknown fixture '" + name + "'");
}

// The move order that attains the quadratic bound: for k = n..1, a walks
// up through x1..xk, then b answers y under child k and a falls back to x0;
// finally b answers y under child 0. Returns nothing if the game does not
// have the shape of the family.
inline std::optional<std::vector<std::vector<ScriptedMove>>> QuadraticScript(
    const Game& g) {
  if (g.num_players() != 2) return std::nullopt;
  const GameNode& root = g.node(g.root());
  if (root.IsLeaf() || root.owner != 0) return std::nullopt;
  const int n = root.degree() - 1;
  std::vector<NodeId> x_leaf;
  std::vector<NodeId> y_leaf;
  for (NodeId c : root.successors) {
    const GameNode& child = g.node(c);
    if (child.IsLeaf() || child.owner != 1 || child.degree() != 2 ||
        !g.node(child.successors[0]).IsLeaf() ||
        !g.node(child.successors[1]).IsLeaf()) {
      return std::nullopt;
    }
    x_leaf.push_back(child.successors[0]);
    y_leaf.push_back(child.successors[1]);
  }
  std::vector<std::vector<ScriptedMove>> script;
  for (int k = n; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) script.push_back({{0, x_leaf[i]}});
    script.push_back({{1, y_leaf[k]}});
    script.push_back({{0, x_leaf[0]}});
  }
  script.push_back({{1, y_leaf[0]}});
  return script;
}

}  // namespace lazyeq

#endif  // LAZYEQ_FIXTURES_HPP_
