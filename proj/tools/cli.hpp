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

#ifndef LAZYEQ_TOOLS_CLI_HPP_
#define LAZYEQ_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lazyeq.hpp"

namespace lazyeq {
namespace cli {

inline std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kUsage, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void WriteOutput(const std::string& path, const std::string& text,
                        std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    Fail(ErrorKind::kUsage, "cannot write '" + path + "'");
  }
}

inline GameDocument LoadDocument(const std::string& path) {
  return ParseDocument(ReadInput(path));
}

inline std::shared_ptr<const Game> RequireTree(const GameDocument& doc,
                                               const std::string& what) {
  const auto* t = std::get_if<TreeDocument>(&doc);
  if (t == nullptr) Fail(ErrorKind::kValidation, what + " needs a tree game");
  return t->game;
}

inline std::string Label(const Profile& s) { return ProfileText(s); }
inline std::string Label(const DagProfile& s) { return DagProfileText(s); }

inline Rational ParseRationalOption(const std::string& text,
                                    const std::string& option) {
  try {
    return ParseRational(text);
  } catch (const Error&) {
    Fail(ErrorKind::kUsage,
         option + ": expected a rational, got '" + text + "'");
  }
}

inline std::string Fixed(long double v, int digits = 10) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << static_cast<double>(v);
  return os.str();
}

inline std::string PlayerCounts(const GameBase& g,
                                const std::vector<std::uint64_t>& counts) {
  std::string out;
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    out += (a == 0 ? "" : " ") + g.player_name(a) + "=" +
           std::to_string(counts[a]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ne / spe / bi

template <class G>
void PrintProfiles(const ProfileSpace<G>& space,
                   const std::vector<std::uint64_t>& indices,
                   const std::string& noun, std::ostream& out) {
  out << indices.size() << ' ' << noun << '\n';
  for (std::uint64_t i : indices) {
    out << "  #" << i << ' ' << Label(space.Decode(i)) << '\n';
  }
}

inline int CmdNe(const std::string& file, std::ostream& out) {
  GameDocument doc = LoadDocument(file);
  if (const auto* n = std::get_if<NormalFormDocument>(&doc)) {
    std::vector<std::uint64_t> ne = NfNash(*n->game);
    out << ne.size() << " Nash equilibria\n";
    for (std::uint64_t i : ne) {
      out << "  #" << i << ' ' << NfProfileName(*n->game, n->game->Decode(i))
          << '\n';
    }
    return 0;
  }
  auto show = [&](auto game) {
    CheckProfileCap(*game, ProfileCap());
    ProfileSpace space(game);
    PrintProfiles(space, NashIndices(space), "Nash equilibria", out);
  };
  if (const auto* t = std::get_if<TreeDocument>(&doc)) {
    show(t->game);
  } else {
    show(std::get<DagDocument>(doc).game);
  }
  return 0;
}

inline int CmdSpe(const std::string& file, std::ostream& out) {
  GameDocument doc = LoadDocument(file);
  if (const auto* d = std::get_if<DagDocument>(&doc)) {
    DagProfile s = DagSpeViaLinearExtension(d->game);
    out << "backward induction under linear extensions: " << Label(s) << '\n';
    return 0;
  }
  std::shared_ptr<const Game> game = RequireTree(doc, "spe");
  CheckProfileCap(*game, ProfileCap());
  ProfileSpace<Game> space(game);
  std::vector<std::uint64_t> spe;
  for (std::uint64_t i : NashIndices(space)) {
    if (IsSpe(space.Decode(i))) spe.push_back(i);
  }
  PrintProfiles(space, spe, "subgame perfect equilibria", out);
  bool acyclic = true;
  for (const PreferenceRelation& p : game->preferences()) {
    acyclic = acyclic && IsAcyclic(p);
  }
  if (acyclic) {
    out << "via linear extensions: " << Label(SpeViaLinearExtension(game))
        << '\n';
  }
  return 0;
}

inline int CmdBi(const std::string& file, std::ostream& out) {
  std::shared_ptr<const Game> game = RequireTree(LoadDocument(file), "bi");
  std::vector<Profile> bi = BackwardInduction(game);
  ProfileSpace<Game> space(game);
  out << bi.size() << " backward induction outputs\n";
  for (const Profile& s : bi) {
    out << "  #" << space.Encode(s) << ' ' << Label(s)
        << (IsNash(s) ? "" : "  (not Nash)") << (IsSpe(s) ? "  spe" : "")
        << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// run

struct RunArgs {
  std::string file;
  std::string mode = "lazy";
  std::string policy = "random";
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 10000;
  std::string start;
  std::string script;
  std::uint64_t trials = 1;
  unsigned jobs = 1;
  bool quiet = false;
};

inline StepMode ParseMode(const std::string& m) {
  if (m == "plain") return StepMode::kPlain;
  if (m == "lazy") return StepMode::kLazy;
  if (m == "sync") return StepMode::kSynchronous;
  Fail(ErrorKind::kUsage, "unknown mode '" + m + "'");
}

inline Policy ParsePolicy(const std::string& p) {
  if (p == "first") return Policy::kFirst;
  if (p == "random") return Policy::kUniformRandom;
  if (p == "roundrobin") return Policy::kRoundRobin;
  if (p == "scripted") return Policy::kScripted;
  Fail(ErrorKind::kUsage, "unknown policy '" + p + "'");
}

// One step per line: "player target [, player target ...]". Targets are leaf
// positions from the left (trees) or sink names (dags); '#' starts a comment.
template <class G>
std::vector<std::vector<ScriptedMove>> ParseScript(const G& g,
                                                   const std::string& text) {
  std::vector<std::vector<ScriptedMove>> script;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream words(line);
    std::vector<ScriptedMove> step;
    std::string player;
    std::string target;
    while (words >> player) {
      if (!(words >> target)) {
        Fail(ErrorKind::kParse, "script line " + std::to_string(number) +
                                    ": expected a target after '" + player +
                                    "'");
      }
      ScriptedMove m;
      m.player = g.FindPlayer(player);
      if (m.player == kNone) {
        Fail(ErrorKind::kValidation, "script line " + std::to_string(number) +
                                         ": unknown player '" + player + "'");
      }
      if constexpr (std::is_same_v<G, DagGame>) {
        m.leaf = g.FindNode(target);
      } else {
        std::size_t k = 0;
        try {
          k = std::stoul(target);
        } catch (const std::exception&) {
          k = g.leaves().size();
        }
        if (k < g.leaves().size()) m.leaf = g.leaves()[k];
      }
      if (m.leaf == kNone || !g.node(m.leaf).IsLeaf()) {
        Fail(ErrorKind::kValidation, "script line " + std::to_string(number) +
                                         ": unknown leaf '" + target + "'");
      }
      step.push_back(m);
    }
    if (!step.empty()) script.push_back(std::move(step));
  }
  return script;
}

inline const char* VerdictText(Verdict v) {
  switch (v) {
    case Verdict::kTerminatedAtNash:
      return "terminated";
    case Verdict::kCycleDetected:
      return "cycle detected";
    case Verdict::kStepCapReached:
      return "step cap reached";
    case Verdict::kScriptExhausted:
      return "script exhausted";
  }
  return "";
}

template <class G>
std::string Summary(const RunTrace<G>& trace) {
  std::ostringstream os;
  os << VerdictText(trace.verdict) << " after " << trace.steps.size()
     << " steps";
  if (trace.verdict == Verdict::kCycleDetected) {
    os << " (period " << *trace.cycle_period << ", first visit at step "
       << *trace.first_repeat_index << ")";
  }
  os << "; player steps "
     << PlayerCounts(trace.start.game(), trace.player_steps);
  return os.str();
}

template <class G>
int RunOn(std::shared_ptr<const G> game,
          const std::optional<BasicProfile<G>>& embedded, const RunArgs& args,
          std::ostream& out) {
  RunOptions options;
  options.mode = ParseMode(args.mode);
  options.policy = ParsePolicy(args.policy);
  options.seed = args.seed;
  options.max_steps = args.max_steps;
  std::optional<BasicProfile<G>> start = embedded;
  if (!args.start.empty()) {
    GameDocument sdoc = LoadDocument(args.start);
    std::optional<BasicProfile<G>> given;
    if constexpr (std::is_same_v<G, Game>) {
      if (auto* t = std::get_if<TreeDocument>(&sdoc)) given = t->profile;
    } else {
      if (auto* d = std::get_if<DagDocument>(&sdoc)) given = d->profile;
    }
    if (!given) {
      Fail(ErrorKind::kValidation, "start file holds no profile of this kind");
    }
    if (!given->game().SameShape(*game)) {
      Fail(ErrorKind::kValidation, "shape mismatch");
    }
    start.emplace(game, given->choices());
  }
  if (!start) start = BasicProfile<G>::FirstChoices(game);
  if (options.policy == Policy::kScripted) {
    if (!args.script.empty()) {
      options.script = ParseScript(*game, ReadInput(args.script));
    } else {
      std::optional<std::vector<std::vector<ScriptedMove>>> known;
      if constexpr (std::is_same_v<G, Game>) known = QuadraticScript(*game);
      if (!known) {
        Fail(ErrorKind::kUsage,
             "no built-in script for this game; pass --script FILE");
      }
      options.script = *known;
    }
  }
  if (args.trials <= 1) {
    RunTrace<G> trace = Run(*start, options);
    if (!args.quiet) {
      out << "start: " << Label(trace.start) << '\n';
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const RunStep<G>& st = trace.steps[k];
        out << "step " << k + 1 << ' ';
        for (std::size_t i = 0; i < st.movers.size(); ++i) {
          out << (i ? "+" : "") << game->player_name(st.movers[i]);
        }
        out << ": " << Label(st.profile) << '\n';
      }
    }
    out << Summary(trace) << '\n';
    return 0;
  }
  // Independent seeded trials, merged by trial index.
  std::vector<std::string> lines(args.trials);
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t k = first; k < args.trials; k += stride) {
      RunOptions o = options;
      o.seed = args.seed + k;
      lines[k] = "trial " + std::to_string(k) + " seed " +
                 std::to_string(o.seed) + ": " + Summary(Run(*start, o));
    }
  };
  unsigned jobs = std::max(1u, args.jobs);
  std::vector<std::future<void>> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.push_back(std::async(std::launch::async, work, j, jobs));
  }
  for (auto& f : pool) f.get();
  for (const std::string& line : lines) out << line << '\n';
  return 0;
}

inline int CmdRun(const RunArgs& args, std::ostream& out) {
  GameDocument doc = LoadDocument(args.file);
  if (const auto* t = std::get_if<TreeDocument>(&doc)) {
    return RunOn<Game>(t->game, t->profile, args, out);
  }
  if (const auto* d = std::get_if<DagDocument>(&doc)) {
    return RunOn<DagGame>(d->game, d->profile, args, out);
  }
  Fail(ErrorKind::kValidation, "run needs a tree or dag game");
}

// ---------------------------------------------------------------------------
// graph

template <class G>
int GraphOn(std::shared_ptr<const G> game, const std::string& mode,
            const std::string& dot, std::ostream& out) {
  CheckProfileCap(*game, ProfileCap());
  ProfileSpace<G> space(game);
  LabeledDigraph graph;
  if (mode == "verylazy-changes") {
    graph = VeryLazyGraph(space, VeryLazyVariant::kMinChanges);
  } else if (mode == "verylazy-distance") {
    graph = VeryLazyGraph(space, VeryLazyVariant::kMinPlayDistance);
  } else if (mode == "verylazy-length") {
    graph = VeryLazyGraph(space, VeryLazyVariant::kMinPlayLength);
  } else {
    graph = ImprovementGraph(space, ParseMode(mode));
  }
  SccResult scc = StronglyConnectedComponents(graph);
  out << "profiles " << graph.num_nodes() << ", edges " << graph.num_edges()
      << ", sinks " << Sinks(graph).size() << '\n';
  std::optional<std::uint64_t> longest = LongestPathLength(graph);
  if (longest) {
    out << "acyclic, longest path " << *longest << '\n';
  } else {
    std::vector<std::uint64_t> cycle = *FindCycle(graph);
    out << "cyclic, " << scc.count << " strongly connected components"
        << ", shortest cycle through #" << cycle.front() << " has length "
        << cycle.size() << '\n';
    for (std::uint64_t v : cycle) {
      out << "  #" << v << ' ' << Label(space.Decode(v)) << '\n';
    }
  }
  if (!dot.empty()) {
    std::string text = ToDot(
        graph, mode, [&](std::uint64_t v) { return Label(space.Decode(v)); },
        [&](int label) {
          return label == kSynchronousLabel ? std::string("sync")
                                            : game->player_name(label);
        });
    WriteOutput(dot, text, out);
  }
  return 0;
}

inline int CmdGraph(const std::string& file, const std::string& mode,
                    const std::string& dot, std::ostream& out) {
  GameDocument doc = LoadDocument(file);
  if (const auto* t = std::get_if<TreeDocument>(&doc)) {
    return GraphOn<Game>(t->game, mode, dot, out);
  }
  if (const auto* d = std::get_if<DagDocument>(&doc)) {
    return GraphOn<DagGame>(d->game, mode, dot, out);
  }
  const auto& n = std::get<NormalFormDocument>(doc);
  if (mode != "plain") {
    Fail(ErrorKind::kUsage, "normal-form games only have the plain mode");
  }
  LabeledDigraph graph = NfImprovementGraph(*n.game);
  out << "profiles " << graph.num_nodes() << ", edges " << graph.num_edges()
      << ", sinks " << Sinks(graph).size() << '\n';
  std::optional<std::vector<std::uint64_t>> cycle = FindCycle(graph);
  if (cycle) {
    out << "cyclic, shortest cycle through #" << cycle->front()
        << " has length " << cycle->size() << '\n';
    for (std::uint64_t v : *cycle) {
      out << "  #" << v << ' ' << NfProfileName(*n.game, n.game->Decode(v))
          << '\n';
    }
  } else {
    out << "acyclic, longest path " << *LongestPathLength(graph) << '\n';
  }
  if (!dot.empty()) {
    WriteOutput(dot,
                ToDot(
                    graph, "plain",
                    [&](std::uint64_t v) {
                      return NfProfileName(*n.game, n.game->Decode(v));
                    },
                    [&](int label) { return n.game->players().at(label); }),
                out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bound / delta

inline int CmdBound(const std::string& file, std::ostream& out) {
  std::shared_ptr<const Game> game = RequireTree(LoadDocument(file), "bound");
  const Game& g = *game;
  std::vector<std::int64_t> delta = BigDelta(g);
  bool all_acyclic = true;
  int h = 0;
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    out << "player " << g.player_name(a) << ": Delta " << delta[a];
    if (IsAcyclic(g.preference(a))) {
      int ha = MaxChainHeight(g.preference(a));
      h = std::max(h, ha);
      out << ", h " << ha << ", step bound " << StepBound(g, a) << '\n';
    } else {
      all_acyclic = false;
      out << ", preference is cyclic, no step bound\n";
    }
  }
  if (all_acyclic) {
    out << "global: h " << h << ", leaves " << g.num_leaves() << ", bound "
        << GlobalBound(g) << '\n';
  } else {
    out << "global: no bound, some preference is cyclic\n";
  }
  return 0;
}

inline int CmdDelta(const std::string& file, const std::string& profile_file,
                    std::ostream& out) {
  GameDocument doc = LoadDocument(file);
  std::shared_ptr<const Game> game = RequireTree(doc, "delta");
  const Game& g = *game;
  std::vector<std::int64_t> delta = BigDelta(g);
  out << "Delta:";
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    out << ' ' << g.player_name(a) << '=' << delta[a];
  }
  out << '\n';
  std::optional<Profile> s = std::get<TreeDocument>(doc).profile;
  if (!profile_file.empty()) {
    Profile given = ParseProfile(ReadInput(profile_file));
    if (!given.game().SameShape(g)) {
      Fail(ErrorKind::kValidation, "shape mismatch");
    }
    s.emplace(game, given.choices());
  }
  if (!s) return 0;
  DismissalTable table = SmallDelta(*s);
  out << "profile " << Label(*s) << '\n';
  for (PlayerId a = 0; a < g.num_players(); ++a) {
    out << "delta " << g.player_name(a) << ':';
    for (OutcomeId o = 0; o < g.num_outcomes(); ++o) {
      out << ' ' << g.outcomes().name(o) << '=' << table[a][o];
    }
    if (IsAcyclic(g.preference(a))) out << "  M=" << PotentialM(*s, a);
    out << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// prefcheck

inline int CmdPrefcheck(const std::string& file, std::ostream& out) {
  GameDocument doc = LoadDocument(file);
  const GameBase* g = nullptr;
  if (const auto* t = std::get_if<TreeDocument>(&doc)) g = t->game.get();
  if (const auto* d = std::get_if<DagDocument>(&doc)) g = d->game.get();
  if (g == nullptr)
    Fail(ErrorKind::kValidation, "prefcheck needs a tree or dag");
  FamilyVerdict verdict = CheckPreferenceFamily(g->preferences());
  auto name = [&](OutcomeId o) { return g->outcomes().name(o); };
  if (const auto* part = std::get_if<PreferencePartition>(&verdict)) {
    out << "terminating: blocks from worst to best:";
    for (std::size_t i = 0; i < part->blocks.size(); ++i) {
      out << " {";
      for (std::size_t k = 0; k < part->blocks[i].size(); ++k) {
        out << (k ? " " : "") << name(part->blocks[i][k]);
      }
      out << '}' << (part->contested[i] ? "*" : "");
    }
    out << "\nlazy improvement terminates in every dag game with these "
           "preferences\n";
    return 0;
  }
  const auto& w = std::get<PatternWitness>(verdict);
  std::string a = g->player_name(w.a);
  std::string b = g->player_name(w.b);
  out << "violating: " << name(w.z) << " <" << a << ' ' << name(w.y) << " <"
      << a << ' ' << name(w.x) << " and ";
  if (w.pattern == 1) {
    out << name(w.x) << " <" << b << ' ' << name(w.y) << " <" << b << ' '
        << name(w.z);
  } else {
    out << name(w.x) << " <" << b << ' ' << name(w.z) << " <" << b << ' '
        << name(w.y);
  }
  out << " (pattern " << w.pattern << ")\n"
      << "some dag game with these preferences has a lazy improvement cycle\n";
  return 0;
}

// ---------------------------------------------------------------------------
// markov / stable

inline std::string StateName(const ProfileSpace<Game>& space, std::uint64_t i) {
  return "#" + std::to_string(i) + ' ' + Label(space.Decode(i));
}

inline int CmdMarkov(const std::string& file, const std::string& p_text,
                     const std::string& eps_text, const std::string& dump,
                     std::ostream& out) {
  std::shared_ptr<const Game> game = RequireTree(LoadDocument(file), "markov");
  PerturbedChain chain = BuildChain(game, ParseRationalOption(p_text, "--p"),
                                    ParseRationalOption(eps_text, "--eps"));
  const auto& space = chain.space();
  out << chain.num_states() << " states, p " << FormatRational(chain.p())
      << ", eps " << FormatRational(chain.eps()) << '\n';
  for (std::size_t i = 0; i < chain.num_states(); ++i) {
    out << StateName(space, i) << (chain.is_nash(i) ? "  [Nash]" : "") << '\n';
    for (const ChainTransition& t : chain.row(i)) {
      out << "  -> #" << t.target << ' '
          << (t.kind == TransitionKind::kImprovement ? "p" : "eps") << ' '
          << FormatRational(t.probability) << '\n';
    }
    out << "  self " << FormatRational(chain.self_loop(i)) << '\n';
  }
  StationaryResult r = StationaryDistribution(chain);
  out << "stationary distribution (residual " << static_cast<double>(r.residual)
      << (r.reducible ? ", reducible" : "") << "):\n";
  for (std::size_t i = 0; i < chain.num_states(); ++i) {
    out << "  #" << i << ' ' << Fixed(r.distribution[i]) << '\n';
  }
  if (!dump.empty()) WriteOutput(dump, chain.Dump(), out);
  return 0;
}

struct StableArgs {
  std::string file;
  std::string p = "1/10";
  std::optional<std::string> eps0;
  int levels = 12;
  std::string threshold = "1/1000";
  std::string tol = "1/10000000000";
  std::optional<std::string> alpha;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

inline int CmdStable(const StableArgs& args, std::ostream& out) {
  std::shared_ptr<const Game> game =
      RequireTree(LoadDocument(args.file), "stable");
  Rational p = ParseRationalOption(args.p, "--p");
  Rational eps0 =
      args.eps0 ? ParseRationalOption(*args.eps0, "--eps0") : p / 10;
  StabilityOptions options;
  options.levels = args.levels;
  options.threshold =
      ToLongDouble(ParseRationalOption(args.threshold, "--threshold"));
  options.tol = ToLongDouble(ParseRationalOption(args.tol, "--tol"));
  options.concurrent = args.jobs > 1;
  StabilityReport report = StableProfiles(game, p, eps0, options);
  ProfileSpace<Game> space(game);
  out << "eps ladder " << FormatRational(report.eps_ladder.front()) << " .. "
      << FormatRational(report.eps_ladder.back()) << " (" << args.levels
      << " levels)" << (report.reducible ? ", reducible chain" : "") << '\n';
  for (const StateStability& st : report.states) {
    if (!st.is_nash && st.limit < options.threshold) continue;
    out << StateName(space, st.state) << (st.is_nash ? "  Nash" : "  not Nash")
        << ", limit weight " << Fixed(st.limit) << ", "
        << (st.stable ? "stable" : "unstable")
        << (st.converged ? "" : " (not converged)") << '\n';
  }
  out << "stable:";
  for (std::uint64_t i : report.stable) out << " #" << i;
  out << '\n';
  if (args.alpha) {
    Rational alpha = ParseRationalOption(*args.alpha, "--alpha");
    bool same = RobustnessCheck(game, p, eps0, alpha, args.seed, options);
    out << "robustness (alpha " << FormatRational(alpha) << ", seed "
        << args.seed << "): support " << (same ? "unchanged" : "changed")
        << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// gen / fixtures

struct GenArgs {
  std::string kind = "tree";
  GenParams params;
  std::vector<std::string> prefs = {"linear"};
  std::uint64_t seed = 0;
};

inline int CmdGen(GenArgs args, std::ostream& out) {
  GenKind kind;
  if (args.kind == "tree") {
    kind = GenKind::kTree;
  } else if (args.kind == "dag") {
    kind = GenKind::kDag;
  } else if (args.kind == "nf") {
    kind = GenKind::kNormalForm;
  } else {
    Fail(ErrorKind::kUsage, "unknown kind '" + args.kind + "'");
  }
  args.params.prefs.clear();
  for (const std::string& p : args.prefs) {
    args.params.prefs.push_back(ParsePrefKind(p));
  }
  out << PrintDocument(GenerateDocument(kind, args.params, args.seed));
  return 0;
}

inline int CmdFixtures(const std::string& action, const std::string& name,
                       std::ostream& out) {
  if (action == "list") {
    for (const std::string& n : FixtureNames()) out << n << '\n';
    return 0;
  }
  if (action == "emit") {
    if (name.empty()) Fail(ErrorKind::kUsage, "fixtures emit needs a NAME");
    out << FixtureText(name);
    return 0;
  }
  Fail(ErrorKind::kUsage, "fixtures: expected 'list' or 'emit NAME'");
}

// ---------------------------------------------------------------------------

inline int RunCli(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"Lazy improvement, equilibria and stability for abstract games",
               "lazyeq"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file;
  auto* ne = app.add_subcommand("ne", "Nash equilibria by exhaustive search");
  ne->add_option("FILE", file)->required();
  auto* spe = app.add_subcommand("spe", "Subgame perfect equilibria");
  spe->add_option("FILE", file)->required();
  auto* bi = app.add_subcommand("bi", "All backward induction outputs");
  bi->add_option("FILE", file)->required();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Simulate an improvement dynamics");
  run->add_option("FILE", run_args.file)->required();
  run->add_option("--mode", run_args.mode, "plain|lazy|sync")
      ->capture_default_str();
  run->add_option("--policy", run_args.policy,
                  "first|random|roundrobin|scripted")
      ->capture_default_str();
  run->add_option("--seed", run_args.seed)->capture_default_str();
  run->add_option("--max-steps", run_args.max_steps)->capture_default_str();
  run->add_option("--start", run_args.start, "File holding a start profile");
  run->add_option("--script", run_args.script,
                  "Moves for the scripted policy, one step per line");
  run->add_option("--trials", run_args.trials,
                  "Independent trials with seeds seed, seed+1, ...")
      ->capture_default_str();
  run->add_option("--jobs", run_args.jobs)->capture_default_str();
  run->add_flag("--quiet", run_args.quiet, "Print the summary only");

  std::string mode = "lazy";
  std::string dot;
  auto* graph = app.add_subcommand("graph", "Improvement graph over profiles");
  graph->add_option("FILE", file)->required();
  graph
      ->add_option("--mode", mode,
                   "plain|lazy|sync|verylazy-changes|verylazy-distance|"
                   "verylazy-length")
      ->capture_default_str();
  graph->add_option("--dot", dot,
                    "Write the graph in DOT format ('-' for stdout)");

  auto* bound = app.add_subcommand("bound", "Termination bounds");
  bound->add_option("FILE", file)->required();

  std::string profile_file;
  auto* delta = app.add_subcommand("delta", "Dismissed-outcome counters");
  delta->add_option("FILE", file)->required();
  delta->add_option("--profile", profile_file, "File holding a profile");

  auto* prefcheck =
      app.add_subcommand("prefcheck", "Decide termination on all dag games");
  prefcheck->add_option("FILE", file)->required();

  std::string p_text;
  std::string eps_text;
  std::string dump;
  auto* markov = app.add_subcommand("markov", "Perturbed Markov chain");
  markov->add_option("FILE", file)->required();
  markov->add_option("--p", p_text)->required();
  markov->add_option("--eps", eps_text)->required();
  markov->add_option("--dump-matrix", dump,
                     "Write the exact matrix row by row ('-' for stdout)");

  StableArgs stable_args;
  auto* stable = app.add_subcommand("stable", "Stable equilibria as eps -> 0");
  stable->add_option("FILE", stable_args.file)->required();
  stable->add_option("--p", stable_args.p)->capture_default_str();
  stable->add_option("--eps0", stable_args.eps0, "Default p/10");
  stable->add_option("--levels", stable_args.levels)->capture_default_str();
  stable->add_option("--threshold", stable_args.threshold)
      ->capture_default_str();
  stable->add_option("--tol", stable_args.tol)->capture_default_str();
  stable->add_option("--alpha", stable_args.alpha,
                     "Also rerun with transitions scaled in [1, alpha]");
  stable->add_option("--seed", stable_args.seed)->capture_default_str();
  stable->add_option("--jobs", stable_args.jobs)->capture_default_str();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Random game");
  gen->add_option("--kind", gen_args.kind, "tree|dag|nf")
      ->capture_default_str();
  gen->add_option("--players", gen_args.params.players)->capture_default_str();
  gen->add_option("--depth", gen_args.params.depth)->capture_default_str();
  gen->add_option("--branch", gen_args.params.branch)->capture_default_str();
  gen->add_option("--outcomes", gen_args.params.outcomes)
      ->capture_default_str();
  gen->add_option("--nodes", gen_args.params.nodes, "Non-sink nodes of a dag")
      ->capture_default_str();
  gen->add_option("--pref", gen_args.prefs,
                  "linear|acyclic|swo|crazy|payoff, once or once per player")
      ->capture_default_str();
  gen->add_option("--seed", gen_args.seed)->capture_default_str();

  std::string action;
  std::string fixture;
  auto* fixtures = app.add_subcommand("fixtures", "The built-in game corpus");
  fixtures->add_option("ACTION", action, "list|emit")->required();
  fixtures->add_option("NAME", fixture);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode(ErrorKind::kUsage);
  }

  try {
    if (ne->parsed()) return CmdNe(file, out);
    if (spe->parsed()) return CmdSpe(file, out);
    if (bi->parsed()) return CmdBi(file, out);
    if (run->parsed()) return CmdRun(run_args, out);
    if (graph->parsed()) return CmdGraph(file, mode, dot, out);
    if (bound->parsed()) return CmdBound(file, out);
    if (delta->parsed()) return CmdDelta(file, profile_file, out);
    if (prefcheck->parsed()) return CmdPrefcheck(file, out);
    if (markov->parsed()) return CmdMarkov(file, p_text, eps_text, dump, out);
    if (stable->parsed()) return CmdStable(stable_args, out);
    if (gen->parsed()) return CmdGen(gen_args, out);
    if (fixtures->parsed()) return CmdFixtures(action, fixture, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode(e.kind());
  }
  return ExitCode(ErrorKind::kUsage);
}

}  // namespace cli
}  // namespace lazyeq

#endif  // LAZYEQ_TOOLS_CLI_HPP_
