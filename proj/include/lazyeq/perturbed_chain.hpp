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

#ifndef LAZYEQ_PERTURBED_CHAIN_HPP_
#define LAZYEQ_PERTURBED_CHAIN_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lazyeq/core_games.hpp"
#include "lazyeq/dynamics.hpp"
#include "lazyeq/equilibria.hpp"
#include "lazyeq/graph.hpp"
#include "lazyeq/random.hpp"
#include "lazyeq/rational.hpp"

namespace lazyeq {

enum class TransitionKind { kImprovement, kPerturbation };

struct ChainTransition {
  std::uint32_t target;
  TransitionKind kind;
  Rational probability;
};

// States are all profiles of the game, in index order.
class PerturbedChain {
 public:
  PerturbedChain(ProfileSpace<Game> space, Rational p, Rational eps)
      : space_(std::move(space)), p_(std::move(p)), eps_(std::move(eps)) {}

  const ProfileSpace<Game>& space() const { return space_; }
  std::size_t num_states() const { return rows_.size(); }
  const Rational& p() const { return p_; }
  const Rational& eps() const { return eps_; }
  const std::vector<ChainTransition>& row(std::size_t i) const {
    return rows_.at(i);
  }
  const Rational& self_loop(std::size_t i) const { return self_loop_.at(i); }
  bool is_nash(std::size_t i) const { return is_nash_.at(i); }

  Rational Entry(std::size_t i, std::size_t j) const {
    if (i == j) return self_loop_.at(i);
    for (const ChainTransition& t : rows_.at(i)) {
      if (t.target == j) return t.probability;
    }
    return Rational(0);
  }

  // Row-major exact entries, one row per line.
  std::string Dump() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < num_states(); ++i) {
      for (std::size_t j = 0; j < num_states(); ++j) {
        if (j > 0) os << ' ';
        os << FormatRational(Entry(i, j));
      }
      os << '\n';
    }
    return os.str();
  }

  // Transition graph (positive entries, self-loops included).
  LabeledDigraph Graph() const {
    LabeledDigraph g;
    std::vector<LabeledDigraph::Edge> row;
    for (std::size_t i = 0; i < num_states(); ++i) {
      row.clear();
      if (self_loop_[i] > 0) {
        row.push_back({static_cast<std::uint32_t>(i), 0});
      }
      for (const ChainTransition& t : rows_[i]) {
        row.push_back(
            {t.target, t.kind == TransitionKind::kImprovement ? 0 : 1});
      }
      g.AddRow(row);
    }
    return g;
  }

 private:
  template <class Scale>
  friend PerturbedChain BuildChain(std::shared_ptr<const Game>, Rational,
                                   Rational, Scale&&);

  ProfileSpace<Game> space_;
  Rational p_;
  Rational eps_;
  std::vector<std::vector<ChainTransition>> rows_;
  std::vector<Rational> self_loop_;
  std::vector<bool> is_nash_;
};

// scale() is called once per transition, in a fixed order, and returns the
// factor applied to that transition's base probability.
template <class Scale>
PerturbedChain BuildChain(std::shared_ptr<const Game> game, Rational p,
                          Rational eps, Scale&& scale) {
  const Game& g = *game;
  Rational bound(1, 2 * g.num_leaves());
  if (p <= 0 || eps <= 0 || p >= bound || eps >= bound) {
    Fail(ErrorKind::kPrecondition,
         "parameters out of range: need 0 < p, eps < " + FormatRational(bound));
  }
  ProfileSpace<Game> space(game);
  if (space.size() > 0xffffffffull) {
    Fail(ErrorKind::kResourceCap, "state space too large");
  }
  PerturbedChain chain(space, p, eps);
  std::vector<int> s;
  space.DecodeInto(0, s);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    std::set<std::uint64_t> targets;
    for (PlayerId a = 0; a < g.num_players(); ++a) {
      ForEachLazySuccessor(
          g, s, a, [&](const std::vector<int>& t, const std::vector<NodeId>&) {
            std::uint64_t j = space.Encode(t);
            if (j != i) targets.insert(j);
            return true;
          });
    }
    std::vector<ChainTransition> row;
    Rational out_mass = 0;
    for (std::uint64_t j : targets) {
      Rational q = p * scale();
      out_mass += q;
      row.push_back(
          {static_cast<std::uint32_t>(j), TransitionKind::kImprovement, q});
    }
    bool nash = IsNashRaw(g, s);
    if (nash) {
      OutcomeId v = InducedOutcomeFrom(g, s, g.root());
      std::vector<int> t = s;
      for (NodeId n : g.internal_nodes()) {
        for (int k = 0; k < g.node(n).degree(); ++k) {
          if (k == s[n]) continue;
          t[n] = k;
          if (InducedOutcomeFrom(g, t, g.root()) == v) {
            Rational q = eps * scale();
            out_mass += q;
            row.push_back({static_cast<std::uint32_t>(space.Encode(t)),
                           TransitionKind::kPerturbation, q});
          }
        }
        t[n] = s[n];
      }
    }
    if (out_mass > 1) {
      Fail(ErrorKind::kPrecondition,
           "row overflow at state " + std::to_string(i));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.target < y.target; });
    chain.rows_.push_back(std::move(row));
    chain.self_loop_.push_back(1 - out_mass);
    chain.is_nash_.push_back(nash);
    NextChoices(g, s);
  }
  return chain;
}

inline PerturbedChain BuildChain(std::shared_ptr<const Game> game,
                                 const Rational& p, const Rational& eps) {
  return BuildChain(std::move(game), p, eps, [] { return Rational(1); });
}

// Factors uniform on a 1/1000 grid between 1 and alpha.
inline std::function<Rational()> SeededScaling(const Rational& alpha,
                                               std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return [rng, alpha]() {
    std::int64_t k = UniformInt(*rng, 0, 1000);
    return 1 + (alpha - 1) * Rational(k, 1000);
  };
}

// ---------------------------------------------------------------------------
// Stationary distributions

struct StationaryResult {
  std::vector<long double> distribution;
  long double residual = 0;      // L1 norm of pi M - pi
  std::uint64_t iterations = 0;  // power-iteration steps represented
  bool reducible = false;        // more than one communicating class
  std::size_t closed_classes = 0;
};

inline constexpr std::size_t kDenseStateLimit = 512;

// Limit of uniform-start power iteration. Small chains square the matrix, so
// 2^k steps cost k multiplications; larger chains iterate a sparse vector.
inline StationaryResult StationaryDistribution(
    const PerturbedChain& chain, long double tol = 1e-13L,
    std::uint64_t max_iters = std::uint64_t{1} << 40) {
  const std::size_t n = chain.num_states();
  StationaryResult result;
  {
    LabeledDigraph graph = chain.Graph();
    SccResult scc = StronglyConnectedComponents(graph);
    result.reducible = scc.count > 1;
    std::vector<char> leaves(scc.count, 0);
    graph.ForEachEdge([&](std::size_t v, const LabeledDigraph::Edge& e) {
      if (scc.component[v] != scc.component[e.target]) {
        leaves[scc.component[v]] = 1;
      }
    });
    for (char c : leaves) result.closed_classes += c == 0;
  }
  std::vector<std::vector<std::pair<std::uint32_t, long double>>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].emplace_back(static_cast<std::uint32_t>(i),
                         ToLongDouble(chain.self_loop(i)));
    for (const ChainTransition& t : chain.row(i)) {
      rows[i].emplace_back(t.target, ToLongDouble(t.probability));
    }
  }
  auto step = [&](const std::vector<long double>& pi) {
    std::vector<long double> out(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
      if (pi[i] == 0) continue;
      for (const auto& [j, q] : rows[i]) out[j] += pi[i] * q;
    }
    return out;
  };
  auto l1 = [&](const std::vector<long double>& x,
                const std::vector<long double>& y) {
    long double d = 0;
    for (std::size_t i = 0; i < n; ++i) d += std::fabs(x[i] - y[i]);
    return d;
  };
  std::vector<long double> uniform(n, 1.0L / static_cast<long double>(n));

  if (n <= kDenseStateLimit) {
    std::vector<long double> m(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, q] : rows[i]) m[i * n + j] += q;
    }
    std::vector<long double> pi = uniform;
    std::vector<long double> prev;
    std::uint64_t steps = 1;
    while (true) {
      prev = pi;
      pi.assign(n, 0.0L);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) pi[j] += uniform[i] * m[i * n + j];
      }
      long double residual = l1(step(pi), pi);
      if (residual < tol && l1(pi, prev) < tol) {
        result.distribution = pi;
        result.residual = residual;
        result.iterations = steps;
        return result;
      }
      if (steps > max_iters / 2) break;
      std::vector<long double> sq(n * n, 0.0L);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          long double a = m[i * n + k];
          if (a == 0) continue;
          for (std::size_t j = 0; j < n; ++j) sq[i * n + j] += a * m[k * n + j];
        }
      }
      // Keep rows stochastic against accumulated rounding.
      for (std::size_t i = 0; i < n; ++i) {
        long double row = 0;
        for (std::size_t j = 0; j < n; ++j) row += sq[i * n + j];
        for (std::size_t j = 0; j < n; ++j) sq[i * n + j] /= row;
      }
      m.swap(sq);
      steps *= 2;
    }
  } else {
    std::vector<long double> pi = uniform;
    for (std::uint64_t it = 1; it <= max_iters; ++it) {
      std::vector<long double> next = step(pi);
      long double residual = l1(next, pi);
      pi.swap(next);
      if (residual < tol) {
        result.distribution = pi;
        result.residual = l1(step(pi), pi);
        result.iterations = it;
        return result;
      }
    }
  }
  Fail(ErrorKind::kPrecondition, "no convergence");
}

// ---------------------------------------------------------------------------
// Stability along a geometric ladder of epsilons

struct StabilityOptions {
  int levels = 12;
  long double threshold = 1e-3L;
  long double tol = 1e-10L;
  // Optional per-transition scaling, reseeded identically on every rung.
  std::optional<std::pair<Rational, std::uint64_t>> scaling;  // alpha, seed
  bool concurrent = false;
};

struct StateStability {
  std::uint64_t state = 0;
  bool is_nash = false;
  std::vector<long double> ladder;  // weight at every rung
  long double limit = 0;            // extrapolated weight as eps -> 0
  long double last_difference = 0;  // between the last two extrapolants
  bool converged = false;
  bool stable = false;
};

struct StabilityReport {
  std::vector<Rational> eps_ladder;
  std::vector<StateStability> states;
  std::vector<std::uint64_t> stable;
  std::vector<long double> residuals;
  bool reducible = false;
};

// Richardson extrapolation for a ladder halving epsilon at every rung; the
// diagonal of the table, last entry is the best estimate.
inline std::vector<long double> RichardsonDiagonal(
    const std::vector<long double>& w) {
  std::vector<std::vector<long double>> r(w.size());
  std::vector<long double> diagonal;
  for (std::size_t k = 0; k < w.size(); ++k) {
    r[k].push_back(w[k]);
    long double factor = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      factor *= 2;
      r[k].push_back((factor * r[k][j - 1] - r[k - 1][j - 1]) / (factor - 1));
    }
    diagonal.push_back(r[k][k]);
  }
  return diagonal;
}

inline StabilityReport StableProfiles(const std::shared_ptr<const Game>& game,
                                      const Rational& p, const Rational& eps0,
                                      const StabilityOptions& options = {}) {
  if (options.levels < 2) {
    Fail(ErrorKind::kPrecondition, "the ladder needs at least two levels");
  }
  StabilityReport report;
  Rational eps = eps0;
  for (int k = 0; k < options.levels; ++k) {
    report.eps_ladder.push_back(eps);
    eps /= 2;
  }
  auto rung = [&](int k) {
    PerturbedChain chain =
        options.scaling ? BuildChain(game, p, report.eps_ladder[k],
                                     SeededScaling(options.scaling->first,
                                                   options.scaling->second))
                        : BuildChain(game, p, report.eps_ladder[k]);
    StationaryResult r = StationaryDistribution(chain);
    return std::make_pair(std::move(chain), std::move(r));
  };
  std::vector<StationaryResult> results;
  std::vector<bool> nash;
  if (options.concurrent) {
    std::vector<std::future<std::pair<PerturbedChain, StationaryResult>>> jobs;
    for (int k = 0; k < options.levels; ++k) {
      jobs.push_back(std::async(std::launch::async, rung, k));
    }
    for (auto& job : jobs) {
      auto [chain, r] = job.get();
      if (nash.empty()) {
        for (std::size_t i = 0; i < chain.num_states(); ++i) {
          nash.push_back(chain.is_nash(i));
        }
      }
      results.push_back(std::move(r));
    }
  } else {
    for (int k = 0; k < options.levels; ++k) {
      auto [chain, r] = rung(k);
      if (nash.empty()) {
        for (std::size_t i = 0; i < chain.num_states(); ++i) {
          nash.push_back(chain.is_nash(i));
        }
      }
      results.push_back(std::move(r));
    }
  }
  for (const StationaryResult& r : results) {
    report.residuals.push_back(r.residual);
    report.reducible = report.reducible || r.reducible;
  }
  for (std::size_t i = 0; i < nash.size(); ++i) {
    StateStability st;
    st.state = i;
    st.is_nash = nash[i];
    for (const StationaryResult& r : results) {
      st.ladder.push_back(r.distribution[i]);
    }
    std::vector<long double> diag = RichardsonDiagonal(st.ladder);
    st.limit = diag.back();
    st.last_difference = std::fabs(diag.back() - diag[diag.size() - 2]);
    st.converged = st.last_difference < options.tol;
    st.stable = st.converged && st.limit > options.threshold;
    if (st.stable) report.stable.push_back(i);
    report.states.push_back(std::move(st));
  }
  return report;
}

// Scales every transition by an independent factor in [1, alpha] and reports
// whether the stable set keeps its support.
inline bool RobustnessCheck(const std::shared_ptr<const Game>& game,
                            const Rational& p, const Rational& eps,
                            const Rational& alpha, std::uint64_t seed,
                            const StabilityOptions& base = {}) {
  Rational bound(1, 2 * game->num_leaves());
  if (alpha <= 0 || (1 + alpha) * p >= bound || (1 + alpha) * eps >= bound) {
    Fail(ErrorKind::kPrecondition,
         "parameters out of range: need alpha > 0 and (1+alpha)p, "
         "(1+alpha)eps < 1/(2l)");
  }
  StabilityOptions plain = base;
  plain.scaling.reset();
  StabilityOptions scaled = base;
  scaled.scaling = std::make_pair(alpha, seed);
  return StableProfiles(game, p, eps, plain).stable ==
         StableProfiles(game, p, eps, scaled).stable;
}

}  // namespace lazyeq

#endif  // LAZYEQ_PERTURBED_CHAIN_HPP_
