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

#ifndef LAZYEQ_GRAPH_HPP_
#define LAZYEQ_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lazyeq {

// Directed graph over 0..n-1 with an integer label per edge, stored in
// compressed rows. Parallel edges with distinct labels are kept.
class LabeledDigraph {
 public:
  struct Edge {
    std::uint32_t target;
    int label;
  };

  LabeledDigraph() : offsets_(1, 0) {}

  // Rows must be appended in source order.
  void AddRow(const std::vector<Edge>& row) {
    edges_.insert(edges_.end(), row.begin(), row.end());
    offsets_.push_back(edges_.size());
  }

  std::size_t num_nodes() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge* begin(std::size_t v) const { return edges_.data() + offsets_[v]; }
  const Edge* end(std::size_t v) const {
    return edges_.data() + offsets_[v + 1];
  }
  std::size_t out_degree(std::size_t v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  bool HasEdge(std::size_t from, std::size_t to) const {
    for (const Edge* e = begin(from); e != end(from); ++e) {
      if (e->target == to) return true;
    }
    return false;
  }

  template <class F>
  void ForEachEdge(F&& f) const {
    for (std::size_t v = 0; v < num_nodes(); ++v) {
      for (const Edge* e = begin(v); e != end(v); ++e) f(v, *e);
    }
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Edge> edges_;
};

inline std::vector<std::uint64_t> Sinks(const LabeledDigraph& g) {
  std::vector<std::uint64_t> out;
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    if (g.out_degree(v) == 0) out.push_back(v);
  }
  return out;
}

struct SccResult {
  std::vector<std::uint32_t> component;  // component id per node
  std::size_t count = 0;                 // ids are in reverse topological order
};

// Iterative Tarjan.
inline SccResult StronglyConnectedComponents(const LabeledDigraph& g) {
  const std::size_t n = g.num_nodes();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  SccResult result;
  result.component.assign(n, kUnset);
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> call;  // node, next edge
  std::uint32_t counter = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    call.emplace_back(static_cast<std::uint32_t>(start), 0);
    index[start] = low[start] = counter++;
    stack.push_back(static_cast<std::uint32_t>(start));
    on_stack[start] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < g.out_degree(v)) {
        std::uint32_t w = g.begin(v)[next].target;
        ++next;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          result.component[w] = static_cast<std::uint32_t>(result.count);
        } while (w != done);
        ++result.count;
      }
    }
  }
  return result;
}

// True when some edge lies on a directed cycle (self-loops count).
inline bool HasCycle(const LabeledDigraph& g) {
  SccResult scc = StronglyConnectedComponents(g);
  bool cyclic = false;
  g.ForEachEdge([&](std::size_t v, const LabeledDigraph::Edge& e) {
    if (scc.component[v] == scc.component[e.target]) cyclic = true;
  });
  return cyclic;
}

// A directed cycle as a node sequence (first node not repeated at the end).
inline std::optional<std::vector<std::uint64_t>> FindCycle(
    const LabeledDigraph& g, std::optional<int> through_label = std::nullopt) {
  SccResult scc = StronglyConnectedComponents(g);
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    for (const auto* e = g.begin(v); e != g.end(v); ++e) {
      if (scc.component[v] != scc.component[e->target]) continue;
      if (through_label && e->label != *through_label) continue;
      // Breadth-first search back from e->target to v inside the component.
      std::uint32_t comp = scc.component[v];
      std::vector<std::int64_t> prev(g.num_nodes(), -1);
      std::vector<std::uint64_t> queue = {e->target};
      prev[e->target] = static_cast<std::int64_t>(e->target);
      bool found = e->target == v;
      for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        std::uint64_t u = queue[head];
        for (const auto* f = g.begin(u); f != g.end(u); ++f) {
          if (scc.component[f->target] != comp || prev[f->target] >= 0) {
            continue;
          }
          prev[f->target] = static_cast<std::int64_t>(u);
          if (f->target == v) {
            found = true;
            break;
          }
          queue.push_back(f->target);
        }
      }
      std::vector<std::uint64_t> cycle;
      std::uint64_t u = v;
      while (u != e->target) {
        cycle.push_back(u);
        u = static_cast<std::uint64_t>(prev[u]);
      }
      cycle.push_back(e->target);
      std::reverse(cycle.begin(), cycle.end());
      // cycle now runs e->target ... v; rotate so it starts at v.
      std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
      return cycle;
    }
  }
  return std::nullopt;
}

// Largest number of edges carrying `label` (or any label when nullopt) on a
// single directed path. Empty when such an edge lies on a cycle, i.e. the
// count is unbounded.
inline std::optional<std::uint64_t> MaxLabelCountOnPath(
    const LabeledDigraph& g, std::optional<int> label = std::nullopt) {
  SccResult scc = StronglyConnectedComponents(g);
  auto counts = [&](const LabeledDigraph::Edge& e) {
    return !label || e.label == *label;
  };
  bool unbounded = false;
  g.ForEachEdge([&](std::size_t v, const LabeledDigraph::Edge& e) {
    if (counts(e) && scc.component[v] == scc.component[e.target]) {
      unbounded = true;
    }
  });
  if (unbounded) return std::nullopt;
  // Components come out of Tarjan in reverse topological order, so a
  // component only reaches components with smaller ids.
  std::vector<std::vector<std::uint32_t>> members(scc.count);
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    members[scc.component[v]].push_back(static_cast<std::uint32_t>(v));
  }
  std::vector<std::uint64_t> best(scc.count, 0);
  std::uint64_t overall = 0;
  for (std::size_t c = 0; c < scc.count; ++c) {
    std::uint64_t value = 0;
    for (std::uint32_t v : members[c]) {
      for (const auto* e = g.begin(v); e != g.end(v); ++e) {
        std::uint32_t d = scc.component[e->target];
        if (d == c) continue;
        value = std::max(value, best[d] + (counts(*e) ? 1 : 0));
      }
    }
    best[c] = value;
    overall = std::max(overall, value);
  }
  return overall;
}

// Edge count of a longest path; empty for cyclic graphs.
inline std::optional<std::uint64_t> LongestPathLength(const LabeledDigraph& g) {
  return MaxLabelCountOnPath(g, std::nullopt);
}

inline std::string ToDot(
    const LabeledDigraph& g, const std::string& name,
    const std::function<std::string(std::uint64_t)>& node_label,
    const std::function<std::string(int)>& edge_label) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    os << "  n" << v << " [label=" << quote(node_label(v));
    if (g.out_degree(v) == 0) os << ", shape=doublecircle";
    os << "];\n";
  }
  g.ForEachEdge([&](std::size_t v, const LabeledDigraph::Edge& e) {
    os << "  n" << v << " -> n" << e.target
       << " [label=" << quote(edge_label(e.label)) << "];\n";
  });
  os << "}\n";
  return os.str();
}

}  // namespace lazyeq

#endif  // LAZYEQ_GRAPH_HPP_
