#include "refnet/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace refnet {

namespace {

void sorted_insert(std::vector<NodeId>& list, NodeId v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

}  // namespace

Digraph::Digraph(NodeId n) : n_(n), out_(std::size_t{n} + 1), in_(std::size_t{n} + 1) {}

void Digraph::check_node(NodeId v) const {
  if (v < 1 || v > n_) {
    throw std::invalid_argument("node " + std::to_string(v) + " out of range 1.." +
                                std::to_string(n_));
  }
}

bool Digraph::add_arc(NodeId from, NodeId to) {
  check_node(from);
  check_node(to);
  if (from == to) {
    throw std::invalid_argument("self-loop on node " + std::to_string(from));
  }
  if (has_arc(from, to)) return false;
  sorted_insert(out_[from], to);
  sorted_insert(in_[to], from);
  ++arcs_;
  return true;
}

bool Digraph::has_arc(NodeId from, NodeId to) const {
  check_node(from);
  check_node(to);
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::span<const NodeId> Digraph::out_neighbors(NodeId v) const {
  check_node(v);
  return out_[v];
}

std::span<const NodeId> Digraph::in_neighbors(NodeId v) const {
  check_node(v);
  return in_[v];
}

NodeId Digraph::out_degree(NodeId v) const {
  check_node(v);
  return static_cast<NodeId>(out_[v].size());
}

NodeId Digraph::in_degree(NodeId v) const {
  check_node(v);
  return static_cast<NodeId>(in_[v].size());
}

bool Digraph::operator==(const Digraph& other) const {
  return n_ == other.n_ && out_ == other.out_;
}

namespace {

// Closure over `step` (in- or out-adjacency) from the seed set, inclusive.
template <typename Adj>
std::vector<NodeId> closure(const Digraph& g, std::span<const NodeId> seeds, Adj adj) {
  std::vector<char> seen(std::size_t{g.node_count()} + 1, 0);
  std::vector<NodeId> queue;
  for (NodeId s : seeds) {
    if (s < 1 || s > g.node_count()) {
      throw std::invalid_argument("seed node out of range");
    }
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : adj(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<NodeId> result;
  result.reserve(queue.size());
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (seen[v]) result.push_back(v);
  }
  return result;
}

}  // namespace

std::vector<NodeId> upstream(const Digraph& g, std::span<const NodeId> seeds) {
  return closure(g, seeds, [&g](NodeId v) { return g.in_neighbors(v); });
}

std::vector<NodeId> downstream(const Digraph& g, std::span<const NodeId> seeds) {
  return closure(g, seeds, [&g](NodeId v) { return g.out_neighbors(v); });
}

std::vector<NodeId> upstream(const Digraph& g, NodeId v) {
  return upstream(g, std::span<const NodeId>(&v, 1));
}

std::vector<NodeId> downstream(const Digraph& g, NodeId v) {
  return downstream(g, std::span<const NodeId>(&v, 1));
}

std::vector<std::uint32_t> Condensation::sinks() const {
  std::vector<std::uint32_t> result;
  for (std::uint32_t c = 0; c < out.size(); ++c) {
    if (out[c].empty()) result.push_back(c);
  }
  return result;
}

std::optional<std::uint32_t> largest_cyclic_component(const Condensation& c) {
  std::optional<std::uint32_t> best;
  for (std::uint32_t k = 0; k < c.members.size(); ++k) {
    if (!c.cyclic[k]) continue;
    if (!best || c.members[k].size() > c.members[*best].size() ||
        (c.members[k].size() == c.members[*best].size() &&
         c.members[k][0] < c.members[*best][0])) {
      best = k;
    }
  }
  return best;
}

Condensation condense(const Digraph& g) {
  const NodeId n = g.node_count();
  Condensation result;
  result.component_of.assign(std::size_t{n} + 1, 0);

  // Iterative Tarjan. Components complete in reverse topological order of the
  // condensation, so the emitted index is flipped afterwards to make ids run
  // sources-first.
  std::vector<std::uint32_t> index(std::size_t{n} + 1, 0);
  std::vector<std::uint32_t> low(std::size_t{n} + 1, 0);
  std::vector<char> on_stack(std::size_t{n} + 1, 0);
  std::vector<NodeId> stack;
  std::uint32_t next_index = 1;
  std::uint32_t emitted = 0;

  struct Frame {
    NodeId v;
    std::size_t child;
  };
  std::vector<Frame> frames;
  for (NodeId root = 1; root <= n; ++root) {
    if (index[root] != 0) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const NodeId v = f.v;
      if (f.child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      auto nbrs = g.out_neighbors(v);
      if (f.child < nbrs.size()) {
        const NodeId w = nbrs[f.child++];
        if (index[w] == 0) {
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            const NodeId w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            result.component_of[w] = emitted;
            if (w == v) break;
          }
          ++emitted;
        }
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }

  const std::uint32_t count = emitted;
  for (NodeId v = 1; v <= n; ++v) {
    result.component_of[v] = count - 1 - result.component_of[v];
  }

  result.members.assign(count, {});
  for (NodeId v = 1; v <= n; ++v) {
    result.members[result.component_of[v]].push_back(v);  // v ascending keeps lists sorted
  }
  result.cyclic.assign(count, false);
  for (std::uint32_t c = 0; c < count; ++c) {
    result.cyclic[c] = result.members[c].size() >= 2;
  }

  result.out.assign(count, {});
  for (NodeId v = 1; v <= n; ++v) {
    for (NodeId w : g.out_neighbors(v)) {
      const std::uint32_t cv = result.component_of[v];
      const std::uint32_t cw = result.component_of[w];
      if (cv != cw) result.out[cv].push_back(cw);
    }
  }
  for (auto& list : result.out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  result.giant_id = largest_cyclic_component(result);
  if (result.giant_id) {
    result.giant = result.members[*result.giant_id];
    result.giant_upstream = upstream(g, result.giant);
    result.giant_downstream = downstream(g, result.giant);
  }

  std::vector<NodeId> cyclic_seeds;
  for (std::uint32_t c = 0; c < count; ++c) {
    if (result.cyclic[c]) {
      cyclic_seeds.insert(cyclic_seeds.end(), result.members[c].begin(),
                          result.members[c].end());
    }
  }
  result.cyclic_downstream = downstream(g, cyclic_seeds);
  return result;
}

std::pair<Digraph, std::vector<NodeId>> induced_subgraph(const Digraph& g,
                                                         std::span<const NodeId> nodes) {
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] < 1 || nodes[k] > g.node_count()) {
      throw std::invalid_argument("induced_subgraph: node out of range");
    }
    if (k > 0 && nodes[k] <= nodes[k - 1]) {
      throw std::invalid_argument("induced_subgraph: nodes must be sorted and distinct");
    }
  }
  Digraph sub(static_cast<NodeId>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (NodeId w : g.out_neighbors(nodes[k])) {
      auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
      if (it != nodes.end() && *it == w) {
        sub.add_arc(static_cast<NodeId>(k + 1),
                    static_cast<NodeId>(it - nodes.begin() + 1));
      }
    }
  }
  return {std::move(sub), std::vector<NodeId>(nodes.begin(), nodes.end())};
}

namespace {

// Enumerates directed cycles anchored at their smallest node: simple paths
// that start at an anchor a, stay on nodes > a, and close back to a. Each
// cycle is reported exactly once. sink receives the node sequence and may
// return false to stop. Returns true iff the enumeration ran to completion
// within work_budget.
template <typename Sink>
bool enumerate_cycles(const Digraph& g, std::uint32_t max_len, std::uint64_t work_budget,
                      Sink&& sink) {
  const NodeId n = g.node_count();
  if (max_len == 1) return true;  // loop-free: no cycles shorter than 2
  std::uint64_t work = 0;
  std::vector<char> on_path(std::size_t{n} + 1, 0);
  std::vector<NodeId> path;
  std::vector<std::size_t> next_child;
  for (NodeId a = 1; a <= n; ++a) {
    path.assign(1, a);
    next_child.assign(1, 0);
    on_path[a] = 1;
    while (!path.empty()) {
      if (++work > work_budget) return false;
      const NodeId v = path.back();
      auto nbrs = g.out_neighbors(v);
      if (next_child.back() >= nbrs.size()) {
        on_path[v] = 0;
        path.pop_back();
        next_child.pop_back();
        continue;
      }
      const NodeId w = nbrs[next_child.back()++];
      if (w == a) {
        if (!sink(path)) {
          for (NodeId u : path) on_path[u] = 0;
          return false;
        }
        continue;
      }
      if (w < a || on_path[w]) continue;
      if (max_len != 0 && path.size() >= max_len) continue;
      on_path[w] = 1;
      path.push_back(w);
      next_child.push_back(0);
    }
  }
  return true;
}

std::uint64_t census_work_budget(std::uint64_t max_count) {
  const std::uint64_t floor_work = std::uint64_t{1} << 20;
  if (max_count > (std::uint64_t{1} << 50)) return ~std::uint64_t{0};
  return 64 * max_count + floor_work;
}

}  // namespace

CycleCensus cycle_census(const Digraph& g, std::uint32_t max_len, std::uint64_t max_count) {
  if (max_len < 2) {
    throw std::invalid_argument("cycle_census: max_len must be >= 2");
  }
  CycleCensus census;
  const bool complete = enumerate_cycles(
      g, max_len, census_work_budget(max_count), [&](const std::vector<NodeId>& cyc) {
        ++census.count_by_length[static_cast<std::uint32_t>(cyc.size())];
        ++census.total;
        return census.total < max_count;
      });
  census.truncated = !complete;
  return census;
}

std::vector<std::vector<NodeId>> find_cycles(const Digraph& g, std::uint64_t max_count,
                                             std::uint32_t max_len, bool* truncated) {
  std::vector<std::vector<NodeId>> cycles;
  const bool complete = enumerate_cycles(
      g, max_len, census_work_budget(max_count), [&](const std::vector<NodeId>& cyc) {
        cycles.push_back(cyc);
        return cycles.size() < max_count;
      });
  if (truncated != nullptr) *truncated = !complete;
  return cycles;
}

std::optional<bool> is_supersimple(const Digraph& g, std::uint64_t budget) {
  std::vector<std::vector<NodeId>> cycles;
  const bool complete =
      enumerate_cycles(g, 0, census_work_budget(budget), [&](const std::vector<NodeId>& cyc) {
        cycles.push_back(cyc);
        return cycles.size() < 2;
      });
  if (cycles.size() >= 2) return false;
  if (!complete) return std::nullopt;
  if (cycles.empty()) return true;

  // Exactly one cycle C. Removing C's arcs leaves an acyclic graph (a
  // surviving cycle would be a second cycle of g), so distinct paths that
  // avoid C's arcs can be counted by walk counting, saturated at 2.
  const NodeId n = g.node_count();
  const std::vector<NodeId>& cyc = cycles[0];
  std::vector<char> on_cycle(std::size_t{n} + 1, 0);
  std::vector<NodeId> cycle_next(std::size_t{n} + 1, 0);
  for (std::size_t k = 0; k < cyc.size(); ++k) {
    on_cycle[cyc[k]] = 1;
    cycle_next[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  auto cycle_arc = [&](NodeId from, NodeId to) { return cycle_next[from] == to; };

  // Order nodes topologically with respect to the remaining arcs (Kahn).
  std::vector<std::uint32_t> pending(std::size_t{n} + 1, 0);
  for (NodeId v = 1; v <= n; ++v) {
    for (NodeId w : g.out_neighbors(v)) {
      if (!cycle_arc(v, w)) ++pending[w];
    }
  }
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId v = 1; v <= n; ++v) {
    if (pending[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (NodeId w : g.out_neighbors(order[head])) {
      if (!cycle_arc(order[head], w) && --pending[w] == 0) order.push_back(w);
    }
  }

  // Paths from C forward to each node, then from each node forward into C.
  std::vector<std::uint8_t> from_c(std::size_t{n} + 1, 0);
  for (NodeId v : cyc) from_c[v] = 1;
  for (NodeId v : order) {
    for (NodeId w : g.out_neighbors(v)) {
      if (cycle_arc(v, w)) continue;
      from_c[w] = static_cast<std::uint8_t>(std::min(3, from_c[w] + from_c[v]));
    }
  }
  std::vector<std::uint8_t> to_c(std::size_t{n} + 1, 0);
  for (NodeId v : cyc) to_c[v] = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (on_cycle[v]) continue;  // seeded; paths out of C are counted by from_c
    for (NodeId w : g.out_neighbors(v)) {
      to_c[v] = static_cast<std::uint8_t>(std::min(3, to_c[v] + to_c[w]));
    }
  }
  for (NodeId j = 1; j <= n; ++j) {
    if (on_cycle[j]) continue;
    if (from_c[j] >= 2 || to_c[j] >= 2) return false;
  }
  return true;
}

std::uint32_t longest_path(const Digraph& g, NodeId cyclic_size_guard) {
  const NodeId n = g.node_count();
  if (n == 0) return 0;
  const Condensation cond = condense(g);
  const bool acyclic =
      std::none_of(cond.cyclic.begin(), cond.cyclic.end(), [](bool b) { return b; });
  if (acyclic) {
    // Component ids are a topological order and every component is a
    // singleton, so they order the nodes directly.
    std::vector<NodeId> order(n);
    for (NodeId v = 1; v <= n; ++v) order[cond.component_of[v]] = v;
    std::vector<std::uint32_t> dist(std::size_t{n} + 1, 0);
    std::uint32_t best = 0;
    for (NodeId v : order) {
      for (NodeId w : g.out_neighbors(v)) {
        dist[w] = std::max(dist[w], dist[v] + 1);
        best = std::max(best, dist[w]);
      }
    }
    return best;
  }
  if (n > cyclic_size_guard) {
    throw std::runtime_error("intractable instance");
  }
  std::uint32_t best = 0;
  std::vector<char> on_path(std::size_t{n} + 1, 0);
  auto dfs = [&](auto&& self, NodeId v, std::uint32_t len) -> void {
    best = std::max(best, len);
    on_path[v] = 1;
    for (NodeId w : g.out_neighbors(v)) {
      if (!on_path[w]) self(self, w, len + 1);
    }
    on_path[v] = 0;
  };
  for (NodeId v = 1; v <= n; ++v) dfs(dfs, v, 0);
  return best;
}

namespace {

// Number of simple directed paths from s to t, saturated at `limit`.
// Decrements *work per step; throws once the budget is gone.
std::uint64_t count_paths(const Digraph& g, NodeId s, NodeId t, std::uint64_t limit,
                          std::uint64_t* work) {
  std::uint64_t found = 0;
  std::vector<char> on_path(std::size_t{g.node_count()} + 1, 0);
  auto dfs = [&](auto&& self, NodeId v) -> bool {
    if (*work == 0) throw std::runtime_error("intractable instance");
    --*work;
    if (v == t) {
      ++found;
      return found >= limit;
    }
    on_path[v] = 1;
    for (NodeId w : g.out_neighbors(v)) {
      if (!on_path[w] && self(self, w)) {
        on_path[v] = 0;
        return true;
      }
    }
    on_path[v] = 0;
    return false;
  };
  if (limit > 0) dfs(dfs, s);
  return found;
}

}  // namespace

bool is_straight_path(const Digraph& g, std::span<const NodeId> pt) {
  if (pt.empty()) {
    throw std::invalid_argument("is_straight_path: empty node sequence");
  }
  std::vector<char> seen(std::size_t{g.node_count()} + 1, 0);
  for (std::size_t k = 0; k < pt.size(); ++k) {
    if (pt[k] < 1 || pt[k] > g.node_count() || seen[pt[k]]) {
      throw std::invalid_argument("is_straight_path: sequence is not a path in the graph");
    }
    seen[pt[k]] = 1;
    if (k > 0 && !g.has_arc(pt[k - 1], pt[k])) {
      throw std::invalid_argument("is_straight_path: sequence is not a path in the graph");
    }
  }
  std::uint64_t work = std::uint64_t{1} << 24;
  for (std::size_t a = 0; a < pt.size(); ++a) {
    for (std::size_t b = a + 1; b < pt.size(); ++b) {
      if (count_paths(g, pt[a], pt[b], 2, &work) != 1) return false;
      if (count_paths(g, pt[b], pt[a], 1, &work) != 0) return false;
    }
  }
  return true;
}

bool is_b_small(std::uint64_t set_size, double b, std::uint64_t n) {
  return static_cast<double>(set_size) < b * std::log(static_cast<double>(n));
}

namespace {

void add_pair(Digraph& g, NodeId n, std::uint64_t k) {
  const NodeId src = static_cast<NodeId>(k / (n - 1) + 1);
  const NodeId r = static_cast<NodeId>(k % (n - 1));
  const NodeId dst = (r + 1 < src) ? r + 1 : r + 2;
  g.add_arc(src, dst);
}

}  // namespace

Digraph gen_erdos_renyi(NodeId n, double pi, Rng& rng, ArcSampling mode) {
  if (!(pi >= 0.0) || pi > 1.0) {
    throw std::invalid_argument("gen_erdos_renyi: pi must lie in [0, 1]");
  }
  Digraph g(n);
  if (n <= 1 || pi == 0.0) return g;
  const std::uint64_t total = std::uint64_t{n} * (n - 1);
  if (pi >= 1.0) {
    for (std::uint64_t k = 0; k < total; ++k) add_pair(g, n, k);
    return g;
  }
  if (mode == ArcSampling::automatic) {
    mode = (pi < 0.1 && n >= 64) ? ArcSampling::geometric_skip : ArcSampling::per_pair;
  }
  if (mode == ArcSampling::per_pair) {
    for (std::uint64_t k = 0; k < total; ++k) {
      if (rng.unit() < pi) add_pair(g, n, k);
    }
  } else {
    std::uint64_t pos = rng.geometric(pi);
    while (pos < total) {
      add_pair(g, n, pos);
      const std::uint64_t gap = rng.geometric(pi);
      const std::uint64_t remaining = total - pos - 1;
      if (gap >= remaining) break;
      pos += 1 + gap;
    }
  }
  return g;
}

}  // namespace refnet
