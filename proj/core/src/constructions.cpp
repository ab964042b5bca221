#include "refnet/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace refnet {

namespace {

SeededNetwork isolated_cycle(std::uint32_t l, std::uint32_t p) {
  SeededNetwork w;
  w.net.graph = Digraph(l);
  for (std::uint32_t j = 0; j < l; ++j) {
    w.net.graph.add_arc(1 + j, 1 + (j + 1) % l);
  }
  w.net.p.assign(std::size_t{l} + 1, p);
  w.net.th.assign(std::size_t{l} + 1, 1);
  w.net.p[0] = w.net.th[0] = 0;
  w.net.validate();
  w.state.assign(std::size_t{l} + 1, 0);
  return w;
}

}  // namespace

SeededNetwork build_restless_cycle(std::uint32_t l) {
  if (l < 2) {
    throw std::invalid_argument("build_restless_cycle: cycle length must be >= 2");
  }
  SeededNetwork w = isolated_cycle(l, 1);
  for (std::uint32_t j = 2; j <= l; ++j) w.state[j] = 1;
  return w;
}

SeededNetwork build_pulse_cycle(std::uint32_t l, std::uint32_t p) {
  if (p < 1) {
    throw std::invalid_argument("build_pulse_cycle: refractory period must be >= 1");
  }
  if (l < p + 1) {
    throw std::invalid_argument(
        "build_pulse_cycle: need cycle length >= p + 1, or the pulse dies");
  }
  SeededNetwork w = isolated_cycle(l, p);
  for (std::uint32_t j = 2; j <= l; ++j) w.state[j] = p;
  return w;
}

SeededNetwork build_staircase_cycle(std::uint32_t l, std::uint32_t p) {
  if (p < 1) {
    throw std::invalid_argument("build_staircase_cycle: refractory period must be >= 1");
  }
  if (l < 2 || l % (p + 1) != 0) {
    throw std::invalid_argument(
        "build_staircase_cycle: cycle length must be a positive multiple of p + 1");
  }
  SeededNetwork w = isolated_cycle(l, p);
  const std::uint32_t pp = p + 1;
  for (std::uint32_t j = 0; j < l; ++j) {
    w.state[j + 1] = (pp - j % pp) % pp;
  }
  return w;
}

SeededNetwork build_cycle_collector(std::span<const std::uint32_t> ks) {
  if (ks.empty()) {
    throw std::invalid_argument("build_cycle_collector: need at least one cycle length");
  }
  std::uint64_t total = 0;
  for (std::uint32_t k : ks) {
    if (k < 3 || k % 2 == 0) {
      throw std::invalid_argument("build_cycle_collector: cycle lengths must be odd and > 1");
    }
    total += k;
  }
  if (total > 1'000'000) {
    throw std::invalid_argument("build_cycle_collector: cycles too large");
  }
  const NodeId sum_k = static_cast<NodeId>(total);
  const NodeId n = sum_k + 3;
  const NodeId collector = sum_k + 1;
  const NodeId pace0 = sum_k + 2;
  const NodeId pace1 = sum_k + 3;

  SeededNetwork w;
  w.net.graph = Digraph(n);
  w.state.assign(std::size_t{n} + 1, 0);
  NodeId lo = 1;
  for (std::uint32_t k : ks) {
    for (std::uint32_t j = 0; j < k; ++j) {
      w.net.graph.add_arc(lo + j, lo + (j + 1) % k);
      w.state[lo + j] = (j % 2 == 0) ? 1 : 0;
    }
    w.net.graph.add_arc(lo + k - 1, collector);
    lo += k;
  }
  w.net.graph.add_arc(pace0, pace1);
  w.net.graph.add_arc(pace1, pace0);
  w.net.graph.add_arc(pace0, collector);
  w.state[collector] = 0;
  w.state[pace0] = 0;
  w.state[pace1] = 1;

  w.net.p.assign(std::size_t{n} + 1, 1);
  w.net.th.assign(std::size_t{n} + 1, 1);
  w.net.p[0] = w.net.th[0] = 0;
  w.net.validate();
  return w;
}

std::uint64_t complete_tree_size(std::uint32_t depth, std::uint32_t branching) {
  if (branching < 2) {
    throw std::invalid_argument("complete_tree_size: branching must be >= 2");
  }
  std::uint64_t size = 0;
  std::uint64_t level = 1;
  for (std::uint32_t m = 0; m <= depth; ++m) {
    size += level;
    if (size > 100'000'000) {
      throw std::invalid_argument("complete_tree_size: tree too large");
    }
    level *= branching;
  }
  return size;
}

SeededNetwork build_firing_tree(std::uint32_t depth, std::uint32_t branching, std::uint32_t p) {
  if (depth < 1) {
    throw std::invalid_argument("build_firing_tree: depth must be >= 1");
  }
  if (branching < 2) {
    throw std::invalid_argument("build_firing_tree: branching must be >= 2");
  }
  if (p < 1) {
    throw std::invalid_argument("build_firing_tree: refractory period must be >= 1");
  }
  const std::uint64_t size = complete_tree_size(depth, branching);
  const NodeId n = static_cast<NodeId>(size);

  SeededNetwork w;
  w.net.graph = Digraph(n);
  w.state.assign(std::size_t{n} + 1, 0);
  const std::uint32_t pp = p + 1;
  std::vector<std::uint32_t> level_of(size, 0);
  for (std::uint64_t pos = 0; pos < size; ++pos) {
    if (pos > 0) {
      const std::uint64_t parent = (pos - 1) / branching;
      level_of[pos] = level_of[parent] + 1;
      w.net.graph.add_arc(static_cast<NodeId>(pos + 1), static_cast<NodeId>(parent + 1));
    }
    // Leaves sit at 0 and each level above is one lower mod p + 1.
    w.state[pos + 1] = (level_of[pos] % pp + pp - depth % pp) % pp;
  }
  w.net.p.assign(std::size_t{n} + 1, p);
  w.net.th.assign(std::size_t{n} + 1, branching);
  w.net.p[0] = w.net.th[0] = 0;
  w.net.validate();
  return w;
}

bool verify_firing_tree(const Network& net, const State& s0, std::span<const NodeId> labeling,
                        std::uint32_t depth, std::uint32_t branching, std::uint32_t p) {
  if (depth < 1 || branching < 2 || p < 1) return false;
  if (!is_valid_state(net, s0)) return false;
  const std::uint64_t size = complete_tree_size(depth, branching);
  if (labeling.size() != size) return false;

  const NodeId n = net.node_count();
  std::vector<char> in_image(std::size_t{n} + 1, 0);
  for (NodeId w : labeling) {
    if (w < 1 || w > n || in_image[w]) return false;
    in_image[w] = 1;
  }

  const std::uint32_t pp = p + 1;
  std::vector<std::uint32_t> level_of(size, 0);
  std::vector<NodeId> expected;
  for (std::uint64_t pos = 0; pos < size; ++pos) {
    if (pos > 0) level_of[pos] = level_of[(pos - 1) / branching] + 1;
    const NodeId w = labeling[pos];

    // Uniform parameters and the depth staircase state.
    if (net.p[w] != p || net.th[w] != branching) return false;
    if (s0[w] != (level_of[pos] % pp + pp - depth % pp) % pp) return false;

    // In-neighbors: exactly the children for internal positions, none for
    // leaves; sibling labels must increase.
    const std::uint64_t first_child = pos * branching + 1;
    const bool internal = first_child < size;
    if (internal) {
      expected.clear();
      for (std::uint32_t j = 0; j < branching; ++j) {
        expected.push_back(labeling[first_child + j]);
        if (j > 0 && expected[j] <= expected[j - 1]) return false;
      }
      auto ins = net.graph.in_neighbors(w);
      if (!std::equal(ins.begin(), ins.end(), expected.begin(), expected.end())) return false;
    } else if (net.graph.in_degree(w) != 0) {
      return false;
    }

    // No arcs inside the image beyond child -> parent.
    const NodeId parent_label = pos > 0 ? labeling[(pos - 1) / branching] : 0;
    for (NodeId x : net.graph.out_neighbors(w)) {
      if (in_image[x] && x != parent_label) return false;
    }
  }
  return true;
}

SeededNetwork disjoint_union(const SeededNetwork& a, const SeededNetwork& b) {
  const NodeId na = a.net.node_count();
  const NodeId nb = b.net.node_count();
  SeededNetwork w;
  w.net.graph = Digraph(na + nb);
  for (NodeId v = 1; v <= na; ++v) {
    for (NodeId x : a.net.graph.out_neighbors(v)) w.net.graph.add_arc(v, x);
  }
  for (NodeId v = 1; v <= nb; ++v) {
    for (NodeId x : b.net.graph.out_neighbors(v)) w.net.graph.add_arc(na + v, na + x);
  }
  w.net.p.assign(std::size_t{na} + nb + 1, 0);
  w.net.th.assign(std::size_t{na} + nb + 1, 0);
  w.state.assign(std::size_t{na} + nb + 1, 0);
  for (NodeId v = 1; v <= na; ++v) {
    w.net.p[v] = a.net.p[v];
    w.net.th[v] = a.net.th[v];
    w.state[v] = a.state[v];
  }
  for (NodeId v = 1; v <= nb; ++v) {
    w.net.p[na + v] = b.net.p[v];
    w.net.th[na + v] = b.net.th[v];
    w.state[na + v] = b.state[v];
  }
  w.net.validate();
  return w;
}

}  // namespace refnet
