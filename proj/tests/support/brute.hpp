#pragma once

// Reference implementations written independently of the library internals:
// a direct transcription of the update rule and a map-based cycle finder
// that stores every visited state. Deliberately slow and obvious.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "refnet/network.hpp"

namespace brute {

inline refnet::State step_by_rule(const refnet::Network& net, const refnet::State& s) {
  const std::size_t n = net.node_count();
  refnet::State out(n + 1, 0);
  for (refnet::NodeId i = 1; i <= n; ++i) {
    const std::uint32_t p = net.p[i];
    if (s[i] < p) {
      out[i] = s[i] + 1;
      continue;
    }
    std::uint32_t firing = 0;
    for (refnet::NodeId j : net.graph.in_neighbors(i))
      if (s[j] == 0) ++firing;
    out[i] = firing >= net.th[i] ? 0 : p;
  }
  return out;
}

struct TauAlpha {
  std::uint64_t tau = 0;
  std::uint64_t alpha = 0;
};

inline TauAlpha tau_alpha(const refnet::Network& net, refnet::State s,
                          std::uint64_t limit = 2'000'000) {
  std::map<refnet::State, std::uint64_t> first_seen;
  for (std::uint64_t t = 0; t <= limit; ++t) {
    auto [it, inserted] = first_seen.emplace(s, t);
    if (!inserted) return {it->second, t - it->second};
    s = step_by_rule(net, s);
  }
  throw std::runtime_error("brute-force state walk exceeded its limit");
}

// Longest path by exhaustive depth-first extension from every start node.
// Exponential; callers keep n small.
inline std::uint64_t longest_path_exhaustive(const refnet::Digraph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> on_path(n + 1, false);
  std::uint64_t best = 0;
  auto extend = [&](auto&& self, refnet::NodeId v, std::uint64_t len) -> void {
    if (len > best) best = len;
    on_path[v] = true;
    for (refnet::NodeId w : g.out_neighbors(v))
      if (!on_path[w]) self(self, w, len + 1);
    on_path[v] = false;
  };
  for (refnet::NodeId v = 1; v <= n; ++v) extend(extend, v, 0);
  return best;
}

}  // namespace brute
