#pragma once
// Refractory threshold networks and their synchronous update rule. A node
// counts up toward its refractory period after firing and, once saturated,
// fires again (drops to 0) exactly when enough of its in-neighbors fired in
// the previous step.

#include <cstdint>
#include <string>
#include <vector>

#include "refnet/digraph.hpp"
#include "refnet/rng.hpp"

namespace refnet {

// Per-node states; slot 0 is unused so indices match node ids. Node i is
// "firing" in state s exactly when s[i] == 0.
using State = std::vector<std::uint32_t>;

struct Network {
  Digraph graph;
  std::vector<std::uint32_t> p;   // refractory periods, slot 0 unused
  std::vector<std::uint32_t> th;  // firing thresholds, slot 0 unused

  NodeId node_count() const { return graph.node_count(); }
  std::uint32_t min_p() const;
  std::uint32_t max_p() const;

  // Structural invariants: vector lengths match the graph, p_i in
  // [1, 65535] (the canonical byte encoding is at most two bytes per node),
  // th_i >= 1. Throws std::invalid_argument on violation.
  void validate() const;
};

bool is_valid_state(const Network& net, const State& s);
void require_valid_state(const Network& net, const State& s);  // throws std::invalid_argument

// The unique length-1 attractor: every node held at its refractory period.
State steady_state(const Network& net);

// One synchronous update into dst (which must not alias src). Trusts its
// inputs; step() is the validating wrapper.
void step_into(const Network& net, const State& src, State& dst);
State step(const Network& net, const State& s);

// [s0, step(s0), ...]: t_max applications, t_max + 1 states.
std::vector<State> simulate(const Network& net, const State& s0, std::uint64_t t_max);

// Canonical byte encoding for state hashing: fixed width per node,
// little-endian; one byte when every p_i <= 255, else two.
std::size_t encoded_state_width(const Network& net);
void encode_state(const State& s, std::size_t width, std::string& out);

// Uniform independent draws: p_i from [p_lo, p_hi], th_i from [th_lo, th_hi].
Network random_network(Digraph graph, std::uint32_t p_lo, std::uint32_t p_hi,
                       std::uint32_t th_lo, std::uint32_t th_hi, Rng& rng);

// Uniform independent draws: s_i from {0, ..., p_i}.
State random_state(const Network& net, Rng& rng);

}  // namespace refnet
