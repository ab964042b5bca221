#pragma once
// Deterministic witness builders: small networks paired with prescribed
// initial states whose exact transient and attractor behavior is known in
// closed form, used as executable fixtures by the test and verify suites.

#include <cstdint>
#include <span>

#include "refnet/network.hpp"

namespace refnet {

struct SeededNetwork {
  Network net;
  State state;
};

// Isolated cycle 1 -> 2 -> ... -> l -> 1 with p = th = 1 and state
// (0, 1, ..., 1): the firing front circulates forever, so alpha = l.
// Requires l >= 2.
SeededNetwork build_restless_cycle(std::uint32_t l);

// Isolated l-cycle with uniform refractory period p, th = 1, one node at 0
// and the rest at p: a single pulse travels the cycle, making alpha a
// multiple of l. Requires l >= p + 1 (a shorter cycle kills the pulse).
SeededNetwork build_pulse_cycle(std::uint32_t l, std::uint32_t p);

// Isolated l-cycle with uniform refractory period p, th = 1, and states
// stepping DOWN by one (mod p+1) along the arc direction, so every firing
// front advances each step and every node fires every p + 1 steps: alpha is
// a multiple of p + 1. The ascending variant collapses to the steady state
// for p >= 2; tests pin that difference. Requires (p + 1) | l.
SeededNetwork build_staircase_cycle(std::uint32_t l, std::uint32_t p);

// Disjoint odd cycles with alternating states, each feeding one collector
// node from its last member, plus a two-node pacemaker cycle that also feeds
// the collector; p = th = 1 everywhere. Node layout: cycles consecutively
// from node 1, then collector, then the two pacemaker nodes. The collector's
// input pattern settles only on lcm(ks) scale, which stretches the
// transient. Requires every length odd and > 1.
SeededNetwork build_cycle_collector(std::span<const std::uint32_t> ks);

// Number of nodes of the complete tree: sum of branching^m for m = 0..depth.
// Throws std::invalid_argument when the size would be unreasonably large.
std::uint64_t complete_tree_size(std::uint32_t depth, std::uint32_t branching);

// Complete tree with child -> parent arcs only, numbered breadth-first from
// the root (node 1), uniform refractory period p and threshold equal to the
// branching factor, and states descending by one (mod p+1) from the leaves
// (state 0) toward the root: every node's children fire in unison exactly
// when it saturates, so a firing wave climbs the tree and then dies out,
// forcing tau into [depth + 1, depth + p]. Requires depth >= 1,
// branching >= 2, p >= 1.
SeededNetwork build_firing_tree(std::uint32_t depth, std::uint32_t branching, std::uint32_t p);

// Checks that `labeling` embeds a firing tree of the given parameters into
// (net, s0): positions are breadth-first indices (children of position k are
// positions k*branching + 1 .. k*branching + branching), and the conditions
// are: uniform p/th on the image, the depth staircase state, in-neighbors of
// every internal node exactly its children, leaves without in-arcs, sibling
// labels increasing, and no further arcs inside the image. The output of
// build_firing_tree verifies under the identity labeling 1..size.
bool verify_firing_tree(const Network& net, const State& s0, std::span<const NodeId> labeling,
                        std::uint32_t depth, std::uint32_t branching, std::uint32_t p);

// Places b after a with node ids shifted; states concatenate. The parts do
// not interact, so tau = max and alpha = lcm of the parts.
SeededNetwork disjoint_union(const SeededNetwork& a, const SeededNetwork& b);

}  // namespace refnet
