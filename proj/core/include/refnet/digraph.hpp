#pragma once
// Loop-free simple directed graphs with 1-indexed nodes, and the structural
// queries the dynamics analysis relies on: reachability closures, strongly
// connected components, directed-cycle enumeration, and path-shape tests.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "refnet/rng.hpp"

namespace refnet {

using NodeId = std::uint32_t;

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(NodeId n);

  NodeId node_count() const { return n_; }
  std::uint64_t arc_count() const { return arcs_; }

  // Inserts the arc <from, to>. Returns false if it is already present.
  // Throws std::invalid_argument for self-loops and out-of-range endpoints.
  bool add_arc(NodeId from, NodeId to);
  bool has_arc(NodeId from, NodeId to) const;

  // Neighbor lists are kept sorted ascending.
  std::span<const NodeId> out_neighbors(NodeId v) const;
  std::span<const NodeId> in_neighbors(NodeId v) const;
  NodeId out_degree(NodeId v) const;
  NodeId in_degree(NodeId v) const;

  bool operator==(const Digraph& other) const;

 private:
  void check_node(NodeId v) const;

  NodeId n_ = 0;
  std::uint64_t arcs_ = 0;
  std::vector<std::vector<NodeId>> out_;  // slot 0 unused
  std::vector<std::vector<NodeId>> in_;
};

// Nodes that can reach v / that v can reach, including v itself. Sorted
// ascending. The span overloads take a set of seed nodes and return the
// closure of the whole set (empty seeds give an empty closure).
std::vector<NodeId> upstream(const Digraph& g, NodeId v);
std::vector<NodeId> downstream(const Digraph& g, NodeId v);
std::vector<NodeId> upstream(const Digraph& g, std::span<const NodeId> seeds);
std::vector<NodeId> downstream(const Digraph& g, std::span<const NodeId> seeds);

struct Condensation {
  // Component ids are topological: every condensation arc goes from a lower
  // id to a higher one, so sources come first and sinks last.
  std::vector<std::uint32_t> component_of;      // slot 0 unused
  std::vector<std::vector<NodeId>> members;     // per component, sorted
  std::vector<bool> cyclic;                     // >= 2 members (graphs are loop-free)
  std::vector<std::vector<std::uint32_t>> out;  // condensation DAG, sorted, no duplicates

  // Largest cyclic component (ties go to the one holding the smallest node
  // id) and its reach. giant_id is empty when the graph is acyclic, and the
  // three node sets below are then empty as well.
  std::optional<std::uint32_t> giant_id;
  std::vector<NodeId> giant;             // members of giant_id
  std::vector<NodeId> giant_upstream;    // nodes that can reach the giant, plus itself
  std::vector<NodeId> giant_downstream;  // nodes the giant can reach, plus itself

  // Nodes reachable from any cyclic component; equivalently, the nodes whose
  // upstream closure contains a directed cycle.
  std::vector<NodeId> cyclic_downstream;

  std::size_t component_count() const { return members.size(); }
  std::vector<std::uint32_t> sinks() const;  // components with no outgoing arcs
};

Condensation condense(const Digraph& g);

// The tie-break rule behind Condensation::giant_id, exposed for reuse:
// largest cyclic component, ties to the component holding the smallest node
// id, nullopt when the graph is acyclic.
std::optional<std::uint32_t> largest_cyclic_component(const Condensation& c);

// Subgraph induced by `nodes` (must be sorted, duplicate-free, in range).
// Node k of the result corresponds to nodes[k-1] in the parent; the returned
// vector is that mapping.
std::pair<Digraph, std::vector<NodeId>> induced_subgraph(const Digraph& g,
                                                         std::span<const NodeId> nodes);

struct CycleCensus {
  std::map<std::uint32_t, std::uint64_t> count_by_length;
  std::uint64_t total = 0;
  // Set when enumeration stopped at max_count or exhausted its work budget;
  // counts are then lower bounds instead of exact values.
  bool truncated = false;
};

// Directed cycles of length 2..max_len counted up to rotation: each cycle is
// enumerated exactly once, anchored at its smallest node. Requires
// max_len >= 2; pass n to census every possible length.
CycleCensus cycle_census(const Digraph& g, std::uint32_t max_len,
                         std::uint64_t max_count = 1'000'000);

// The cycles themselves, as node sequences starting at the smallest member.
// max_len = 0 means unbounded length. Stops after max_count cycles;
// *truncated reports whether more may exist.
std::vector<std::vector<NodeId>> find_cycles(const Digraph& g, std::uint64_t max_count,
                                             std::uint32_t max_len = 0,
                                             bool* truncated = nullptr);

// True when the graph has at most one directed cycle C and no node j outside
// C is joined to C by two distinct directed paths (in either direction,
// counted separately) that avoid C's arcs. nullopt when cycle enumeration
// exceeded its budget before the question was decided.
std::optional<bool> is_supersimple(const Digraph& g, std::uint64_t budget = 1'000'000);

// Length in arcs of the longest simple directed path. Exact; polynomial on
// acyclic graphs. Cyclic graphs fall back to exhaustive search and are
// rejected (std::runtime_error "intractable instance") above the node guard.
std::uint32_t longest_path(const Digraph& g, NodeId cyclic_size_guard = 24);

// Whether every pair of nodes on `pt` is joined by exactly one directed path
// in the whole graph, in exactly one direction. pt itself must be a directed
// path in g (std::invalid_argument otherwise). Path counting is exhaustive;
// inputs that exceed the internal work budget are rejected with
// std::runtime_error ("intractable instance").
bool is_straight_path(const Digraph& g, std::span<const NodeId> pt);

// |V| < b * ln(n)
bool is_b_small(std::uint64_t set_size, double b, std::uint64_t n);

enum class ArcSampling {
  automatic,       // geometric_skip for sparse inputs, per_pair otherwise
  per_pair,        // one Bernoulli draw per ordered pair
  geometric_skip,  // jump between arcs with geometric gaps
};

// Random digraph on n nodes: each of the n(n-1) ordered non-loop pairs is an
// arc independently with probability pi. The two sampling modes draw from
// the same distribution; results for a fixed (seed, mode) are reproducible.
Digraph gen_erdos_renyi(NodeId n, double pi, Rng& rng,
                        ArcSampling mode = ArcSampling::automatic);

}  // namespace refnet
