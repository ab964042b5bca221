#pragma once
// Exact transient/attractor measurement for network trajectories. Two
// independent strategies are provided so each can validate the other: direct
// state hashing (with a constant-memory fallback), and decomposition into
// upstream-closed subsystems combined by lcm/max.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "refnet/network.hpp"

namespace refnet {

using BigInt = boost::multiprecision::cpp_int;

struct DynamicsSummary {
  // tau: number of states visited before the trajectory enters its repeating
  // set. alpha: size of the repeating set. When a capped flag is set the
  // corresponding value could not be determined within the step cap;
  // detect_hashing then reports 0, detect_decomposed the partial combination
  // over the components it did finish.
  std::uint64_t tau = 0;
  BigInt alpha = 1;
  bool capped_alpha = false;
  bool capped_tau = false;

  // Per node i: smallest T >= 1 with s_i(t) = s_i(t + T) for all t >= tau.
  // Slot 0 unused. Filled on request, never when capped or over budget.
  std::optional<std::vector<std::uint64_t>> per_node_period;

  // Per node i: smallest t0 after which the node never stalls (see
  // classify_min_cycling); inner nullopt when it stalls forever. Slot 0
  // unused. Filled on request.
  std::optional<std::vector<std::optional<std::uint64_t>>> min_cycling_onset;

  bool capped() const { return capped_alpha || capped_tau; }
};

struct DetectOptions {
  // A run is capped when the first state revisit happens after more than
  // step_cap steps; capped results are flagged, never thrown.
  std::uint64_t step_cap = 10'000'000;
  // Hash-table budget. When first-visit hashing would exceed it, detection
  // restarts with a constant-memory scheme (power-of-two snapshots) that
  // yields the same exact answer with the same cap semantics.
  std::uint64_t memory_budget_bytes = std::uint64_t{256} << 20;
  bool per_node_periods = true;
  bool min_cycling = false;
};

DynamicsSummary detect_hashing(const Network& net, const State& s0,
                               const DetectOptions& opt = {});

enum class DecomposeMode {
  // Run one subsystem per sink component of the condensation. Sufficient:
  // every node's upstream closure is contained in a sink's, and the
  // restriction of a periodic orbit keeps tau/alpha dominated.
  sink_components,
  // Run one subsystem per component (nodes of a component share their
  // upstream closure). Slower; kept as a cross-check of the sink shortcut.
  all_upstreams,
};

struct DecomposeOptions {
  std::uint64_t component_step_cap = 1'000'000;
  std::uint64_t memory_budget_bytes = std::uint64_t{256} << 20;
  DecomposeMode mode = DecomposeMode::sink_components;
};

// Restricts the network to upstream-closed node sets (each such subsystem
// evolves independently of the rest), measures each part by hashing, and
// combines: tau = max, alpha = lcm in arbitrary precision.
DynamicsSummary detect_decomposed(const Network& net, const State& s0,
                                  const DecomposeOptions& opt = {});

// Node i "stalls" at time t when s_i(t) = s_i(t+1) = p_i (saturated but not
// firing). Returns per node the smallest t0 such that no stall happens at any
// t >= t0, or nullopt when stalls recur forever. Slot 0 unused. Requires an
// uncapped summary (std::invalid_argument) whose tau + alpha fits the
// simulation budget (std::length_error).
std::vector<std::optional<std::uint64_t>> classify_min_cycling(const Network& net,
                                                               const State& s0,
                                                               const DynamicsSummary& summary);

struct OneCycleVerdict {
  std::uint32_t cycle_length = 0;
  // Set when alpha > 1: gcd(alpha, cycle_length) > 1.
  std::optional<bool> gcd_ok;
  bool supersimple = false;
  // Set when supersimple: tau <= 2 L + ((p*+1)^(p*) + 1) |C| + 4 p* - 3,
  // where L is the longest simple path and p* the largest refractory period.
  std::optional<bool> tau_bound_ok;
  std::uint32_t longest_path_length = 0;  // L, meaningful when supersimple
  BigInt tau_bound = 0;                   // the bound above, meaningful when supersimple
  bool all_hold() const { return gcd_ok.value_or(true) && tau_bound_ok.value_or(true); }
};

// Structural guarantees available when the graph contains exactly one
// directed cycle, evaluated against a measured summary. Used as a test
// oracle: every verdict is expected to hold. Throws std::invalid_argument
// when the graph does not contain exactly one cycle or the summary is
// capped, std::runtime_error when cycle enumeration was inconclusive.
OneCycleVerdict check_one_cycle_bounds(const Network& net, const DynamicsSummary& result);

}  // namespace refnet
