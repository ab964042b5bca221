#pragma once
// Plain-text serialization: arc-list digraph files, network and state files,
// JSON run summaries, the two sweep CSV layouts, and the flat key-value
// sweep config format. Writers are byte-deterministic; readers reject
// malformed input with std::runtime_error.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refnet/detect.hpp"
#include "refnet/digraph.hpp"
#include "refnet/experiments.hpp"
#include "refnet/network.hpp"

namespace refnet {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

// First line `n`, then one `source target` line per arc, 1-indexed, sorted
// by source then target, newline-terminated.
std::string digraph_to_text(const Digraph& g);
Digraph digraph_from_text(std::string_view text);

// The arc-list format followed by `p: p_1 ... p_n` and `th: th_1 ... th_n`.
std::string network_to_text(const Network& net);
Network network_from_text(std::string_view text);

// Space-separated node states, nodes 1..n.
std::string state_to_text(const State& s);
State state_from_text(std::string_view text);

// Keys: tau (number), alpha (decimal string), capped (bool), and
// per_node_period (array, present only when the summary carries periods).
std::string summary_to_json(const DynamicsSummary& s);
DynamicsSummary summary_from_json(std::string_view text);

// Header: n,c,rep,seed,alpha,tau,capped_alpha,capped_tau
std::string records_to_csv(std::span<const SweepRecord> records);
std::vector<SweepRecord> records_from_csv(std::string_view text);

// Header: n,c,reps,median_alpha,p999_alpha,max_alpha,median_tau,p999_tau,
// max_tau,capped_fraction. Order statistics a cell lacks the uncapped data
// for render as `nan`; the high quantile renders `.5` halves exactly.
std::string stats_to_csv(std::span<const CellStats> cells);

// One `key value...` line per field; `#` starts a comment. List-valued keys
// take space-separated values. n_list and c_list are required, the rest
// default as in SweepConfig.
std::string sweep_config_to_text(const SweepConfig& cfg);
SweepConfig sweep_config_from_text(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace refnet
