#pragma once
// Seeded self-check suites shared by the CLI verify subcommand and the
// acceptance harness: structural properties of the dynamics on fuzzed
// instances, exact golden values of the witness builders, and Monte Carlo
// structure estimates against their analytic targets.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace refnet {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured versus expected, shown on both outcomes
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Dynamics properties on fuzzed small instances plus the builder outputs:
// attractors above length 1 are at least min p + 1 long; restriction to an
// upstream closure preserves the restricted trajectory; nodes with acyclic
// upstream settle within the longest-path bound; two-valued states on an
// all-(p=th=1) cycle stay two-valued; one-cycle digraphs obey the gcd and
// supersimple transient bounds; stall counts along locked arcs stay below
// the feeder's refractory period; the whole system's attractor is the lcm
// and its transient the max over the upstream-closure subsystems.
SuiteReport verify_invariants(std::uint64_t seed, std::uint32_t cases);

// Exact transient/attractor values and divisibility laws of the three
// cycle builders.
SuiteReport verify_cycle_builders();

// The cycle-collector construction against the claimed transient value
// lcm(ks) and against the recorded attractor values.
SuiteReport verify_collector_transients();

// Firing-tree builders: structure verifier round trip, targeted mutations,
// transient bounds, and bound preservation under disjoint embedding.
SuiteReport verify_tree_witnesses(std::uint64_t seed);

// Monte Carlo digraph structure against analytic values: downstream closure
// of the largest cyclic component versus the fixed-point law, and short
// cycle counts versus c^l / l.
SuiteReport verify_structure_laws(std::uint64_t seed);

// CLI suite names, in display order.
const std::vector<std::string>& suite_names();

// Dispatch by CLI suite name; std::invalid_argument on an unknown name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed);

// Renders one line per check plus a summary line.
std::string format_report(const SuiteReport& report);

}  // namespace refnet
