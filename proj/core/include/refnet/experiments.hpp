#pragma once
// Monte Carlo harness: seeded parameter sweeps over (n, c) grids measuring
// transient and attractor lengths, order statistics per grid cell, and
// empirical estimates of random-digraph structure against their analytic
// predictions.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "refnet/detect.hpp"
#include "refnet/network.hpp"

namespace refnet {

struct SweepConfig {
  std::vector<std::uint32_t> n_list;  // node counts
  std::vector<double> c_list;         // mean degrees; arc probability is c/n
  std::uint32_t reps = 1;             // repetitions per (n, c) cell
  std::uint32_t p_lo = 1;
  std::uint32_t p_hi = 1;
  std::uint32_t th_lo = 1;
  std::uint32_t th_hi = 1;
  std::uint64_t step_cap = 10'000'000;
  std::uint64_t base_seed = 1;

  void validate() const;  // throws std::invalid_argument
};

struct SweepRecord {
  std::uint32_t n = 0;
  double c = 0.0;
  std::uint32_t rep = 0;
  std::uint64_t seed = 0;
  BigInt alpha = 1;
  std::uint64_t tau = 0;
  bool capped_alpha = false;
  bool capped_tau = false;
};

// Seed of one repetition: a 64-bit mix of the base seed, the node count, the
// index of c within the grid, and the repetition index. Any cell can be
// reproduced in isolation and workers need no shared generator state.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint32_t n, std::uint32_t c_index,
                          std::uint32_t rep);

// One record per (n, c, rep): fresh digraph at pi = c/n, fresh p/th vectors,
// fresh uniform initial state, measured by detect_hashing (periods off).
// Records are ordered by n_list, then c_list, then rep, and each worker
// writes into its pre-assigned slot: output is a pure function of cfg, and
// the jobs count never changes it.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, unsigned jobs = 1);

struct CellStats {
  std::uint32_t n = 0;
  double c = 0.0;
  std::uint64_t reps = 0;          // all records of the cell, capped included
  std::uint64_t uncapped = 0;      // records entering the order statistics
  double capped_fraction = 0.0;

  // Order statistics over uncapped values: lower median and maximum need at
  // least one uncapped record; the high quantile (mean of the 2nd and 3rd
  // largest, stored as twice its value to stay integral) needs at least
  // three. nullopt when the cell has too little uncapped data.
  std::optional<BigInt> median_alpha;
  std::optional<BigInt> p999_alpha_times2;
  std::optional<BigInt> max_alpha;
  std::optional<std::uint64_t> median_tau;
  std::optional<std::uint64_t> p999_tau_times2;
  std::optional<std::uint64_t> max_tau;
};

// Statistics of one cell; all records must share (n, c).
CellStats cell_stats(std::span<const SweepRecord> records);

// Groups a record list into contiguous (n, c) runs and reduces each.
std::vector<CellStats> collect_cell_stats(std::span<const SweepRecord> records);

// The positive root of e^(-c x) = 1 - x, the asymptotic fraction of nodes
// reachable from the largest strongly connected component. Bisection to
// within tol; c <= 1 has no positive root (std::domain_error).
double rho_of_c(double c, double tol = 1e-12);

struct CycleLengthLaw {
  std::uint32_t length = 0;
  double mean_count = 0.0;  // expectation approaches c^length / length
  double se = 0.0;
};

struct GraphLawReport {
  std::uint32_t n = 0;
  double c = 0.0;
  std::uint32_t reps = 0;
  // Node fractions of the largest cyclic component and of its downstream
  // closure; zero for acyclic draws.
  double giant_fraction_mean = 0.0;
  double giant_fraction_se = 0.0;
  double downstream_fraction_mean = 0.0;
  double downstream_fraction_se = 0.0;
  std::vector<CycleLengthLaw> cycle_laws;  // lengths 2, 3, 4
  // Sampled nodes whose upstream closure is supersimple. Samples whose
  // enumeration budget ran out count as undecided, not as supersimple.
  std::uint64_t supersimple_samples = 0;
  std::uint64_t supersimple_true = 0;
  std::uint64_t supersimple_undecided = 0;
  double supersimple_fraction = 0.0;
  double supersimple_se = 0.0;
};

// Draws `reps` digraphs at pi = c/n and measures the structural quantities
// above, sampling a handful of upstream closures per draw. Requires
// reps >= 30 so the standard errors mean something.
GraphLawReport estimate_graph_laws(std::uint32_t n, double c, std::uint32_t reps, Rng& rng);

}  // namespace refnet
