#include "refnet/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "refnet/digraph.hpp"

namespace refnet {

void SweepConfig::validate() const {
  if (n_list.empty()) throw std::invalid_argument("SweepConfig: n_list is empty");
  for (std::uint32_t n : n_list)
    if (n < 1) throw std::invalid_argument("SweepConfig: node counts must be positive");
  if (c_list.empty()) throw std::invalid_argument("SweepConfig: c_list is empty");
  for (double c : c_list)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("SweepConfig: mean degrees must be finite and non-negative");
  if (reps < 1) throw std::invalid_argument("SweepConfig: reps must be positive");
  if (p_lo < 1 || p_lo > p_hi)
    throw std::invalid_argument("SweepConfig: need 1 <= p_lo <= p_hi");
  if (th_lo < 1 || th_lo > th_hi)
    throw std::invalid_argument("SweepConfig: need 1 <= th_lo <= th_hi");
  if (step_cap < 1) throw std::invalid_argument("SweepConfig: step_cap must be positive");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint32_t n, std::uint32_t c_index,
                          std::uint32_t rep) {
  return mix64(base_seed, n, c_index, rep);
}

namespace {

SweepRecord run_one(const SweepConfig& cfg, std::uint32_t n, std::uint32_t c_index,
                    std::uint32_t rep) {
  SweepRecord rec;
  rec.n = n;
  rec.c = cfg.c_list[c_index];
  rec.rep = rep;
  rec.seed = derive_seed(cfg.base_seed, n, c_index, rep);

  Rng rng(rec.seed);
  const double pi = std::min(rec.c / static_cast<double>(n), 1.0);
  Digraph g = gen_erdos_renyi(n, pi, rng);
  Network net = random_network(std::move(g), cfg.p_lo, cfg.p_hi, cfg.th_lo, cfg.th_hi, rng);
  State s0 = random_state(net, rng);

  DetectOptions opt;
  opt.step_cap = cfg.step_cap;
  opt.per_node_periods = false;
  DynamicsSummary sum = detect_hashing(net, s0, opt);

  rec.alpha = sum.alpha;
  rec.tau = sum.tau;
  rec.capped_alpha = sum.capped_alpha;
  rec.capped_tau = sum.capped_tau;
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, unsigned jobs) {
  cfg.validate();

  struct Task {
    std::uint32_t n;
    std::uint32_t c_index;
    std::uint32_t rep;
  };
  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(cfg.n_list.size()) * cfg.c_list.size() * cfg.reps);
  for (std::uint32_t n : cfg.n_list)
    for (std::uint32_t ci = 0; ci < cfg.c_list.size(); ++ci)
      for (std::uint32_t rep = 0; rep < cfg.reps; ++rep) tasks.push_back({n, ci, rep});

  std::vector<SweepRecord> records(tasks.size());
  if (jobs <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k)
      records[k] = run_one(cfg, tasks[k].n, tasks[k].c_index, tasks[k].rep);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (std::size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1))
        records[k] = run_one(cfg, tasks[k].n, tasks[k].c_index, tasks[k].rep);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::min<std::size_t>(jobs, tasks.size());
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

namespace {

// Lower median, maximum, and the mean of the 2nd and 3rd largest (kept as
// twice its value) over an unsorted value list.
template <typename T>
void order_stats(std::vector<T>& values, std::optional<T>& median, std::optional<T>& p999_times2,
                 std::optional<T>& max) {
  if (values.empty()) return;
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  median = values[(k - 1) / 2];
  max = values[k - 1];
  if (k >= 3) p999_times2 = values[k - 2] + values[k - 3];
}

}  // namespace

CellStats cell_stats(std::span<const SweepRecord> records) {
  if (records.empty()) throw std::invalid_argument("cell_stats: empty cell");
  CellStats out;
  out.n = records.front().n;
  out.c = records.front().c;
  out.reps = records.size();

  std::vector<BigInt> alphas;
  std::vector<std::uint64_t> taus;
  std::uint64_t capped = 0;
  for (const SweepRecord& r : records) {
    if (r.n != out.n || r.c != out.c)
      throw std::invalid_argument("cell_stats: records from more than one cell");
    if (r.capped_alpha || r.capped_tau) {
      ++capped;
      continue;
    }
    alphas.push_back(r.alpha);
    taus.push_back(r.tau);
  }
  out.uncapped = alphas.size();
  out.capped_fraction = static_cast<double>(capped) / static_cast<double>(out.reps);
  order_stats(alphas, out.median_alpha, out.p999_alpha_times2, out.max_alpha);
  order_stats(taus, out.median_tau, out.p999_tau_times2, out.max_tau);
  return out;
}

std::vector<CellStats> collect_cell_stats(std::span<const SweepRecord> records) {
  std::vector<CellStats> out;
  std::size_t start = 0;
  while (start < records.size()) {
    std::size_t end = start + 1;
    while (end < records.size() && records[end].n == records[start].n &&
           records[end].c == records[start].c)
      ++end;
    out.push_back(cell_stats(records.subspan(start, end - start)));
    start = end;
  }
  return out;
}

double rho_of_c(double c, double tol) {
  if (!std::isfinite(c) || c <= 1.0)
    throw std::domain_error("rho_of_c: no positive root for c <= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("rho_of_c: tol must be positive");
  // f(x) = 1 - x - e^(-c x), written through expm1 so the sign survives the
  // cancellation near x = 0. f > 0 on (0, root), f < 0 on (root, 1].
  auto f = [c](double x) { return -x - std::expm1(-c * x); };
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2.0;
}

namespace {

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  double mean() const { return count == 0 ? 0.0 : sum / static_cast<double>(count); }
  // Standard error of the mean with the n-1 variance estimator.
  double se() const {
    if (count < 2) return 0.0;
    const auto n = static_cast<double>(count);
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    return std::sqrt(var / n);
  }
};

}  // namespace

GraphLawReport estimate_graph_laws(std::uint32_t n, double c, std::uint32_t reps, Rng& rng) {
  if (n < 1) throw std::invalid_argument("estimate_graph_laws: n must be positive");
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::invalid_argument("estimate_graph_laws: c must be finite and non-negative");
  if (reps < 30)
    throw std::invalid_argument("estimate_graph_laws: needs at least 30 repetitions");

  constexpr std::uint32_t kMaxCycleLength = 4;
  constexpr std::uint32_t kUpstreamSamplesPerDraw = 8;

  GraphLawReport out;
  out.n = n;
  out.c = c;
  out.reps = reps;

  Accumulator giant, downstream;
  Accumulator per_length[kMaxCycleLength + 1];
  const double pi = std::min(c / static_cast<double>(n), 1.0);

  for (std::uint32_t rep = 0; rep < reps; ++rep) {
    Digraph g = gen_erdos_renyi(n, pi, rng);
    Condensation cond = condense(g);
    giant.add(static_cast<double>(cond.giant.size()) / n);
    downstream.add(static_cast<double>(cond.giant_downstream.size()) / n);

    CycleCensus census = cycle_census(g, kMaxCycleLength);
    for (std::uint32_t len = 2; len <= kMaxCycleLength; ++len) {
      auto it = census.count_by_length.find(len);
      per_length[len].add(it == census.count_by_length.end()
                              ? 0.0
                              : static_cast<double>(it->second));
    }

    const std::uint32_t samples = std::min(kUpstreamSamplesPerDraw, n);
    for (std::uint32_t s = 0; s < samples; ++s) {
      const auto node = static_cast<NodeId>(rng.between(1, n));
      std::vector<NodeId> closure = upstream(g, node);
      auto [sub, labels] = induced_subgraph(g, closure);
      std::optional<bool> verdict = is_supersimple(sub);
      ++out.supersimple_samples;
      if (!verdict.has_value())
        ++out.supersimple_undecided;
      else if (*verdict)
        ++out.supersimple_true;
    }
  }

  out.giant_fraction_mean = giant.mean();
  out.giant_fraction_se = giant.se();
  out.downstream_fraction_mean = downstream.mean();
  out.downstream_fraction_se = downstream.se();
  for (std::uint32_t len = 2; len <= kMaxCycleLength; ++len)
    out.cycle_laws.push_back({len, per_length[len].mean(), per_length[len].se()});
  if (out.supersimple_samples > 0) {
    const auto total = static_cast<double>(out.supersimple_samples);
    const double p = static_cast<double>(out.supersimple_true) / total;
    out.supersimple_fraction = p;
    out.supersimple_se = std::sqrt(std::max(0.0, p * (1.0 - p)) / total);
  }
  return out;
}

}  // namespace refnet
