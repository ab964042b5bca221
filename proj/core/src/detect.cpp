#include "refnet/detect.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace refnet {

namespace {

struct RawDetection {
  std::uint64_t tau = 0;
  std::uint64_t alpha = 1;
  bool capped = false;  // first revisit beyond step_cap (or not found at all)
};

// Constant-memory exact detection: keep one snapshot state, doubling the
// window between snapshots. Once the snapshot lies inside the repeating set
// and the window reaches its length, the next return to the snapshot gives
// alpha exactly; a second synchronized walk from the start gives tau.
RawDetection detect_brent(const Network& net, const State& s0, std::uint64_t step_cap) {
  RawDetection out;
  State start = s0;
  start[0] = 0;  // states produced by step_into keep slot 0 at 0
  State snapshot = start;
  State cur = start;
  State scratch;
  std::uint64_t power = 1;
  std::uint64_t since_snapshot = 0;
  std::uint64_t alpha = 0;
  // A repeat at time tau + alpha <= step_cap is found after at most
  // 2 * step_cap + 1 steps of this phase.
  const std::uint64_t phase_budget = 2 * step_cap + 8;
  for (std::uint64_t t = 0; t < phase_budget; ++t) {
    step_into(net, cur, scratch);
    cur.swap(scratch);
    ++since_snapshot;
    if (cur == snapshot) {
      alpha = since_snapshot;
      break;
    }
    if (since_snapshot == power) {
      snapshot = cur;
      power *= 2;
      since_snapshot = 0;
    }
  }
  if (alpha == 0) {
    out.capped = true;
    return out;
  }
  // Walk two cursors alpha steps apart; they first meet at the entry of the
  // repeating set.
  State lead = start;
  for (std::uint64_t k = 0; k < alpha; ++k) {
    step_into(net, lead, scratch);
    lead.swap(scratch);
  }
  State trail = start;
  std::uint64_t tau = 0;
  State scratch2;
  while (!(lead == trail)) {
    step_into(net, lead, scratch);
    lead.swap(scratch);
    step_into(net, trail, scratch2);
    trail.swap(scratch2);
    ++tau;
  }
  out.tau = tau;
  out.alpha = alpha;
  out.capped = tau + alpha > step_cap;
  return out;
}

RawDetection detect_raw(const Network& net, const State& s0, std::uint64_t step_cap,
                        std::uint64_t memory_budget_bytes) {
  const std::size_t width = encoded_state_width(net);
  const std::size_t state_bytes = std::max<std::size_t>(width * net.node_count(), 1);
  // Rough per-entry footprint: the stored bytes, the string object, and the
  // hash node with bucket share.
  const std::size_t per_state = state_bytes + sizeof(std::string) + 64;
  const std::uint64_t max_states = std::max<std::uint64_t>(memory_budget_bytes / per_state, 16);

  std::deque<std::string> store;
  std::unordered_map<std::string_view, std::uint64_t> first_seen;
  State cur = s0;
  State scratch;
  std::string key;
  for (std::uint64_t t = 0;; ++t) {
    encode_state(cur, width, key);
    auto it = first_seen.find(std::string_view(key));
    if (it != first_seen.end()) {
      RawDetection out;
      out.tau = it->second;
      out.alpha = t - it->second;
      return out;
    }
    if (t >= step_cap) {
      // States s(0)..s(step_cap) are pairwise distinct, so the first revisit
      // happens after more than step_cap steps.
      RawDetection out;
      out.capped = true;
      return out;
    }
    if (store.size() >= max_states) {
      return detect_brent(net, s0, step_cap);
    }
    store.push_back(key);
    first_seen.emplace(std::string_view(store.back()), t);
    step_into(net, cur, scratch);
    cur.swap(scratch);
  }
}

// Smallest divisor-period of a cyclic signal of length alpha: start from
// alpha and strip prime factors while the shortened shift still fixes the
// signal.
bool shift_fixes(const std::vector<std::uint32_t>& signal, std::uint64_t shift) {
  const std::uint64_t alpha = signal.size();
  for (std::uint64_t t = 0; t < alpha; ++t) {
    const std::uint64_t u = t + shift < alpha ? t + shift : t + shift - alpha;
    if (signal[t] != signal[u]) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

void fill_per_node_periods(const Network& net, const State& s0, DynamicsSummary& summary,
                           std::uint64_t memory_budget_bytes) {
  const NodeId n = net.node_count();
  const std::uint64_t alpha = summary.alpha.convert_to<std::uint64_t>();
  const std::uint64_t window_bytes = alpha * (std::uint64_t{n} + 1) * sizeof(std::uint32_t);
  if (alpha == 0 || window_bytes > memory_budget_bytes) return;

  State cur = s0;
  State scratch;
  for (std::uint64_t t = 0; t < summary.tau; ++t) {
    step_into(net, cur, scratch);
    cur.swap(scratch);
  }
  std::vector<State> window;
  window.reserve(alpha);
  for (std::uint64_t t = 0; t < alpha; ++t) {
    window.push_back(cur);
    step_into(net, cur, scratch);
    cur.swap(scratch);
  }

  const std::vector<std::uint64_t> primes = prime_factors(alpha);
  std::vector<std::uint64_t> periods(std::size_t{n} + 1, 0);
  std::vector<std::uint32_t> signal(alpha);
  for (NodeId i = 1; i <= n; ++i) {
    for (std::uint64_t t = 0; t < alpha; ++t) signal[t] = window[t][i];
    std::uint64_t period = alpha;
    for (std::uint64_t q : primes) {
      while (period % q == 0 && shift_fixes(signal, period / q)) period /= q;
    }
    periods[i] = period;
  }
  summary.per_node_period = std::move(periods);
}

}  // namespace

DynamicsSummary detect_hashing(const Network& net, const State& s0, const DetectOptions& opt) {
  require_valid_state(net, s0);
  const RawDetection raw = detect_raw(net, s0, opt.step_cap, opt.memory_budget_bytes);
  DynamicsSummary summary;
  if (raw.capped) {
    summary.capped_alpha = summary.capped_tau = true;
    summary.tau = 0;
    summary.alpha = 0;
    return summary;
  }
  summary.tau = raw.tau;
  summary.alpha = raw.alpha;
  if (opt.per_node_periods) {
    fill_per_node_periods(net, s0, summary, opt.memory_budget_bytes);
  }
  if (opt.min_cycling) {
    summary.min_cycling_onset = classify_min_cycling(net, s0, summary);
  }
  return summary;
}

DynamicsSummary detect_decomposed(const Network& net, const State& s0,
                                  const DecomposeOptions& opt) {
  require_valid_state(net, s0);
  const Condensation cond = condense(net.graph);
  std::vector<std::uint32_t> targets;
  if (opt.mode == DecomposeMode::sink_components) {
    targets = cond.sinks();
  } else {
    targets.resize(cond.component_count());
    for (std::uint32_t c = 0; c < targets.size(); ++c) targets[c] = c;
  }

  DynamicsSummary total;
  DetectOptions part_opt;
  part_opt.step_cap = opt.component_step_cap;
  part_opt.memory_budget_bytes = opt.memory_budget_bytes;
  part_opt.per_node_periods = false;
  part_opt.min_cycling = false;
  for (std::uint32_t comp : targets) {
    const std::vector<NodeId> nodes = upstream(net.graph, cond.members[comp]);
    auto [sub, mapping] = induced_subgraph(net.graph, nodes);
    Network subnet;
    subnet.graph = std::move(sub);
    subnet.p.resize(nodes.size() + 1);
    subnet.th.resize(nodes.size() + 1);
    State subs0(nodes.size() + 1, 0);
    for (std::size_t k = 0; k < mapping.size(); ++k) {
      subnet.p[k + 1] = net.p[mapping[k]];
      subnet.th[k + 1] = net.th[mapping[k]];
      subs0[k + 1] = s0[mapping[k]];
    }
    const DynamicsSummary part = detect_hashing(subnet, subs0, part_opt);
    if (part.capped_alpha) {
      total.capped_alpha = true;
    } else {
      total.alpha = boost::multiprecision::lcm(total.alpha, part.alpha);
    }
    if (part.capped_tau) {
      total.capped_tau = true;
    } else {
      total.tau = std::max(total.tau, part.tau);
    }
  }
  return total;
}

std::vector<std::optional<std::uint64_t>> classify_min_cycling(const Network& net,
                                                               const State& s0,
                                                               const DynamicsSummary& summary) {
  require_valid_state(net, s0);
  if (summary.capped()) {
    throw std::invalid_argument("classify_min_cycling: summary is capped");
  }
  if (summary.alpha > std::numeric_limits<std::uint64_t>::max() - summary.tau) {
    throw std::length_error("classify_min_cycling: attractor too long to scan");
  }
  const std::uint64_t alpha = summary.alpha.convert_to<std::uint64_t>();
  const std::uint64_t horizon = summary.tau + alpha;

  const NodeId n = net.node_count();
  // A stall at t >= tau recurs every alpha steps; a stall before tau happens
  // once. One pass over [0, tau + alpha) decides both cases.
  std::vector<std::uint64_t> last_transient_stall(std::size_t{n} + 1, 0);
  std::vector<char> has_transient_stall(std::size_t{n} + 1, 0);
  std::vector<char> recurring_stall(std::size_t{n} + 1, 0);
  State cur = s0;
  State next;
  for (std::uint64_t t = 0; t < horizon; ++t) {
    step_into(net, cur, next);
    for (NodeId i = 1; i <= n; ++i) {
      if (cur[i] == net.p[i] && next[i] == net.p[i]) {
        if (t >= summary.tau) {
          recurring_stall[i] = 1;
        } else {
          has_transient_stall[i] = 1;
          last_transient_stall[i] = t;
        }
      }
    }
    cur.swap(next);
  }

  std::vector<std::optional<std::uint64_t>> onset(std::size_t{n} + 1);
  for (NodeId i = 1; i <= n; ++i) {
    if (recurring_stall[i]) {
      onset[i] = std::nullopt;
    } else if (has_transient_stall[i]) {
      onset[i] = last_transient_stall[i] + 1;
    } else {
      onset[i] = 0;
    }
  }
  return onset;
}

OneCycleVerdict check_one_cycle_bounds(const Network& net, const DynamicsSummary& result) {
  if (result.capped()) {
    throw std::invalid_argument("check_one_cycle_bounds: summary is capped");
  }
  bool truncated = false;
  const auto cycles = find_cycles(net.graph, 2, 0, &truncated);
  if (truncated && cycles.size() < 2) {
    throw std::runtime_error("check_one_cycle_bounds: cycle enumeration inconclusive");
  }
  if (cycles.size() != 1) {
    throw std::invalid_argument("check_one_cycle_bounds: graph must contain exactly one cycle");
  }

  OneCycleVerdict verdict;
  verdict.cycle_length = static_cast<std::uint32_t>(cycles[0].size());
  if (result.alpha > 1) {
    verdict.gcd_ok =
        boost::multiprecision::gcd(result.alpha, BigInt(verdict.cycle_length)) > 1;
  }
  verdict.supersimple = is_supersimple(net.graph).value_or(false);
  if (verdict.supersimple) {
    verdict.longest_path_length = longest_path(net.graph, 64);
    const std::uint32_t pstar = net.max_p();
    verdict.tau_bound = 2 * BigInt(verdict.longest_path_length) +
                        (boost::multiprecision::pow(BigInt(pstar + 1), pstar) + 1) *
                            verdict.cycle_length +
                        4 * BigInt(pstar) - 3;
    verdict.tau_bound_ok = BigInt(result.tau) <= verdict.tau_bound;
  }
  return verdict;
}

}  // namespace refnet
