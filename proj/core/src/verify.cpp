#include "refnet/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "refnet/constructions.hpp"
#include "refnet/detect.hpp"
#include "refnet/digraph.hpp"
#include "refnet/experiments.hpp"
#include "refnet/io.hpp"
#include "refnet/network.hpp"
#include "refnet/rng.hpp"

namespace refnet {

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

struct Tally {
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  void require(bool ok, const std::string& detail_on_fail) {
    ++applicable;
    if (!ok) {
      ++violations;
      if (first_violation.empty()) first_violation = detail_on_fail;
    }
  }

  CheckResult result(std::string name) const {
    CheckResult out;
    out.name = std::move(name);
    out.passed = violations == 0 && applicable > 0;
    out.detail =
        "applicable=" + std::to_string(applicable) + " violations=" + std::to_string(violations);
    if (applicable == 0) out.detail += " (vacuous)";
    if (!first_violation.empty()) out.detail += "; first: " + first_violation;
    return out;
  }
};

CheckResult simple_check(std::string name, bool passed, std::string detail) {
  return CheckResult{std::move(name), passed, std::move(detail)};
}

struct Restricted {
  Network net;
  std::vector<NodeId> labels;  // result node k corresponds to labels[k-1]
};

Restricted restrict_network(const Network& net, std::span<const NodeId> nodes) {
  auto [sub, labels] = induced_subgraph(net.graph, nodes);
  Restricted out{Network{std::move(sub), {}, {}}, std::move(labels)};
  out.net.p.assign(out.labels.size() + 1, 0);
  out.net.th.assign(out.labels.size() + 1, 0);
  for (std::size_t k = 0; k < out.labels.size(); ++k) {
    out.net.p[k + 1] = net.p[out.labels[k]];
    out.net.th[k + 1] = net.th[out.labels[k]];
  }
  return out;
}

State restrict_state(const State& s, std::span<const NodeId> labels) {
  State out(labels.size() + 1, 0);
  for (std::size_t k = 0; k < labels.size(); ++k) out[k + 1] = s[labels[k]];
  return out;
}

DetectOptions fast_options() {
  DetectOptions opt;
  opt.per_node_periods = false;
  return opt;
}

// Appends one listener node with an arc from `feeder`, threshold 1 and the
// given refractory period and initial state.
SeededNetwork with_listener(const SeededNetwork& base, NodeId feeder, std::uint32_t p_listener,
                            std::uint32_t s_listener) {
  const NodeId n = base.net.node_count();
  Digraph g(n + 1);
  for (NodeId src = 1; src <= n; ++src)
    for (NodeId dst : base.net.graph.out_neighbors(src)) g.add_arc(src, dst);
  g.add_arc(feeder, n + 1);
  SeededNetwork out{Network{std::move(g), base.net.p, base.net.th}, base.state};
  out.net.p.push_back(p_listener);
  out.net.th.push_back(1);
  out.state.push_back(s_listener);
  return out;
}

// Within every maximal stall-free interval of `feeder`, `listener` (whose
// only in-neighbor is `feeder`, with threshold 1 and refractory period one
// short of a multiple of the feeder's cycle time) may stall at most
// p_feeder times. Intervals that persist through the attractor are
// effectively infinite, so there the listener must not stall at all.
void check_stall_counts(Tally& tally, const Network& net, const State& s0, NodeId feeder,
                        NodeId listener, const std::string& label) {
  DynamicsSummary sum = detect_hashing(net, s0, fast_options());
  if (sum.capped()) return;
  const auto alpha = sum.alpha.convert_to<std::uint64_t>();
  const std::uint64_t window = sum.tau + 2 * alpha;  // stall flags for t in [0, window)
  const std::uint32_t p_feeder = net.p[feeder];
  const std::uint32_t p_listener = net.p[listener];

  std::vector<std::uint8_t> stall_feeder(window), stall_listener(window);
  State cur = s0;
  State next;
  for (std::uint64_t t = 0; t < window; ++t) {
    step_into(net, cur, next);
    stall_feeder[t] = cur[feeder] == p_feeder && next[feeder] == p_feeder;
    stall_listener[t] = cur[listener] == p_listener && next[listener] == p_listener;
    cur.swap(next);
  }

  auto count_listener = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t count = 0;
    for (std::uint64_t t = a; t < b; ++t) count += stall_listener[t];
    return count;
  };

  std::uint64_t t = 0;
  while (t < window) {
    if (stall_feeder[t]) {
      ++t;
      continue;
    }
    const std::uint64_t a = t;
    while (t < window && !stall_feeder[t]) ++t;
    if (t < window) {
      // Bounded interval [a, t): the feeder stalls at time t.
      tally.require(count_listener(a, t) <= p_feeder,
                    label + ": interval [" + std::to_string(a) + "," + std::to_string(t) +
                        ") has " + std::to_string(count_listener(a, t)) + " stalls, feeder p=" +
                        std::to_string(p_feeder));
    } else {
      // The interval runs out of the window. If the feeder never stalls
      // inside the attractor the interval is infinite and the listener must
      // settle; otherwise this tail repeats a bounded interval already
      // covered by the two attractor periods above.
      bool feeder_stalls_in_attractor = false;
      for (std::uint64_t u = sum.tau; u < sum.tau + alpha; ++u)
        if (stall_feeder[u]) feeder_stalls_in_attractor = true;
      if (!feeder_stalls_in_attractor)
        tally.require(count_listener(sum.tau, sum.tau + alpha) == 0,
                      label + ": feeder never stalls but listener stalls in the attractor");
    }
  }
}

}  // namespace

SuiteReport verify_invariants(std::uint64_t seed, std::uint32_t cases) {
  Rng rng(seed);
  Tally min_alpha, restriction, acyclic_bound, two_valued, one_cycle, stall, composition;

  auto check_min_alpha = [&](const Network& net, const DynamicsSummary& sum,
                             const std::string& label) {
    if (sum.capped() || sum.alpha <= 1) return;
    min_alpha.require(sum.alpha >= net.min_p() + 1,
                      label + ": alpha=" + sum.alpha.str() +
                          " min_p=" + std::to_string(net.min_p()));
  };

  // The whole-system attractor is the lcm, and the transient the max, over
  // the upstream-closed subsystems.
  auto check_composition = [&](const Network& net, const State& s0, const DynamicsSummary& sum,
                               const std::string& label) {
    if (sum.capped()) return;
    DecomposeOptions opt;
    opt.mode = DecomposeMode::all_upstreams;
    DynamicsSummary parts = detect_decomposed(net, s0, opt);
    composition.require(!parts.capped() && parts.alpha == sum.alpha && parts.tau == sum.tau,
                        label + ": upstream lcm/max gave alpha=" + parts.alpha.str() +
                            " tau=" + std::to_string(parts.tau) + ", whole system alpha=" +
                            sum.alpha.str() + " tau=" + std::to_string(sum.tau));
  };

  for (std::uint32_t k = 0; k < cases; ++k) {
    const auto n = static_cast<NodeId>(rng.between(1, 12));
    const double c = 0.5 + 1.5 * rng.unit();
    Digraph g = gen_erdos_renyi(n, std::min(c / n, 1.0), rng);
    const auto p_hi = static_cast<std::uint32_t>(rng.between(1, 2));
    const auto th_hi = static_cast<std::uint32_t>(rng.between(1, 2));
    Network net = random_network(Digraph(g), 1, p_hi, 1, th_hi, rng);
    State s0 = random_state(net, rng);
    const std::string label = "case " + std::to_string(k);

    DynamicsSummary sum = detect_hashing(net, s0, fast_options());
    check_min_alpha(net, sum, label);
    check_composition(net, s0, sum, label);

    // Restriction to an upstream closure reproduces the closed trajectory.
    const auto target = static_cast<NodeId>(rng.between(1, n));
    std::vector<NodeId> closure = upstream(g, target);
    Restricted res = restrict_network(net, closure);
    State sub0 = restrict_state(s0, res.labels);
    {
      constexpr std::uint64_t kSteps = 50;
      State full = s0, sub = sub0, full_next, sub_next;
      bool agree = true;
      for (std::uint64_t t = 0; t < kSteps && agree; ++t) {
        step_into(net, full, full_next);
        full.swap(full_next);
        step_into(res.net, sub, sub_next);
        sub.swap(sub_next);
        for (std::size_t m = 0; m < res.labels.size(); ++m)
          if (sub[m + 1] != full[res.labels[m]]) agree = false;
      }
      restriction.require(agree, label + ": restricted run diverged, target=" +
                                     std::to_string(target));
    }

    // Nodes whose upstream closure is acyclic settle to the steady state
    // within the longest-path bound.
    {
      bool trunc = false;
      auto cyc = find_cycles(res.net.graph, 1, 0, &trunc);
      if (cyc.empty() && !trunc) {
        DynamicsSummary rsum = detect_hashing(res.net, sub0, fast_options());
        const std::uint64_t bound = longest_path(res.net.graph) + res.net.max_p();
        acyclic_bound.require(
            !rsum.capped() && rsum.alpha == 1 && rsum.tau <= bound,
            label + ": acyclic upstream gave alpha=" + rsum.alpha.str() +
                " tau=" + std::to_string(rsum.tau) + " bound=" + std::to_string(bound));
      }
    }

    // On an all-(p=1, th=1) network, a cycle whose state shows both values
    // keeps showing both values.
    {
      bool trunc = false;
      auto cycles = find_cycles(g, 1, 0, &trunc);
      if (!cycles.empty()) {
        Network unit = random_network(Digraph(g), 1, 1, 1, 1, rng);
        State s = random_state(unit, rng);
        const std::vector<NodeId>& cyc = cycles.front();
        s[cyc[0]] = 0;
        s[cyc[1]] = 1;
        State next;
        bool holds = true;
        for (int t = 0; t < 10 && holds; ++t) {
          step_into(unit, s, next);
          s.swap(next);
          bool has0 = false, has1 = false;
          for (NodeId v : cyc) {
            has0 = has0 || s[v] == 0;
            has1 = has1 || s[v] == 1;
          }
          holds = has0 && has1;
        }
        two_valued.require(holds, label + ": cycle lost one of its values");
      }
    }

    // Graphs with exactly one cycle: gcd and supersimple transient bounds.
    {
      bool trunc = false;
      auto cycles = find_cycles(g, 2, 0, &trunc);
      if (cycles.size() == 1 && !trunc && !sum.capped()) {
        OneCycleVerdict verdict = check_one_cycle_bounds(net, sum);
        one_cycle.require(verdict.all_hold(),
                          label + ": cycle_length=" + std::to_string(verdict.cycle_length) +
                              " alpha=" + sum.alpha.str() + " tau=" + std::to_string(sum.tau) +
                              " bound=" + verdict.tau_bound.str());
      }
    }
  }

  // Stall counting along a locked arc, on constructed instances: a listener
  // driven by a node of a staircase cycle (which never stalls) and by a node
  // of a pulse cycle (which stalls between pulses).
  for (std::uint32_t p_feeder = 1; p_feeder <= 3; ++p_feeder) {
    const std::uint32_t l = 2 * (p_feeder + 1);
    for (std::uint32_t m = 1; m <= 2; ++m) {
      const std::uint32_t p_listener = m * (p_feeder + 1) - 1;
      for (std::uint32_t s = 0; s <= p_listener; ++s) {
        SeededNetwork sn = with_listener(build_staircase_cycle(l, p_feeder), 1, p_listener, s);
        check_stall_counts(stall, sn.net, sn.state, 1, l + 1,
                           "staircase l=" + std::to_string(l) + " p=" + std::to_string(p_feeder) +
                               " listener p=" + std::to_string(p_listener) +
                               " s0=" + std::to_string(s));
      }
    }
  }
  for (auto [l, p_feeder] : {std::pair<std::uint32_t, std::uint32_t>{4, 1}, {5, 2}, {7, 3}}) {
    for (std::uint32_t m = 1; m <= 2; ++m) {
      const std::uint32_t p_listener = m * (p_feeder + 1) - 1;
      for (std::uint32_t s : {std::uint32_t{0}, p_listener}) {
        SeededNetwork sn = with_listener(build_pulse_cycle(l, p_feeder), 1, p_listener, s);
        check_stall_counts(stall, sn.net, sn.state, 1, l + 1,
                           "pulse l=" + std::to_string(l) + " p=" + std::to_string(p_feeder) +
                               " listener p=" + std::to_string(p_listener) +
                               " s0=" + std::to_string(s));
      }
    }
  }

  // The attractor-minimum law also holds on every constructed witness.
  {
    std::vector<std::pair<std::string, SeededNetwork>> witnesses;
    witnesses.emplace_back("restless(5)", build_restless_cycle(5));
    witnesses.emplace_back("pulse(5,2)", build_pulse_cycle(5, 2));
    witnesses.emplace_back("staircase(6,2)", build_staircase_cycle(6, 2));
    const std::uint32_t ks[] = {3, 5};
    witnesses.emplace_back("collector(3,5)", build_cycle_collector(ks));
    witnesses.emplace_back("tree(2,2,1)", build_firing_tree(2, 2, 1));
    witnesses.emplace_back("union(restless(3),restless(5))",
                           disjoint_union(build_restless_cycle(3), build_restless_cycle(5)));
    for (const auto& [name, sn] : witnesses) {
      DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
      check_min_alpha(sn.net, sum, name);
      check_composition(sn.net, sn.state, sum, name);
    }
  }

  SuiteReport report;
  report.suite = "props";
  report.checks.push_back(min_alpha.result("attractors above length 1 reach the min-refractory floor"));
  report.checks.push_back(restriction.result("upstream-closed restriction reproduces the trajectory"));
  report.checks.push_back(acyclic_bound.result("acyclic upstream settles within longest path + max p"));
  report.checks.push_back(two_valued.result("two-valued unit cycles stay two-valued"));
  report.checks.push_back(one_cycle.result("one-cycle gcd and supersimple transient bounds"));
  report.checks.push_back(stall.result("listener stalls per stall-free feeder interval stay below feeder p"));
  report.checks.push_back(
      composition.result("attractor is the lcm and transient the max over upstream closures"));
  return report;
}

SuiteReport verify_cycle_builders() {
  Tally restless, restless_golden, pulse_div, pulse_golden, staircase_div, staircase_golden,
      preconditions;

  for (std::uint32_t l = 2; l <= 8; ++l) {
    SeededNetwork sn = build_restless_cycle(l);
    DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
    restless.require(sum.alpha > 1, "l=" + std::to_string(l) + ": alpha=" + sum.alpha.str());
    restless_golden.require(sum.tau == 0 && sum.alpha == l,
                            "l=" + std::to_string(l) + ": tau=" + std::to_string(sum.tau) +
                                " alpha=" + sum.alpha.str());
  }

  for (std::uint32_t l = 2; l <= 8; ++l) {
    for (std::uint32_t p = 1; p + 1 <= l; ++p) {
      SeededNetwork sn = build_pulse_cycle(l, p);
      DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
      pulse_div.require(sum.alpha % l == 0, "l=" + std::to_string(l) + " p=" + std::to_string(p) +
                                                ": alpha=" + sum.alpha.str());
    }
  }
  {
    struct Golden {
      std::uint32_t l, p;
      std::uint64_t tau, alpha;
    };
    const Golden goldens[] = {{3, 1, 0, 3}, {4, 1, 0, 4}, {5, 1, 0, 5},   {5, 2, 1, 5},
                              {7, 2, 1, 7}, {4, 3, 2, 4}, {7, 3, 2, 7},   {12, 2, 1, 12},
                              {11, 1, 0, 11}};
    for (const Golden& gold : goldens) {
      SeededNetwork sn = build_pulse_cycle(gold.l, gold.p);
      DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
      pulse_golden.require(sum.tau == gold.tau && sum.alpha == gold.alpha,
                           "l=" + std::to_string(gold.l) + " p=" + std::to_string(gold.p) +
                               ": tau=" + std::to_string(sum.tau) + " alpha=" + sum.alpha.str() +
                               ", expected " + std::to_string(gold.tau) + "/" +
                               std::to_string(gold.alpha));
    }
  }

  for (std::uint32_t l = 2; l <= 12; ++l) {
    for (std::uint32_t p = 1; p + 1 <= l; ++p) {
      if (l % (p + 1) != 0) continue;
      SeededNetwork sn = build_staircase_cycle(l, p);
      DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
      staircase_div.require(sum.alpha % (p + 1) == 0, "l=" + std::to_string(l) +
                                                          " p=" + std::to_string(p) +
                                                          ": alpha=" + sum.alpha.str());
    }
  }
  {
    struct Golden {
      std::uint32_t l, p;
      std::uint64_t tau, alpha;
    };
    const Golden goldens[] = {{6, 1, 0, 2}, {6, 2, 0, 3},  {12, 2, 0, 3}, {12, 3, 0, 4},
                              {4, 1, 0, 2}, {10, 4, 0, 5}, {9, 2, 0, 3}};
    for (const Golden& gold : goldens) {
      SeededNetwork sn = build_staircase_cycle(gold.l, gold.p);
      DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
      staircase_golden.require(sum.tau == gold.tau && sum.alpha == gold.alpha,
                               "l=" + std::to_string(gold.l) + " p=" + std::to_string(gold.p) +
                                   ": tau=" + std::to_string(sum.tau) +
                                   " alpha=" + sum.alpha.str());
    }
  }

  {
    auto throws = [](auto&& fn) {
      try {
        fn();
      } catch (const std::invalid_argument&) {
        return true;
      }
      return false;
    };
    preconditions.require(throws([] { build_restless_cycle(1); }), "restless l=1 accepted");
    preconditions.require(throws([] { build_pulse_cycle(2, 2); }), "pulse l=2 p=2 accepted");
    preconditions.require(throws([] { build_staircase_cycle(5, 1); }),
                          "staircase l=5 p=1 accepted");
  }

  SuiteReport report;
  report.suite = "nsc";
  report.checks.push_back(restless.result("restless cycles have attractors above length 1"));
  report.checks.push_back(restless_golden.result("restless cycle values: tau = 0, alpha = l"));
  report.checks.push_back(pulse_div.result("pulse cycle attractor is a multiple of l"));
  report.checks.push_back(pulse_golden.result("pulse cycle recorded values"));
  report.checks.push_back(staircase_div.result("staircase attractor is a multiple of p + 1"));
  report.checks.push_back(staircase_golden.result("staircase recorded values"));
  report.checks.push_back(preconditions.result("builders reject invalid parameters"));
  return report;
}

SuiteReport verify_collector_transients() {
  struct Case {
    std::vector<std::uint32_t> ks;
    std::uint64_t recorded_tau;
    std::uint64_t recorded_alpha;
  };
  const std::vector<Case> cases = {
      {{3}, 4, 6},      {{5}, 6, 10},    {{7}, 8, 14},      {{3, 5}, 6, 30},
      {{3, 7}, 10, 42}, {{5, 7}, 8, 70}, {{3, 5, 7}, 10, 210},
  };

  Tally lcm_claim, recorded_alpha, recorded_tau;
  for (const Case& cs : cases) {
    SeededNetwork sn = build_cycle_collector(cs.ks);
    DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
    std::uint64_t lcm = 1;
    for (std::uint32_t k : cs.ks) lcm = std::lcm(lcm, static_cast<std::uint64_t>(k));
    std::string ks_text = "(";
    for (std::size_t i = 0; i < cs.ks.size(); ++i)
      ks_text += (i ? "," : "") + std::to_string(cs.ks[i]);
    ks_text += ")";
    lcm_claim.require(sum.tau == lcm, "ks=" + ks_text + ": claimed tau=" + std::to_string(lcm) +
                                          ", measured tau=" + std::to_string(sum.tau));
    recorded_alpha.require(sum.alpha == cs.recorded_alpha,
                           "ks=" + ks_text + ": alpha=" + sum.alpha.str() + ", recorded " +
                               std::to_string(cs.recorded_alpha));
    recorded_tau.require(sum.tau == cs.recorded_tau,
                         "ks=" + ks_text + ": tau=" + std::to_string(sum.tau) + ", recorded " +
                             std::to_string(cs.recorded_tau));
  }

  SuiteReport report;
  report.suite = "landau";
  report.checks.push_back(lcm_claim.result("collector transient equals lcm of the cycle lengths"));
  report.checks.push_back(recorded_alpha.result("collector attractor matches the recorded value"));
  report.checks.push_back(recorded_tau.result("collector transient matches the recorded value"));
  return report;
}

SuiteReport verify_tree_witnesses(std::uint64_t seed) {
  Rng rng(seed);
  Tally size, structure, golden, bounds, embedding, mutation;

  for (std::uint32_t d = 1; d <= 4; ++d) {
    for (std::uint32_t branching = 2; branching <= 3; ++branching) {
      for (std::uint32_t p = 1; p <= 2; ++p) {
        const std::string label = "d=" + std::to_string(d) + " th=" + std::to_string(branching) +
                                  " p=" + std::to_string(p);
        SeededNetwork sn = build_firing_tree(d, branching, p);
        size.require(sn.net.node_count() == complete_tree_size(d, branching),
                     label + ": size=" + std::to_string(sn.net.node_count()));

        std::vector<NodeId> identity(sn.net.node_count());
        std::iota(identity.begin(), identity.end(), 1);
        structure.require(verify_firing_tree(sn.net, sn.state, identity, d, branching, p),
                          label + ": structure verifier rejected the builder output");

        DynamicsSummary sum = detect_hashing(sn.net, sn.state, fast_options());
        golden.require(!sum.capped() && sum.alpha == 1 && sum.tau == d + p,
                       label + ": tau=" + std::to_string(sum.tau) +
                           " alpha=" + sum.alpha.str());
        bounds.require(!sum.capped() && sum.tau >= d + 1 && sum.tau <= d + p,
                       label + ": tau=" + std::to_string(sum.tau));

        // An untouched copy inside a larger system keeps the whole system's
        // transient at least d + 1 (transients combine by max).
        Digraph host_graph = gen_erdos_renyi(20, 1.2 / 20, rng);
        Network host_net = random_network(std::move(host_graph), 1, 1, 1, 1, rng);
        State host_state = random_state(host_net, rng);
        SeededNetwork host{std::move(host_net), std::move(host_state)};
        SeededNetwork combined = disjoint_union(sn, host);
        DynamicsSummary csum = detect_hashing(combined.net, combined.state, fast_options());
        embedding.require(!csum.capped() && csum.tau >= d + 1,
                          label + ": embedded tau=" + std::to_string(csum.tau));
      }
    }
  }

  {
    // Targeted mutations flip the structure verifier to false.
    const std::uint32_t d = 2, branching = 2, p = 1;
    SeededNetwork sn = build_firing_tree(d, branching, p);
    std::vector<NodeId> identity(sn.net.node_count());
    std::iota(identity.begin(), identity.end(), 1);

    SeededNetwork extra = sn;
    Digraph g(extra.net.node_count());
    for (NodeId src = 1; src <= extra.net.node_count(); ++src)
      for (NodeId dst : extra.net.graph.out_neighbors(src)) g.add_arc(src, dst);
    g.add_arc(4, 5);  // arc between two leaves
    extra.net.graph = std::move(g);
    mutation.require(!verify_firing_tree(extra.net, extra.state, identity, d, branching, p),
                     "extra in-image arc accepted");

    SeededNetwork perturbed = sn;
    perturbed.state[7] = (perturbed.state[7] + 1) % (p + 1);
    mutation.require(!verify_firing_tree(perturbed.net, perturbed.state, identity, d, branching, p),
                     "perturbed leaf state accepted");

    SeededNetwork wrong_p = sn;
    wrong_p.net.p[3] += 1;
    mutation.require(!verify_firing_tree(wrong_p.net, wrong_p.state, identity, d, branching, p),
                     "non-uniform refractory period accepted");
  }

  SuiteReport report;
  report.suite = "tree";
  report.checks.push_back(size.result("tree size matches the closed form"));
  report.checks.push_back(structure.result("builder output passes the structure verifier"));
  report.checks.push_back(golden.result("tree values: alpha = 1, tau = depth + p"));
  report.checks.push_back(bounds.result("tree transient lies in [depth + 1, depth + p]"));
  report.checks.push_back(embedding.result("disjoint embedding keeps tau at least depth + 1"));
  report.checks.push_back(mutation.result("structure verifier rejects targeted mutations"));
  return report;
}

SuiteReport verify_structure_laws(std::uint64_t seed) {
  Rng rng(seed);
  SuiteReport report;
  report.suite = "laws";

  {
    const double rho2 = rho_of_c(2.0);
    const double rho15 = rho_of_c(1.5);
    const bool ok = std::abs(rho2 - 0.796812130020) < 1e-6 &&
                    std::abs(rho15 - 0.582811643866) < 1e-6;
    report.checks.push_back(simple_check(
        "fixed-point solver matches recorded roots", ok,
        "rho(2)=" + format_double(rho2) + " rho(1.5)=" + format_double(rho15)));
  }
  {
    const double near_one = rho_of_c(1.0001);
    report.checks.push_back(simple_check("fixed-point root vanishes continuously toward c = 1",
                                         near_one > 0.0 && near_one < 0.01,
                                         "rho(1.0001)=" + format_double(near_one)));
  }
  {
    bool threw = false;
    try {
      rho_of_c(1.0);
    } catch (const std::domain_error&) {
      threw = true;
    }
    bool threw_low = false;
    try {
      rho_of_c(0.5);
    } catch (const std::domain_error&) {
      threw_low = true;
    }
    report.checks.push_back(simple_check("fixed-point solver rejects c <= 1", threw && threw_low,
                                         threw ? "both rejected" : "c=1 accepted"));
  }
  {
    GraphLawReport laws = estimate_graph_laws(3200, 1.5, 50, rng);
    const double target = rho_of_c(1.5);
    const double diff = std::abs(laws.downstream_fraction_mean - target);
    report.checks.push_back(simple_check(
        "downstream closure fraction matches the fixed-point law", diff <= 0.03,
        "mean=" + format_double(laws.downstream_fraction_mean) + " target=" +
            format_double(target) + " diff=" + format_double(diff)));
  }
  {
    GraphLawReport laws = estimate_graph_laws(1000, 0.8, 500, rng);
    const double target = 0.8 * 0.8 * 0.8 / 3.0;
    double mean = 0.0, se = 0.0;
    for (const CycleLengthLaw& law : laws.cycle_laws)
      if (law.length == 3) {
        mean = law.mean_count;
        se = law.se;
      }
    const bool ok = se > 0.0 && std::abs(mean - target) <= 3.0 * se;
    report.checks.push_back(
        simple_check("three-cycle count matches c^3 / 3", ok,
                     "mean=" + format_double(mean) + " target=" +
                         format_double(target) + " se=" + format_double(se)));
  }
  {
    GraphLawReport laws = estimate_graph_laws(100, 0.0, 30, rng);
    bool zeros = laws.giant_fraction_mean == 0.0 && laws.downstream_fraction_mean == 0.0;
    for (const CycleLengthLaw& law : laws.cycle_laws) zeros = zeros && law.mean_count == 0.0;
    report.checks.push_back(simple_check("empty graphs report zero structure", zeros,
                                         zeros ? "all zero" : "nonzero entry"));
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"props", "nsc", "landau", "tree", "laws"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "props") return verify_invariants(seed, 10000);
  if (name == "nsc") return verify_cycle_builders();
  if (name == "landau") return verify_collector_transients();
  if (name == "tree") return verify_tree_witnesses(seed);
  if (name == "laws") return verify_structure_laws(seed);
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "'; expected one of props, nsc, landau, tree, laws");
}

std::string format_report(const SuiteReport& report) {
  std::string out;
  std::size_t passed = 0;
  for (const CheckResult& check : report.checks) {
    out += check.passed ? "PASS " : "FAIL ";
    out += check.name;
    out += ": ";
    out += check.detail;
    out += '\n';
    if (check.passed) ++passed;
  }
  out += "suite " + report.suite + ": " + std::to_string(passed) + "/" +
         std::to_string(report.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace refnet
