#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "refnet/constructions.hpp"
#include "refnet/detect.hpp"
#include "refnet/network.hpp"
#include "refnet/rng.hpp"
#include "support/brute.hpp"

using refnet::BigInt;
using refnet::DecomposeMode;
using refnet::DecomposeOptions;
using refnet::DetectOptions;
using refnet::Digraph;
using refnet::DynamicsSummary;
using refnet::Network;
using refnet::NodeId;
using refnet::Rng;
using refnet::State;

namespace {

Network make_net(NodeId n, std::initializer_list<std::pair<NodeId, NodeId>> arcs,
                 std::vector<std::uint32_t> p, std::vector<std::uint32_t> th) {
  Network net{Digraph(n), std::move(p), std::move(th)};
  net.p.insert(net.p.begin(), 0);
  net.th.insert(net.th.begin(), 0);
  for (auto [a, b] : arcs) net.graph.add_arc(a, b);
  net.validate();
  return net;
}

Network remark_net() {
  return make_net(3, {{1, 2}, {2, 1}, {1, 3}}, {1, 1, 2}, {1, 1, 1});
}

State st(std::initializer_list<std::uint32_t> values) {
  State s{0};
  s.insert(s.end(), values);
  return s;
}

Network fuzz_net(Rng& rng, NodeId max_n, std::uint32_t p_hi, std::uint32_t th_hi) {
  const auto n = static_cast<NodeId>(rng.between(1, max_n));
  const double c = 0.5 + 1.5 * rng.unit();
  Digraph g = gen_erdos_renyi(n, std::min(c / n, 1.0), rng);
  return random_network(std::move(g), 1, p_hi, 1, th_hi, rng);
}

}  // namespace

TEST_CASE("three-node example measured by both detectors") {
  const Network net = remark_net();
  const State s0 = st({0, 1, 1});

  const DynamicsSummary h = detect_hashing(net, s0);
  CHECK(h.tau == 0);
  CHECK(h.alpha == 4);
  CHECK_FALSE(h.capped());
  REQUIRE(h.per_node_period.has_value());
  const auto& periods = *h.per_node_period;
  CHECK(periods[1] == 2);
  CHECK(periods[2] == 2);
  CHECK(periods[3] == 4);

  const DynamicsSummary d = detect_decomposed(net, s0);
  CHECK(d.tau == 0);
  CHECK(d.alpha == 4);
  CHECK_FALSE(d.capped());
}

TEST_CASE("fixed point measures as a length-one attractor") {
  const Network net = remark_net();
  const DynamicsSummary h = detect_hashing(net, steady_state(net));
  CHECK(h.tau == 0);
  CHECK(h.alpha == 1);
}

TEST_CASE("a loop that fires in lockstep dies into the fixed point") {
  const Network net = make_net(2, {{1, 2}, {2, 1}}, {1, 1}, {1, 1});
  const DynamicsSummary h = detect_hashing(net, st({0, 0}));
  CHECK(h.tau == 1);
  CHECK(h.alpha == 1);
}

TEST_CASE("detectors and the brute-force walk agree on fuzzed instances") {
  Rng rng(1001);
  for (int k = 0; k < 300; ++k) {
    const Network net = fuzz_net(rng, 10, 2, 2);
    const State s0 = random_state(net, rng);
    const auto expected = brute::tau_alpha(net, s0);
    const DynamicsSummary h = detect_hashing(net, s0);
    const DynamicsSummary d = detect_decomposed(net, s0);
    REQUIRE_FALSE(h.capped());
    REQUIRE_FALSE(d.capped());
    CHECK(h.tau == expected.tau);
    CHECK(h.alpha == expected.alpha);
    CHECK(d.tau == expected.tau);
    CHECK(d.alpha == expected.alpha);
  }
}

TEST_CASE("constant-memory fallback still reports exact values") {
  Rng rng(1002);
  DetectOptions tiny;
  tiny.memory_budget_bytes = 64;
  for (int k = 0; k < 150; ++k) {
    const Network net = fuzz_net(rng, 10, 2, 2);
    const State s0 = random_state(net, rng);
    const DynamicsSummary a = detect_hashing(net, s0);
    const DynamicsSummary b = detect_hashing(net, s0, tiny);
    CHECK(a.tau == b.tau);
    CHECK(a.alpha == b.alpha);
    // periods need one full attractor window in memory, so a budget too small
    // for the window leaves them unset
    if (b.per_node_period.has_value()) CHECK(a.per_node_period == b.per_node_period);
  }
}

TEST_CASE("fallback fills per-node periods when the window fits the budget") {
  const refnet::SeededNetwork sn = refnet::disjoint_union(
      refnet::build_restless_cycle(5), refnet::build_restless_cycle(7));
  // 18 states fit the table, the 35-step orbit does not, the period window does
  DetectOptions mid;
  mid.memory_budget_bytes = 2048;
  const DynamicsSummary full = detect_hashing(sn.net, sn.state);
  const DynamicsSummary b = detect_hashing(sn.net, sn.state, mid);
  CHECK(b.tau == 0);
  CHECK(b.alpha == 35);
  REQUIRE(b.per_node_period.has_value());
  CHECK(b.per_node_period == full.per_node_period);
  for (refnet::NodeId i = 1; i <= 5; ++i) CHECK(b.per_node_period->at(i) == 5);
  for (refnet::NodeId i = 6; i <= 12; ++i) CHECK(b.per_node_period->at(i) == 7);
}

TEST_CASE("the cap boundary is exact on a known four-state orbit") {
  const refnet::SeededNetwork sn = refnet::build_restless_cycle(4);
  DetectOptions opt;
  opt.step_cap = 4;
  const DynamicsSummary fits = detect_hashing(sn.net, sn.state, opt);
  CHECK_FALSE(fits.capped());
  CHECK(fits.alpha == 4);

  opt.step_cap = 3;
  const DynamicsSummary over = detect_hashing(sn.net, sn.state, opt);
  CHECK(over.capped());
  CHECK(over.capped_alpha);
  CHECK(over.capped_tau);
  CHECK(over.alpha == 0);
  CHECK(over.tau == 0);

  DecomposeOptions dopt;
  dopt.component_step_cap = 3;
  CHECK(detect_decomposed(sn.net, sn.state, dopt).capped());
  dopt.component_step_cap = 4;
  CHECK_FALSE(detect_decomposed(sn.net, sn.state, dopt).capped());
}

TEST_CASE("per-node periods divide the attractor length and join back to it") {
  Rng rng(1003);
  for (int k = 0; k < 200; ++k) {
    const Network net = fuzz_net(rng, 10, 2, 2);
    const State s0 = random_state(net, rng);
    const DynamicsSummary h = detect_hashing(net, s0);
    REQUIRE(h.per_node_period.has_value());
    BigInt joined = 1;
    for (NodeId i = 1; i <= net.node_count(); ++i) {
      const std::uint64_t period = (*h.per_node_period)[i];
      CHECK(h.alpha % period == 0);
      joined = lcm(joined, BigInt(period));
    }
    CHECK(joined == h.alpha);
  }
}

TEST_CASE("disjoint orbit lengths combine through the least common multiple") {
  const refnet::SeededNetwork sn =
      disjoint_union(refnet::build_restless_cycle(3), refnet::build_restless_cycle(5));
  const DynamicsSummary d = detect_decomposed(sn.net, sn.state);
  CHECK(d.alpha == 15);
  CHECK(d.tau == 0);
  const DynamicsSummary h = detect_hashing(sn.net, sn.state);
  CHECK(h.alpha == 15);

  REQUIRE(h.per_node_period.has_value());
  CHECK((*h.per_node_period)[1] == 3);
  CHECK((*h.per_node_period)[4] == 5);
}

TEST_CASE("four coprime loops exceed a small cap yet decompose exactly") {
  refnet::SeededNetwork sn = disjoint_union(
      disjoint_union(refnet::build_restless_cycle(3), refnet::build_restless_cycle(5)),
      disjoint_union(refnet::build_restless_cycle(7), refnet::build_restless_cycle(11)));
  const DynamicsSummary d = detect_decomposed(sn.net, sn.state);
  CHECK_FALSE(d.capped());
  CHECK(d.alpha == 1155);
  CHECK(d.tau == 0);

  DetectOptions small;
  small.step_cap = 100;
  CHECK(detect_hashing(sn.net, sn.state, small).capped());
}

TEST_CASE("sink-only and per-node decompositions agree") {
  Rng rng(1004);
  DecomposeOptions all;
  all.mode = DecomposeMode::all_upstreams;
  for (int k = 0; k < 150; ++k) {
    const Network net = fuzz_net(rng, 10, 2, 2);
    const State s0 = random_state(net, rng);
    const DynamicsSummary sinks = detect_decomposed(net, s0);
    const DynamicsSummary full = detect_decomposed(net, s0, all);
    CHECK(sinks.tau == full.tau);
    CHECK(sinks.alpha == full.alpha);
  }
}

TEST_CASE("resolved stall onsets on the three-node example") {
  const Network net = remark_net();
  const State s0 = st({0, 1, 1});
  const DynamicsSummary h = detect_hashing(net, s0);
  const auto onsets = classify_min_cycling(net, s0, h);
  REQUIRE(onsets.size() == 4);
  CHECK(onsets[1] == 0);
  CHECK(onsets[2] == 0);
  CHECK_FALSE(onsets[3].has_value());  // stalls at p forever, every fourth step
}

TEST_CASE("stall onsets at the fixed point never resolve") {
  const Network net = remark_net();
  const State s0 = steady_state(net);
  const auto onsets = classify_min_cycling(net, s0, detect_hashing(net, s0));
  for (NodeId i = 1; i <= 3; ++i) CHECK_FALSE(onsets[i].has_value());
}

TEST_CASE("staircase cycle nodes cycle minimally from the start") {
  const refnet::SeededNetwork sn = refnet::build_staircase_cycle(6, 1);
  const auto onsets = classify_min_cycling(sn.net, sn.state, detect_hashing(sn.net, sn.state));
  for (NodeId i = 1; i <= 6; ++i) CHECK(onsets[i] == 0);
}

TEST_CASE("stall classification rejects capped summaries") {
  const refnet::SeededNetwork sn = refnet::build_restless_cycle(4);
  DetectOptions opt;
  opt.step_cap = 2;
  const DynamicsSummary capped = detect_hashing(sn.net, sn.state, opt);
  CHECK_THROWS_AS(static_cast<void>(classify_min_cycling(sn.net, sn.state, capped)),
                  std::invalid_argument);
}

TEST_CASE("the detector summary flags agree with requested detail") {
  const Network net = remark_net();
  DetectOptions opt;
  opt.per_node_periods = false;
  const DynamicsSummary h = detect_hashing(net, st({0, 1, 1}), opt);
  CHECK_FALSE(h.per_node_period.has_value());
  opt.min_cycling = true;
  const DynamicsSummary m = detect_hashing(net, st({0, 1, 1}), opt);
  REQUIRE(m.min_cycling_onset.has_value());
  CHECK((*m.min_cycling_onset)[1] == 0);
  CHECK_FALSE((*m.min_cycling_onset)[3].has_value());
}

TEST_CASE("single-loop interlock between orbit length and loop length") {
  const Network net = remark_net();
  const DynamicsSummary h = detect_hashing(net, st({0, 1, 1}));
  const refnet::OneCycleVerdict v = check_one_cycle_bounds(net, h);
  CHECK(v.cycle_length == 2);
  REQUIRE(v.gcd_ok.has_value());
  CHECK(*v.gcd_ok);
  CHECK(v.all_hold());

  const Network acyclic = make_net(2, {{1, 2}}, {1, 1}, {1, 1});
  const DynamicsSummary a = detect_hashing(acyclic, st({0, 1}));
  CHECK_THROWS_AS(static_cast<void>(check_one_cycle_bounds(acyclic, a)),
                  std::invalid_argument);
}

TEST_CASE("single-loop transient bound holds across a random sample") {
  Rng rng(1005);
  int checked = 0;
  while (checked < 1000) {
    const auto n = static_cast<NodeId>(rng.between(2, 15));
    const double c = 0.5 + 1.0 * rng.unit();
    Digraph g = gen_erdos_renyi(n, std::min(c / n, 1.0), rng);
    if (is_supersimple(g) != true) continue;
    bool trunc = false;
    if (find_cycles(g, 2, 0, &trunc).size() != 1 || trunc) continue;
    const auto p_hi = static_cast<std::uint32_t>(rng.between(1, 2));
    const Network net = random_network(std::move(g), 1, p_hi, 1, 2, rng);
    const State s0 = random_state(net, rng);
    const DynamicsSummary h = detect_hashing(net, s0);
    if (h.capped()) continue;
    const refnet::OneCycleVerdict v = check_one_cycle_bounds(net, h);
    REQUIRE(v.supersimple);
    REQUIRE(v.tau_bound_ok.has_value());
    CHECK(*v.tau_bound_ok);
    CHECK(v.all_hold());
    ++checked;
  }
}
